"""Dataset Example DTOs"""
from typing import List, Optional, Union

from pydantic import BaseModel, Field, field_validator

from app.application.dtos.request.annotation_document_dto import AnnotationDocumentDTO


PASSAGE_SEPARATOR = "\n"


class DatasetExampleDTO(BaseModel):
    """
    One dataset line

    context may be a list of passages; they are joined in file order with
    single newlines before any offset-based annotation applies.
    """
    id: str = Field(..., min_length=1)
    question: str = Field(..., min_length=1)
    context: Union[str, List[str]]
    answers: List[str] = Field(default_factory=list)
    annotation: Optional[Union[str, AnnotationDocumentDTO]] = Field(
        None, description="Annotation path relative to the annotation store, or an inline document"
    )

    @field_validator("id", mode="before")
    @classmethod
    def coerce_id(cls, v):
        return str(v) if isinstance(v, int) else v

    @field_validator("context")
    @classmethod
    def join_passages(cls, v):
        if isinstance(v, list):
            return PASSAGE_SEPARATOR.join(v)
        return v

    @field_validator("answers")
    @classmethod
    def drop_empty_answers(cls, v):
        return [answer for answer in v if answer.strip()]


class TimeQAExampleDTO(BaseModel):
    """TimeQA-style line: idx, question, context, targets ("" marks unanswerable)"""
    idx: str
    question: str
    context: Union[str, List[str]]
    targets: List[str] = Field(default_factory=list)

    @field_validator("idx", mode="before")
    @classmethod
    def coerce_idx(cls, v):
        return str(v) if isinstance(v, int) else v

    def to_example(self) -> DatasetExampleDTO:
        return DatasetExampleDTO(
            id=self.idx,
            question=self.question,
            context=self.context,
            answers=self.targets,
        )

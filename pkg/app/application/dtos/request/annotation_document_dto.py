"""Annotation Document DTO - the "tg-annot/1" JSON schema"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


ANNOTATION_SCHEMA = "tg-annot/1"


class EventDTO(BaseModel):
    """Event span"""
    start: int = Field(..., ge=0, description="Start offset into text")
    end: int = Field(..., ge=0, description="End offset into text, exclusive")
    surface: str


class TimexDTO(BaseModel):
    """Timex span with optional normalized value"""
    start: int = Field(..., ge=0)
    end: int = Field(..., ge=0)
    surface: str
    value: Optional[str] = Field(None, description="YYYY, YYYY-MM, YYYY-MM-DD or A/B")


class TlinkDTO(BaseModel):
    """Relation between two annotations, indexed over events then timexes"""
    source: int
    target: int
    relation: str = Field(..., min_length=1, description="One of the six relation labels")


class AnnotationDocumentDTO(BaseModel):
    """
    Annotated document as stored on disk

    Labels are checked by validation, not here, so that unknown labels can be
    reported as findings.
    """
    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "schema": ANNOTATION_SCHEMA,
                "id": "q1",
                "text": "Congress created the Continental Army on June 14, 1775.",
                "events": [{"start": 9, "end": 16, "surface": "created"}],
                "timexes": [{"start": 41, "end": 54, "surface": "June 14, 1775", "value": "1775-06-14"}],
                "tlinks": [{"source": 0, "target": 1, "relation": "SIMULTANEOUS"}],
            }
        },
    )

    format_version: str = Field(ANNOTATION_SCHEMA, alias="schema")
    id: Optional[str] = None
    text: str
    events: List[EventDTO] = Field(default_factory=list)
    timexes: List[TimexDTO] = Field(default_factory=list)
    tlinks: List[TlinkDTO] = Field(default_factory=list)

    @field_validator("format_version")
    @classmethod
    def validate_format_version(cls, v):
        if v != ANNOTATION_SCHEMA:
            raise ValueError(f"Unsupported annotation schema '{v}', expected '{ANNOTATION_SCHEMA}'")
        return v

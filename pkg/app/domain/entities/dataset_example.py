"""Dataset example entity"""
from dataclasses import dataclass, field
from typing import List, Optional

from app.core.exceptions import ValidationError
from app.domain.entities.annotated_document import AnnotatedDocument


@dataclass
class DatasetExample:
    """
    One question paired with its context document

    annotation holds an inline document; annotation_ref names a stored one.
    Both are None when the example brings no annotation of its own.
    """
    id: str
    question: str
    context: str
    answers: List[str] = field(default_factory=list)
    annotation: Optional[AnnotatedDocument] = None
    annotation_ref: Optional[str] = None

    def __post_init__(self):
        if not self.id:
            raise ValidationError("Dataset example must have an id")
        if not self.question.strip():
            raise ValidationError(f"Example '{self.id}' has an empty question")

    @property
    def answerable(self) -> bool:
        return bool(self.answers)

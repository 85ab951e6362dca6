"""Annotation repository interface"""
from abc import ABC, abstractmethod
from typing import List, Optional

from app.domain.entities.annotated_document import AnnotatedDocument


class AnnotationRepository(ABC):
    """
    Annotated document repository interface (port)

    Following Interface Segregation Principle
    """

    @abstractmethod
    def find_by_example_id(self, example_id: str) -> Optional[AnnotatedDocument]:
        """Annotation stored for an example, if any"""
        pass

    @abstractmethod
    def find_by_ref(self, ref: str) -> AnnotatedDocument:
        """Annotation at an explicit reference (path relative to the store)"""
        pass

    @abstractmethod
    def list_example_ids(self) -> List[str]:
        """Ids with a stored annotation, sorted"""
        pass

    @abstractmethod
    def save(self, example_id: str, document: AnnotatedDocument) -> None:
        """Store an annotation under an example id"""
        pass

"""Document annotator interface (port for event/timex extraction)"""
from abc import ABC, abstractmethod

from app.domain.entities.annotated_document import AnnotatedDocument


class DocumentAnnotator(ABC):
    """
    Document annotator interface (port)

    Implementations may wrap an external temporal extractor or work from
    patterns alone. Every returned annotation must satisfy the
    AnnotatedDocument invariants for the given text.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Annotator name for reports"""
        pass

    @abstractmethod
    def annotate(self, text: str) -> AnnotatedDocument:
        """Annotate events, timexes and tlinks in text"""
        pass

"""Pattern-only fallback annotator"""
import logging

from app.domain.entities.annotated_document import AnnotatedDocument, TimexAnnotation
from app.domain.services.chronon import find_time_expressions
from app.domain.services.document_annotator import DocumentAnnotator


logger = logging.getLogger("tempograph.annotators")


class ChrononStubAnnotator(DocumentAnnotator):
    """
    Timex-only annotator for documents without external annotations

    Finds time expressions with the question-time grammar; produces no events
    and no tlinks, so only DT2QT and all-time graphs carry information.
    """

    @property
    def name(self) -> str:
        return "chronon-stub"

    def annotate(self, text: str) -> AnnotatedDocument:
        timexes = [
            TimexAnnotation(match.char_start, match.char_end, match.surface)
            for match in find_time_expressions(text)
        ]
        logger.debug(f"Stub annotator found {len(timexes)} timexes")
        return AnnotatedDocument(text=text, timexes=timexes)

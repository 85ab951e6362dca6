"""Annotation mapper - converts between annotated documents and the on-disk schema"""
from typing import Optional

from app.domain.entities.annotated_document import (
    AnnotatedDocument,
    EventAnnotation,
    TimeLinkAnnotation,
    TimexAnnotation,
)
from app.domain.entities.dataset_example import DatasetExample
from app.application.dtos.request.annotation_document_dto import (
    AnnotationDocumentDTO,
    EventDTO,
    TimexDTO,
    TlinkDTO,
)
from app.application.dtos.request.dataset_example_dto import DatasetExampleDTO


class AnnotationMapper:
    """
    Mapper for AnnotatedDocument and its DTO

    Following Single Responsibility Principle - only handles mapping
    """

    @staticmethod
    def to_entity(dto: AnnotationDocumentDTO) -> AnnotatedDocument:
        return AnnotatedDocument(
            text=dto.text,
            events=[EventAnnotation(e.start, e.end, e.surface) for e in dto.events],
            timexes=[TimexAnnotation(t.start, t.end, t.surface, t.value) for t in dto.timexes],
            tlinks=[TimeLinkAnnotation(t.source, t.target, t.relation) for t in dto.tlinks],
        )

    @staticmethod
    def to_dto(document: AnnotatedDocument, example_id: Optional[str] = None) -> AnnotationDocumentDTO:
        return AnnotationDocumentDTO(
            id=example_id,
            text=document.text,
            events=[EventDTO(start=e.char_start, end=e.char_end, surface=e.surface) for e in document.events],
            timexes=[
                TimexDTO(start=t.char_start, end=t.char_end, surface=t.surface, value=t.value)
                for t in document.timexes
            ],
            tlinks=[TlinkDTO(source=t.source, target=t.target, relation=t.relation) for t in document.tlinks],
        )


class DatasetExampleMapper:
    """Mapper for dataset lines"""

    @staticmethod
    def to_entity(dto: DatasetExampleDTO) -> DatasetExample:
        inline = dto.annotation if isinstance(dto.annotation, AnnotationDocumentDTO) else None
        return DatasetExample(
            id=dto.id,
            question=dto.question,
            context=dto.context,
            answers=list(dto.answers),
            annotation=AnnotationMapper.to_entity(inline) if inline is not None else None,
            annotation_ref=dto.annotation if isinstance(dto.annotation, str) else None,
        )

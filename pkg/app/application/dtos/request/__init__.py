"""Request DTOs"""
from .annotation_document_dto import (
    ANNOTATION_SCHEMA,
    AnnotationDocumentDTO,
    EventDTO,
    TimexDTO,
    TlinkDTO,
)
from .dataset_example_dto import DatasetExampleDTO, TimeQAExampleDTO
from .run_config import FusionMode, RunConfig

__all__ = [
    "ANNOTATION_SCHEMA",
    "AnnotationDocumentDTO",
    "EventDTO",
    "TimexDTO",
    "TlinkDTO",
    "DatasetExampleDTO",
    "TimeQAExampleDTO",
    "FusionMode",
    "RunConfig",
]

"""Repository interfaces (ports) - following Dependency Inversion Principle"""
from .dataset_repository import DatasetRepository
from .annotation_repository import AnnotationRepository
from .run_output_repository import RunOutputRepository

__all__ = ["DatasetRepository", "AnnotationRepository", "RunOutputRepository"]

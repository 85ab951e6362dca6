"""Repository implementations"""
from .jsonl_dataset_repository import JsonlDatasetRepository
from .json_annotation_repository import JsonAnnotationRepository
from .json_run_output_repository import JsonRunOutputRepository

__all__ = [
    "JsonlDatasetRepository",
    "JsonAnnotationRepository",
    "JsonRunOutputRepository",
]

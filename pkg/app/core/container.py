"""Dependency Injection Container"""
from typing import Optional

from app.application.dtos.request.run_config import RunConfig
from app.application.use_cases.compute_stats_use_case import ComputeStatsUseCase
from app.application.use_cases.convert_timeml_use_case import ConvertTimeMLUseCase
from app.application.use_cases.regenerate_composition_table_use_case import RegenerateCompositionTableUseCase
from app.application.use_cases.run_pipeline_use_case import RunPipelineUseCase
from app.application.use_cases.validate_annotations_use_case import ValidateAnnotationsUseCase
from app.core.settings import settings
from app.domain.services.document_annotator import DocumentAnnotator
from app.infrastructure.annotators.chronon_stub_annotator import ChrononStubAnnotator
from app.infrastructure.annotators.timeml_converter import TimeMLConverter
from app.infrastructure.persistence.repositories.json_annotation_repository import JsonAnnotationRepository
from app.infrastructure.persistence.repositories.json_run_output_repository import JsonRunOutputRepository
from app.infrastructure.persistence.repositories.jsonl_dataset_repository import JsonlDatasetRepository


class Container:
    """
    Dependency Injection Container

    Following Dependency Inversion Principle - wires up dependencies
    """

    @staticmethod
    def get_dataset_repository(path: str):
        """Get dataset repository"""
        return JsonlDatasetRepository(path)

    @staticmethod
    def get_annotation_repository(directory: Optional[str]):
        """Get annotation repository, or None without an annotation directory"""
        return JsonAnnotationRepository(directory) if directory else None

    @staticmethod
    def get_output_repository(out_dir: str):
        """Get run output repository"""
        return JsonRunOutputRepository(out_dir)

    @staticmethod
    def get_annotator() -> DocumentAnnotator:
        """Get fallback document annotator"""
        return ChrononStubAnnotator()

    @staticmethod
    def get_run_pipeline_use_case(config: RunConfig):
        """Get run pipeline use case"""
        return RunPipelineUseCase(
            dataset_repo=Container.get_dataset_repository(config.dataset_path),
            output_repo=Container.get_output_repository(config.out_dir),
            annotator=Container.get_annotator(),
            annotation_repo=Container.get_annotation_repository(config.annotations_dir),
            shots_repo=Container.get_dataset_repository(config.shots_path) if config.shots_path else None,
        )

    @staticmethod
    def get_validate_annotations_use_case(directory: str):
        """Get validate annotations use case"""
        return ValidateAnnotationsUseCase(
            annotation_repo=Container.get_annotation_repository(directory)
        )

    @staticmethod
    def get_compute_stats_use_case(out_dir: str):
        """Get compute stats use case"""
        return ComputeStatsUseCase(
            output_repo=Container.get_output_repository(out_dir)
        )

    @staticmethod
    def get_regenerate_table_use_case(table_path: Optional[str] = None):
        """Get regenerate composition table use case"""
        return RegenerateCompositionTableUseCase(
            packaged_table_path=table_path or settings.composition_table_path
        )

    @staticmethod
    def get_convert_timeml_use_case(out_dir: str):
        """Get convert TimeML use case"""
        return ConvertTimeMLUseCase(
            annotation_repo=Container.get_annotation_repository(out_dir),
            converter=TimeMLConverter(),
        )

"""Use cases - application business logic orchestration"""
from .run_pipeline_use_case import RunPipelineUseCase
from .validate_annotations_use_case import ValidateAnnotationsUseCase
from .compute_stats_use_case import ComputeStatsUseCase
from .regenerate_composition_table_use_case import RegenerateCompositionTableUseCase
from .convert_timeml_use_case import ConvertTimeMLUseCase

__all__ = [
    "RunPipelineUseCase",
    "ValidateAnnotationsUseCase",
    "ComputeStatsUseCase",
    "RegenerateCompositionTableUseCase",
    "ConvertTimeMLUseCase",
]

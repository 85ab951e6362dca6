"""Observability infrastructure for pipeline logging and execution traces"""
from .pipeline_logger import configure_logging, get_pipeline_logger, PipelineObservabilityLogger
from .models import ExecutionTrace, PipelineStage

__all__ = [
    "configure_logging",
    "get_pipeline_logger",
    "PipelineObservabilityLogger",
    "ExecutionTrace",
    "PipelineStage",
]

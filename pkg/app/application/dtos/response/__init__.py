"""Response DTOs"""
from .record_dtos import (
    GNN_SCHEMA,
    EdgeDTO,
    FusedRecordDTO,
    GnnEdgeDTO,
    GnnExportDTO,
    GnnNodeDTO,
    GraphDumpDTO,
    GraphRecordDTO,
    MarkerSpanDTO,
    NodeDTO,
    PromptRecordDTO,
)
from .run_report import EXIT_FATAL, EXIT_OK, EXIT_SKIPPED, CorpusStatsDTO, ExampleErrorDTO, RunReportDTO
from .validation_report import FindingDTO, ValidationReportDTO
from .maintenance_reports import ConversionReportDTO, StatsReportDTO, TableReportDTO

__all__ = [
    "GNN_SCHEMA",
    "EdgeDTO",
    "FusedRecordDTO",
    "GnnEdgeDTO",
    "GnnExportDTO",
    "GnnNodeDTO",
    "GraphDumpDTO",
    "GraphRecordDTO",
    "MarkerSpanDTO",
    "NodeDTO",
    "PromptRecordDTO",
    "EXIT_FATAL",
    "EXIT_OK",
    "EXIT_SKIPPED",
    "CorpusStatsDTO",
    "ExampleErrorDTO",
    "RunReportDTO",
    "FindingDTO",
    "ValidationReportDTO",
    "ConversionReportDTO",
    "StatsReportDTO",
    "TableReportDTO",
]

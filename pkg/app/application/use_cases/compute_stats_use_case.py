"""Compute Stats Use Case"""
import logging
import math
from typing import Any, Dict, List, Optional

from pydantic import ValidationError as PydanticValidationError

from app.core.exceptions import DatasetParseError, InfrastructureError, UseCaseError
from app.domain.repositories.run_output_repository import RunOutputRepository
from app.domain.services.graph_stats import GraphStats, aggregate_stats, degree_stats
from app.application.dtos.response.maintenance_reports import StatsReportDTO
from app.application.dtos.response.record_dtos import GraphDumpDTO, GraphRecordDTO
from app.application.dtos.response.run_report import CorpusStatsDTO
from app.application.mappers.graph_mapper import GraphMapper
from app.application.use_cases.run_pipeline_use_case import GRAPH_FILE


logger = logging.getLogger("tempograph.stats")


def _dump_stats(dump: GraphDumpDTO) -> GraphStats:
    return degree_stats([n.id for n in dump.nodes], [(e.src, e.dst) for e in dump.edges])


def _same(recounted: CorpusStatsDTO, reported: Optional[Dict[str, Any]]) -> bool:
    if not reported:
        return False
    for name, value in recounted.model_dump().items():
        if name not in reported or not math.isclose(value, reported[name], rel_tol=1e-9, abs_tol=1e-12):
            return False
    return True


class ComputeStatsUseCase:
    """
    Compute Stats Use Case

    Recounts graph statistics from a run's graph dump and checks them against
    the run report.
    """

    def __init__(self, output_repo: RunOutputRepository):
        self.output_repo = output_repo

    def execute(self) -> StatsReportDTO:
        """
        Execute the use case

        Raises:
            DatasetParseError: the graph dump is missing or malformed
        """
        try:
            rows = self.output_repo.read_records(GRAPH_FILE)
            records: List[GraphRecordDTO] = []
            for number, row in enumerate(rows, start=1):
                try:
                    records.append(GraphRecordDTO.model_validate(row))
                except PydanticValidationError as e:
                    raise DatasetParseError(f"{GRAPH_FILE}.jsonl", number, f"not a graph record ({e.error_count()} errors)")

            full = GraphMapper.to_stats_dto(aggregate_stats(_dump_stats(r.full) for r in records))
            fused = GraphMapper.to_stats_dto(aggregate_stats(_dump_stats(r.selected) for r in records))

            report = self.output_repo.read_report()
            matches = None
            if report is not None:
                matches = _same(full, report.get("full_graph_stats")) and _same(fused, report.get("fused_graph_stats"))
                if not matches:
                    logger.warning("Recounted graph statistics differ from the run report")
            return StatsReportDTO(
                graphs=len(records),
                full_graph_stats=full,
                fused_graph_stats=fused,
                matches_report=matches,
            )
        except InfrastructureError:
            raise
        except Exception as e:
            raise UseCaseError(f"Failed to compute stats: {str(e)}")

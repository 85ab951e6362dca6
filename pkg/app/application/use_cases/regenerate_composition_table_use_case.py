"""Regenerate Composition Table Use Case"""
import logging
import uuid
from pathlib import Path
from typing import Optional

from app.core.exceptions import DomainException, InfrastructureError, RepositoryError, UseCaseError
from app.domain.services.interval_algebra import (
    GENERATION_WIDTH,
    SOUNDNESS_WIDTH,
    build_composition_table,
    find_counterexamples,
    load_composition_table,
    reconcile,
)
from app.domain.value_objects import TemporalRelation
from app.application.dtos.response.maintenance_reports import TableReportDTO
from app.infrastructure.observability import PipelineStage, get_pipeline_logger


logger = logging.getLogger("tempograph.table")


class RegenerateCompositionTableUseCase:
    """
    Regenerate Composition Table Use Case

    Builds the table from interval semantics, reconciles it with the published
    rules, checks soundness on a wider window and compares it with the table
    the pipeline loads.
    """

    def __init__(self, packaged_table_path: Optional[str] = None):
        self.packaged_table_path = packaged_table_path
        self.observability = get_pipeline_logger()

    def execute(
        self,
        width: int = GENERATION_WIDTH,
        soundness_width: int = SOUNDNESS_WIDTH,
        write_path: Optional[str] = None,
    ) -> TableReportDTO:
        """
        Execute the use case

        Raises:
            OracleInconsistency: the generated table breaks identity or inverse symmetry
            RepositoryError: the table cannot be written
        """
        trace = self.observability.start_execution_trace(str(uuid.uuid4()), "table")
        try:
            with self.observability.step(trace, "generate", PipelineStage.GENERATE, width=width):
                generated = build_composition_table(width)
                table = reconcile(generated)
            reference_differences = [
                f"{r1.value} {r2.value}: published {expected.value}, generated {observed.value}"
                for r1, r2, expected, observed in table.differences(generated)
            ]
            with self.observability.step(trace, "soundness", PipelineStage.VALIDATE, width=soundness_width):
                counterexamples = [
                    f"{r1.value} {r2.value}: table {table.lookup(r1, r2).value}, observed {observed.value}"
                    for r1, r2, observed in find_counterexamples(table, soundness_width)
                ]
            for line in counterexamples:
                logger.error(f"Counterexample: {line}")

            packaged = load_composition_table(self.packaged_table_path)
            matches = not packaged.differences(table)
            if not matches:
                logger.warning("Regenerated table differs from the packaged table")

            text = table.to_text()
            if write_path:
                try:
                    Path(write_path).write_text(text, encoding="utf-8")
                except OSError as e:
                    raise RepositoryError(f"Failed to write {write_path}: {e}")
                logger.info(f"Wrote composition table to {write_path}")

            self.observability.end_execution_trace(trace)
            return TableReportDTO(
                width=width,
                determined_cells=sum(1 for r in table.cells.values() if r != TemporalRelation.UNDETERMINED),
                counterexamples=counterexamples,
                reference_differences=reference_differences,
                matches_packaged=matches,
                table_text=text,
            )
        except (DomainException, InfrastructureError) as e:
            self.observability.end_execution_trace(trace, success=False, error_message=str(e))
            raise
        except Exception as e:
            self.observability.end_execution_trace(trace, success=False, error_message=str(e))
            raise UseCaseError(f"Failed to regenerate composition table: {str(e)}")

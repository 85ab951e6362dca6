"""Pipeline observability logger for tracking command execution traces"""
import json
import logging
import time
from contextlib import contextmanager
from datetime import datetime
from typing import Any, Dict, Iterator, Optional

from app.infrastructure.observability.models import ExecutionTrace, PipelineStage


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
ROOT_LOGGER = "tempograph"


def configure_logging(level: str | int = logging.WARNING) -> logging.Logger:
    """
    Attach one stream handler to the tempograph logger hierarchy

    Safe to call repeatedly; only the level changes after the first call.
    """
    logger = logging.getLogger(ROOT_LOGGER)
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logger.setLevel(level)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    return logger


class PipelineObservabilityLogger:
    """
    Observability logger for pipeline commands

    Logs execution traces; callers hold on to the traces. Nothing here is
    written to run outputs.
    """

    def __init__(self):
        self.logger = logging.getLogger(f"{ROOT_LOGGER}.trace")

    def start_execution_trace(self, trace_id: str, command: str) -> ExecutionTrace:
        """Start a new execution trace"""
        trace = ExecutionTrace(trace_id=trace_id, command=command, start_time=datetime.now())
        self.logger.info(f"Started {command}: {trace_id}")
        return trace

    @contextmanager
    def step(self, trace: ExecutionTrace, step_name: str, stage: PipelineStage, **metadata) -> Iterator[Dict[str, Any]]:
        """Time a block and record it as a step; the yielded dict is merged into the step metadata"""
        extra: Dict[str, Any] = dict(metadata)
        started = time.perf_counter()
        try:
            yield extra
        finally:
            duration = (time.perf_counter() - started) * 1000
            trace.add_step(step_name, stage, duration, extra)
            self.logger.debug(f"[{trace.trace_id}] {step_name} ({stage.value}) {duration:.2f}ms {extra}")

    def end_execution_trace(self, trace: ExecutionTrace, success: bool = True, error_message: Optional[str] = None):
        """End an execution trace"""
        trace.end_time = datetime.now()
        trace.success = success
        trace.error_message = error_message
        self.logger.info(
            f"Completed {trace.command}: {trace.trace_id} | "
            f"Duration: {trace.duration_ms:.2f}ms | "
            f"Steps: {len(trace.steps)} | "
            f"Success: {success}"
        )
        self.logger.debug(f"Trace Details: {json.dumps(trace.to_dict(), indent=2)}")


# Global singleton instance
_pipeline_logger = PipelineObservabilityLogger()


def get_pipeline_logger() -> PipelineObservabilityLogger:
    """Get the global pipeline logger instance"""
    return _pipeline_logger

"""Observability models for pipeline execution traces"""
from typing import Dict, List, Optional, Any
from datetime import datetime
from dataclasses import dataclass, field
from enum import Enum


class PipelineStage(str, Enum):
    """Stages of a pipeline command"""
    LOAD = "load"
    ANNOTATE = "annotate"
    PROCESS = "process"
    WRITE = "write"
    VALIDATE = "validate"
    GENERATE = "generate"


@dataclass
class ExecutionTrace:
    """Tracks one command's flow and timing"""
    trace_id: str
    command: str
    start_time: datetime
    end_time: Optional[datetime] = None
    steps: List[Dict[str, Any]] = field(default_factory=list)
    success: bool = True
    error_message: Optional[str] = None

    def add_step(self, step_name: str, stage: PipelineStage, duration_ms: float, metadata: Optional[Dict] = None):
        """Add a step to the execution trace"""
        self.steps.append({
            "step_name": step_name,
            "stage": stage.value,
            "duration_ms": duration_ms,
            "timestamp": datetime.now().isoformat(),
            "metadata": metadata or {}
        })

    @property
    def duration_ms(self) -> Optional[float]:
        if self.end_time is None:
            return None
        return (self.end_time - self.start_time).total_seconds() * 1000

    def to_dict(self) -> Dict:
        """Convert trace to dictionary for logging"""
        return {
            "trace_id": self.trace_id,
            "command": self.command,
            "start_time": self.start_time.isoformat(),
            "end_time": self.end_time.isoformat() if self.end_time else None,
            "duration_ms": self.duration_ms,
            "steps": self.steps,
            "success": self.success,
            "error_message": self.error_message,
        }

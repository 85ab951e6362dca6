"""Run Report DTOs"""
from typing import List

from pydantic import BaseModel, Field


EXIT_OK = 0
EXIT_FATAL = 1
EXIT_SKIPPED = 2


class CorpusStatsDTO(BaseModel):
    """Per-graph averages, as in the constructed-graph statistics table"""
    graphs: int = 0
    avg_nodes: float = 0.0
    avg_edges: float = 0.0
    avg_in_degree: float = 0.0
    avg_out_degree: float = 0.0


class ExampleErrorDTO(BaseModel):
    """Why an example was skipped"""
    id: str
    error_type: str
    message: str


class RunReportDTO(BaseModel):
    """
    Run report

    processed + skipped + passthrough == total.
    """
    variant: str
    mode: str
    merge3: bool = False
    total: int = 0
    processed: int = 0
    skipped: int = 0
    passthrough: int = 0
    stub_annotated: int = 0
    errors: List[ExampleErrorDTO] = Field(default_factory=list)
    full_graph_stats: CorpusStatsDTO = Field(default_factory=CorpusStatsDTO)
    fused_graph_stats: CorpusStatsDTO = Field(default_factory=CorpusStatsDTO)
    unnormalizable_timexes: int = 0
    undetermined_events: int = 0
    dropped_events: int = 0
    mean_tokens_before: float = 0.0
    mean_tokens_after: float = 0.0

    @property
    def exit_code(self) -> int:
        return EXIT_SKIPPED if self.skipped else EXIT_OK

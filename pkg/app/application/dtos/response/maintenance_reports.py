"""Reports of the stats, table and conversion commands"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.application.dtos.response.run_report import CorpusStatsDTO


class StatsReportDTO(BaseModel):
    """Graph statistics recounted from a run's graph dump"""
    graphs: int = 0
    full_graph_stats: CorpusStatsDTO = Field(default_factory=CorpusStatsDTO)
    fused_graph_stats: CorpusStatsDTO = Field(default_factory=CorpusStatsDTO)
    matches_report: Optional[bool] = Field(None, description="None when the run wrote no report")


class TableReportDTO(BaseModel):
    """Outcome of regenerating the composition table"""
    width: int
    determined_cells: int
    counterexamples: List[str] = Field(default_factory=list)
    reference_differences: List[str] = Field(default_factory=list)
    matches_packaged: bool = True
    table_text: str = ""


class ConversionReportDTO(BaseModel):
    """Outcome of converting TimeML documents"""
    documents: int = 0
    events: int = 0
    timexes: int = 0
    tlinks: int = 0
    dropped_tlinks: Dict[str, int] = Field(default_factory=dict, description="Dropped tlink counts by source label")

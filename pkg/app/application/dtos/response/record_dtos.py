"""Output record DTOs - one per example and output file"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


GNN_SCHEMA = "tg-gnn/1"


class MarkerSpanDTO(BaseModel):
    """Tagged region of fused text"""
    label: str
    start: int
    end: int


class FusedRecordDTO(BaseModel):
    """ERR output line; fused is false for passthrough examples"""
    id: str
    text: str
    marker_spans: List[MarkerSpanDTO] = Field(default_factory=list)
    answers: List[str] = Field(default_factory=list)
    fused: bool = True


class GnnNodeDTO(BaseModel):
    node_id: int
    kind: str
    marker_index: int


class GnnEdgeDTO(BaseModel):
    src: int
    dst: int
    relation_id: int


class GnnExportDTO(BaseModel):
    """Node-marked text plus edge list ("tg-gnn/1")"""
    model_config = ConfigDict(populate_by_name=True)

    format_version: str = Field(GNN_SCHEMA, alias="schema")
    id: str
    marked_text: str
    nodes: List[GnnNodeDTO] = Field(default_factory=list)
    edges: List[GnnEdgeDTO] = Field(default_factory=list)
    relation_vocabulary: List[str] = Field(default_factory=list)
    marker_spans: List[MarkerSpanDTO] = Field(default_factory=list)
    answers: List[str] = Field(default_factory=list)
    fused: bool = True


class PromptRecordDTO(BaseModel):
    """In-context learning prompt line"""
    id: str
    prompt: str
    answers: List[str] = Field(default_factory=list)
    fused: bool = True


class NodeDTO(BaseModel):
    id: int
    kind: str
    start: int
    end: int
    surface: str
    interval: Optional[str] = None


class EdgeDTO(BaseModel):
    src: int
    dst: int
    relation: str
    provenance: str


class GraphDumpDTO(BaseModel):
    """Debug dump of one graph"""
    nodes: List[NodeDTO] = Field(default_factory=list)
    edges: List[EdgeDTO] = Field(default_factory=list)


class GraphRecordDTO(BaseModel):
    """Full and fused graphs of one example"""
    id: str
    full: GraphDumpDTO
    selected: GraphDumpDTO

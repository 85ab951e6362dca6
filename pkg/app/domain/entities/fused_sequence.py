"""Fused sequence and GNN export entities"""
from dataclasses import dataclass, field
from typing import List, Tuple

from app.core.exceptions import ValidationError
from app.domain.entities.temporal_graph import NodeKind
from app.domain.value_objects import TemporalRelation, RELATION_VOCABULARY


@dataclass(frozen=True)
class MarkerSpan:
    """A tagged region of fused text, opening delimiter through closing delimiter"""
    label: str
    char_start: int
    char_end: int


@dataclass(frozen=True)
class FusedSequence:
    """
    Text with delimiters inserted around marked spans

    source_map[i] is the fused offset of original character i; its last entry
    maps the original length to the fused length.
    """
    text: str
    marker_spans: Tuple[MarkerSpan, ...] = ()
    source_map: Tuple[int, ...] = (0,)
    padded: bool = False

    def __post_init__(self):
        if not self.source_map or self.source_map[-1] != len(self.text):
            raise ValidationError("Source map must end at the fused length")
        if any(b <= a for a, b in zip(self.source_map, self.source_map[1:])):
            raise ValidationError("Source map must be strictly increasing")

    def unfused(self) -> str:
        """Original text, recovered through the source map"""
        return "".join(self.text[offset] for offset in self.source_map[:-1])

    @property
    def labels(self) -> List[str]:
        return [span.label for span in self.marker_spans]


@dataclass(frozen=True)
class GnnNode:
    node_id: int
    kind: NodeKind
    marker_index: int


@dataclass(frozen=True)
class GnnEdge:
    src: int
    dst: int
    relation_id: int


@dataclass(frozen=True)
class GnnExport:
    """Node-marked text plus the edge list for relational graph encoders"""
    marked_text: str
    nodes: Tuple[GnnNode, ...]
    edges: Tuple[GnnEdge, ...]
    marker_spans: Tuple[MarkerSpan, ...] = ()
    relation_vocabulary: Tuple[TemporalRelation, ...] = field(default=RELATION_VOCABULARY)

    def __post_init__(self):
        if len(self.marker_spans) != len(self.nodes):
            raise ValidationError(f"{len(self.marker_spans)} markers for {len(self.nodes)} nodes")
        listed = {node.node_id for node in self.nodes}
        for edge in self.edges:
            if edge.src not in listed or edge.dst not in listed:
                raise ValidationError(f"Edge {edge.src}->{edge.dst} references an unlisted node")
            if not 0 <= edge.relation_id < len(self.relation_vocabulary):
                raise ValidationError(f"Relation id {edge.relation_id} out of range")

    def position_of(self, node_id: int) -> int:
        """Row of a node in marker order"""
        for position, node in enumerate(self.nodes):
            if node.node_id == node_id:
                return position
        raise ValidationError(f"Node {node_id} not in export")

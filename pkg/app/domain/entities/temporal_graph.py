"""Temporal graph aggregate - question/document nodes joined by temporal relation edges"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

from app.core.exceptions import ValidationError
from app.domain.value_objects import TimeInterval, TemporalRelation


QUESTION_NODE_ID = 0


class NodeKind(str, Enum):
    """Node kind enumeration"""
    QUESTION_TIME = "question_time"
    DOC_TIME = "doc_time"
    DOC_EVENT = "doc_event"


class Provenance(str, Enum):
    """Where an edge came from"""
    ANNOTATION = "annotation"
    TIME_LINK = "time_link"
    INFERRED = "inferred"


class GraphVariant(str, Enum):
    """Subgraph selected for fusion"""
    FULL = "full"
    DT2QT = "dt2qt"
    DTE2QT = "dte2qt"
    ALL_TIME = "alltime"


@dataclass(frozen=True)
class Node:
    """
    Graph node

    Offsets address the question text for QUESTION_TIME and the document text
    otherwise. DOC_TIME nodes whose timex could not be normalized have no interval.
    """
    id: int
    kind: NodeKind
    char_start: int
    char_end: int
    surface: str
    interval: Optional[TimeInterval] = None

    def __post_init__(self):
        if self.char_start < 0 or self.char_end <= self.char_start:
            raise ValidationError(f"Node {self.id} has invalid span [{self.char_start}, {self.char_end})")
        if self.kind == NodeKind.DOC_EVENT and self.interval is not None:
            raise ValidationError(f"Event node {self.id} cannot carry an interval")
        if self.kind == NodeKind.QUESTION_TIME and self.interval is None:
            raise ValidationError("Question time node requires an interval")

    @property
    def is_question(self) -> bool:
        return self.kind == NodeKind.QUESTION_TIME


@dataclass(frozen=True)
class Edge:
    """Directed relation edge; the inverse direction is virtual"""
    src: int
    dst: int
    relation: TemporalRelation
    provenance: Provenance

    def __post_init__(self):
        if self.src == self.dst:
            raise ValidationError(f"Self-loop on node {self.src}")
        if self.relation == TemporalRelation.UNDETERMINED:
            raise ValidationError("UNDETERMINED cannot label a stored edge")

    @property
    def triple(self) -> Tuple[int, int, TemporalRelation]:
        return (self.src, self.dst, self.relation)


@dataclass(frozen=True)
class TemporalGraph:
    """
    Temporal graph aggregate root

    Immutable once built. Nodes are kept in id order.
    """
    question_text: str
    document_text: str
    nodes: Tuple[Node, ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(sorted(self.nodes, key=lambda n: n.id)))
        object.__setattr__(self, "edges", tuple(self.edges))
        self._validate()

    def _validate(self):
        """Validate graph invariants"""
        ids = [node.id for node in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValidationError("Node ids must be unique")
        questions = [node for node in self.nodes if node.is_question]
        if len(questions) != 1:
            raise ValidationError(f"Graph must have exactly one question time node, got {len(questions)}")

        for node in self.nodes:
            text = self.question_text if node.is_question else self.document_text
            if node.char_end > len(text) or text[node.char_start:node.char_end] != node.surface:
                raise ValidationError(f"Node {node.id} surface '{node.surface}' does not match its offsets")

        known = set(ids)
        seen = set()
        for edge in self.edges:
            if edge.src not in known or edge.dst not in known:
                raise ValidationError(f"Edge {edge.src}->{edge.dst} references an unknown node")
            if edge.triple in seen:
                raise ValidationError(f"Duplicate edge {edge.src}->{edge.dst} {edge.relation.value}")
            seen.add(edge.triple)

    @property
    def question_node(self) -> Node:
        return next(node for node in self.nodes if node.is_question)

    @property
    def node_ids(self) -> Tuple[int, ...]:
        return tuple(node.id for node in self.nodes)

    def node(self, node_id: int) -> Node:
        for node in self.nodes:
            if node.id == node_id:
                return node
        raise ValidationError(f"Node {node_id} not in graph")

    def nodes_of_kind(self, kind: NodeKind) -> Tuple[Node, ...]:
        return tuple(node for node in self.nodes if node.kind == kind)

    def edges_with(self, provenance: Provenance) -> Tuple[Edge, ...]:
        return tuple(edge for edge in self.edges if edge.provenance == provenance)

    def node_index(self) -> Dict[int, Node]:
        return {node.id: node for node in self.nodes}

    def with_parts(self, nodes: Iterable[Node], edges: Iterable[Edge]) -> "TemporalGraph":
        """New graph over the same texts"""
        return TemporalGraph(self.question_text, self.document_text, tuple(nodes), tuple(edges))

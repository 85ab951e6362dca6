"""Domain entities"""
from .annotated_document import (
    AnnotatedDocument,
    AnnotationFinding,
    EventAnnotation,
    FindingKind,
    TimeLinkAnnotation,
    TimexAnnotation,
)
from .temporal_graph import (
    QUESTION_NODE_ID,
    Edge,
    GraphVariant,
    Node,
    NodeKind,
    Provenance,
    TemporalGraph,
)
from .fused_sequence import FusedSequence, GnnEdge, GnnExport, GnnNode, MarkerSpan
from .dataset_example import DatasetExample

__all__ = [
    "AnnotatedDocument",
    "AnnotationFinding",
    "EventAnnotation",
    "FindingKind",
    "TimeLinkAnnotation",
    "TimexAnnotation",
    "QUESTION_NODE_ID",
    "Edge",
    "GraphVariant",
    "Node",
    "NodeKind",
    "Provenance",
    "TemporalGraph",
    "FusedSequence",
    "GnnEdge",
    "GnnExport",
    "GnnNode",
    "MarkerSpan",
    "DatasetExample",
]

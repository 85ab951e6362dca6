"""
Relational graph convolution layer, reference numpy implementation

    h_i' = act( sum_r sum_{j in N_r(i)} (1 / c_ir) W_r h_j + W_0 h_i )

N_r(i) holds the in-neighbors of i under relation r; c_ir is |N_r(i)| or 1.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from app.core.exceptions import DimensionMismatch
from app.domain.entities.fused_sequence import GnnExport
from app.domain.value_objects import RELATION_VOCABULARY


class Activation(str, Enum):
    IDENTITY = "identity"
    RELU = "relu"


class Normalizer(str, Enum):
    """Per-relation neighborhood normalization constant"""
    COUNT = "count"
    ONE = "one"


@dataclass(frozen=True)
class RelConvLayer:
    """One weight matrix per relation in vocabulary order, plus the self-loop weight"""
    relation_weights: np.ndarray
    self_loop_weight: np.ndarray
    activation: Activation = Activation.RELU
    normalizer: Normalizer = Normalizer.COUNT

    def __post_init__(self):
        weights = np.asarray(self.relation_weights, dtype=np.float64)
        self_loop = np.asarray(self.self_loop_weight, dtype=np.float64)
        if weights.ndim != 3 or weights.shape[0] != len(RELATION_VOCABULARY):
            raise DimensionMismatch(
                f"Relation weights must have shape ({len(RELATION_VOCABULARY)}, d_out, d_in), got {weights.shape}"
            )
        if self_loop.shape != weights.shape[1:]:
            raise DimensionMismatch(f"Self-loop weight {self_loop.shape} does not match relation weights {weights.shape[1:]}")
        object.__setattr__(self, "relation_weights", weights)
        object.__setattr__(self, "self_loop_weight", self_loop)

    @property
    def input_dim(self) -> int:
        return self.self_loop_weight.shape[1]

    @property
    def output_dim(self) -> int:
        return self.self_loop_weight.shape[0]

    @classmethod
    def zeros(cls, d_out: int, d_in: int, **kwargs) -> "RelConvLayer":
        return cls(
            np.zeros((len(RELATION_VOCABULARY), d_out, d_in)),
            np.zeros((d_out, d_in)),
            **kwargs,
        )


@dataclass(frozen=True)
class NodeStates:
    """Row i of matrix is the state of node_ids[i]"""
    node_ids: Tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != len(self.node_ids):
            raise DimensionMismatch(f"Expected {len(self.node_ids)} state rows, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise DimensionMismatch("Node states must be finite")
        object.__setattr__(self, "node_ids", tuple(self.node_ids))
        object.__setattr__(self, "matrix", matrix)

    def state(self, node_id: int) -> np.ndarray:
        return self.matrix[self.node_ids.index(node_id)]


def relation_adjacency(export: GnnExport, node_ids: Tuple[int, ...]) -> np.ndarray:
    """Tensor A[r, i, j] = 1 when j -> i is an edge under relation r"""
    row = {node_id: position for position, node_id in enumerate(node_ids)}
    adjacency = np.zeros((len(RELATION_VOCABULARY), len(node_ids), len(node_ids)))
    for edge in export.edges:
        adjacency[edge.relation_id, row[edge.dst], row[edge.src]] = 1.0
    return adjacency


def forward(layer: RelConvLayer, export: GnnExport, h: NodeStates) -> NodeStates:
    """
    Raises:
        DimensionMismatch: states do not cover the export's nodes or widths disagree
    """
    if sorted(h.node_ids) != sorted(node.node_id for node in export.nodes):
        raise DimensionMismatch("Node states do not cover exactly the exported nodes")
    if h.matrix.shape[1] != layer.input_dim:
        raise DimensionMismatch(f"State width {h.matrix.shape[1]} does not match layer input {layer.input_dim}")

    adjacency = relation_adjacency(export, h.node_ids)
    if layer.normalizer == Normalizer.COUNT:
        counts = adjacency.sum(axis=2, keepdims=True)
        adjacency = np.divide(adjacency, counts, out=np.zeros_like(adjacency), where=counts > 0)

    messages = np.einsum("rij,jd,rod->io", adjacency, h.matrix, layer.relation_weights)
    output = messages + h.matrix @ layer.self_loop_weight.T
    if layer.activation == Activation.RELU:
        output = np.maximum(output, 0.0)
    return NodeStates(h.node_ids, output)

"""Graph size and degree statistics"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple

from app.domain.entities.temporal_graph import TemporalGraph


@dataclass(frozen=True)
class GraphStats:
    """Counts over stored (forward) edges of one graph"""
    nodes: int
    edges: int
    mean_in_degree: float
    mean_out_degree: float
    in_degrees: Dict[int, int] = field(default_factory=dict)
    out_degrees: Dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class CorpusStats:
    """Per-graph averages over a corpus"""
    graphs: int = 0
    avg_nodes: float = 0.0
    avg_edges: float = 0.0
    avg_in_degree: float = 0.0
    avg_out_degree: float = 0.0


def degree_stats(node_ids: Sequence[int], edges: Sequence[Tuple[int, int]]) -> GraphStats:
    """Statistics from node ids and (src, dst) pairs, e.g. of a graph dump"""
    in_degrees = {node_id: 0 for node_id in node_ids}
    out_degrees = {node_id: 0 for node_id in node_ids}
    for src, dst in edges:
        out_degrees[src] += 1
        in_degrees[dst] += 1
    count = len(node_ids)
    return GraphStats(
        nodes=count,
        edges=len(edges),
        mean_in_degree=sum(in_degrees.values()) / count,
        mean_out_degree=sum(out_degrees.values()) / count,
        in_degrees=in_degrees,
        out_degrees=out_degrees,
    )


def graph_stats(g: TemporalGraph) -> GraphStats:
    return degree_stats(g.node_ids, [(edge.src, edge.dst) for edge in g.edges])


def aggregate_stats(stats: Iterable[GraphStats]) -> CorpusStats:
    """Average node, edge and degree figures; an empty corpus gives zeros"""
    items = list(stats)
    if not items:
        return CorpusStats()
    total = len(items)
    return CorpusStats(
        graphs=total,
        avg_nodes=sum(s.nodes for s in items) / total,
        avg_edges=sum(s.edges for s in items) / total,
        avg_in_degree=sum(s.mean_in_degree for s in items) / total,
        avg_out_degree=sum(s.mean_out_degree for s in items) / total,
    )
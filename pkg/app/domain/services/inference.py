"""Event-to-question-time relation inference over shortest paths"""
import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from app.domain.entities.temporal_graph import NodeKind, TemporalGraph
from app.domain.services.interval_algebra import CompositionTable, compose
from app.domain.value_objects import TemporalRelation


logger = logging.getLogger("tempograph.inference")


@dataclass(frozen=True)
class Hop:
    """One traversal step; reverse hops carry the inverse of the stored label"""
    src: int
    dst: int
    relation: TemporalRelation
    reverse: bool = False


@dataclass(frozen=True)
class _Link:
    """Every label seen from one side of a node pair"""
    labels: FrozenSet[TemporalRelation]
    reverse: bool

    @property
    def relation(self) -> TemporalRelation:
        if len(self.labels) == 1:
            return next(iter(self.labels))
        return TemporalRelation.UNDETERMINED


Adjacency = Dict[int, Dict[int, _Link]]


def build_adjacency(g: TemporalGraph) -> Adjacency:
    """
    Undirected view of the stored edges

    Each neighbor maps to the labels seen from this side, stored edges read
    forwards and inverted when walked backwards. A pair whose labels disagree
    hops as UNDETERMINED. A hop is reverse when no edge is stored in its
    direction.
    """
    labels: Dict[Tuple[int, int], Set[TemporalRelation]] = defaultdict(set)
    stored: Set[Tuple[int, int]] = set()
    for edge in g.edges:
        labels[(edge.src, edge.dst)].add(edge.relation)
        labels[(edge.dst, edge.src)].add(edge.relation.inverse)
        stored.add((edge.src, edge.dst))

    adjacency: Adjacency = {node_id: {} for node_id in g.node_ids}
    for (a, b), seen in labels.items():
        adjacency[a][b] = _Link(frozenset(seen), reverse=(a, b) not in stored)
        if len(seen) > 1 and a < b:
            logger.debug(f"Edges between {a} and {b} disagree ({', '.join(sorted(r.value for r in seen))})")
    return adjacency


def distances_to(adjacency: Adjacency, target: int) -> Dict[int, int]:
    """Breadth-first hop counts to target for every reachable node"""
    distances = {target: 0}
    queue = deque([target])
    while queue:
        current = queue.popleft()
        for neighbor in adjacency[current]:
            if neighbor not in distances:
                distances[neighbor] = distances[current] + 1
                queue.append(neighbor)
    return distances


def _walk(adjacency: Adjacency, distances: Dict[int, int], start: int) -> Optional[List[Hop]]:
    if start not in distances:
        return None
    path: List[Hop] = []
    current = start
    while distances[current] > 0:
        step = min(n for n in adjacency[current] if distances.get(n) == distances[current] - 1)
        link = adjacency[current][step]
        path.append(Hop(current, step, link.relation, link.reverse))
        current = step
    return path


def shortest_path(g: TemporalGraph, start: int, target: int) -> Optional[List[Hop]]:
    """
    Shortest path from start to target, traversing edges both ways

    Ties go to the path whose sequence of visited ids is lexicographically
    smallest. Returns [] when start == target and None when disconnected.
    """
    g.node(start)
    g.node(target)
    adjacency = build_adjacency(g)
    return _walk(adjacency, distances_to(adjacency, target), start)


def fold_path(
    relations: Sequence[TemporalRelation],
    table: Optional[CompositionTable] = None,
) -> TemporalRelation:
    """Left-fold composition; an empty path is SIMULTANEOUS"""
    if not relations:
        return TemporalRelation.SIMULTANEOUS
    result = relations[0]
    for relation in relations[1:]:
        if result == TemporalRelation.UNDETERMINED:
            break
        result = compose(result, relation, table)
    return result


def reverse_path(path: Sequence[Hop]) -> List[Hop]:
    """The same path walked backwards"""
    return [Hop(hop.dst, hop.src, hop.relation.inverse, not hop.reverse) for hop in reversed(path)]


def infer_relation(
    g: TemporalGraph,
    event: int,
    table: Optional[CompositionTable] = None,
) -> TemporalRelation:
    """Relation of an event to the question time, UNDETERMINED when no path forces one"""
    path = shortest_path(g, event, g.question_node.id)
    if path is None:
        return TemporalRelation.UNDETERMINED
    return fold_path([hop.relation for hop in path], table)


def shortest_path_folds(
    g: TemporalGraph,
    start: int,
    target: int,
    table: Optional[CompositionTable] = None,
) -> Set[TemporalRelation]:
    """Fold results over every shortest path from start to target, branching on parallel labels"""
    adjacency = build_adjacency(g)
    distances = distances_to(adjacency, target)
    if start not in distances:
        return {TemporalRelation.UNDETERMINED}
    if start == target:
        return {TemporalRelation.SIMULTANEOUS}

    partial: Dict[int, Set[TemporalRelation]] = {
        n: set(adjacency[start][n].labels) for n in adjacency[start] if distances.get(n) == distances[start] - 1
    }
    for level in range(distances[start] - 1, 0, -1):
        frontier: Dict[int, Set[TemporalRelation]] = {}
        for node, results in partial.items():
            for n in adjacency[node]:
                if distances.get(n) != level - 1:
                    continue
                folded = {compose(r, label, table) for r in results for label in adjacency[node][n].labels}
                frontier.setdefault(n, set()).update(folded)
        partial = frontier
    return partial.get(target, set())


def infer_all(
    g: TemporalGraph,
    table: Optional[CompositionTable] = None,
) -> Dict[int, TemporalRelation]:
    """Relation of every event node to the question time, from one shared search"""
    target = g.question_node.id
    adjacency = build_adjacency(g)
    distances = distances_to(adjacency, target)
    debug = logger.isEnabledFor(logging.DEBUG)

    results: Dict[int, TemporalRelation] = {}
    for node in g.nodes_of_kind(NodeKind.DOC_EVENT):
        path = _walk(adjacency, distances, node.id)
        if path is None:
            results[node.id] = TemporalRelation.UNDETERMINED
            continue
        results[node.id] = fold_path([hop.relation for hop in path], table)
        if debug:
            folds = shortest_path_folds(g, node.id, target, table) - {TemporalRelation.UNDETERMINED}
            if len(folds) > 1:
                logger.debug(
                    f"Event {node.id} '{node.surface}': shortest paths disagree "
                    f"({', '.join(sorted(r.value for r in folds))}), keeping {results[node.id].value}"
                )
    return results

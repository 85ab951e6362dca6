"""Temporal graph construction and subgraph selection"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from app.core.exceptions import (
    MalformedDate,
    UnnormalizableTimex,
    UnsupportedPattern,
    ValidationError,
)
from app.domain.entities.annotated_document import AnnotatedDocument, EventAnnotation, TimexAnnotation
from app.domain.entities.temporal_graph import (
    QUESTION_NODE_ID,
    Edge,
    GraphVariant,
    Node,
    NodeKind,
    Provenance,
    TemporalGraph,
)
from app.domain.services.chronon import normalize_timex, normalize_timex_value
from app.domain.services.inference import infer_all
from app.domain.services.interval_algebra import CompositionTable, relate
from app.domain.value_objects import QuestionTimeSpan, TemporalRelation, TimeInterval


logger = logging.getLogger("tempograph.graph")


@dataclass
class GraphBuildResult:
    """A built graph plus the non-fatal problems met while building it"""
    graph: TemporalGraph
    unnormalizable_timexes: List[str] = field(default_factory=list)
    dropped_events: int = 0
    skipped_tlinks: int = 0


def resolve_timex_interval(timex: TimexAnnotation) -> TimeInterval:
    """
    Normalized value first, surface form second

    Raises:
        UnnormalizableTimex: neither form is accepted
    """
    if timex.value:
        try:
            return normalize_timex_value(timex.value)
        except (UnsupportedPattern, MalformedDate, ValidationError) as e:
            logger.debug(f"Timex value '{timex.value}' rejected ({e}), trying surface")
    try:
        return normalize_timex(timex.surface)
    except (UnsupportedPattern, MalformedDate, ValidationError):
        raise UnnormalizableTimex(timex.surface, timex.value)


def _inside(event: EventAnnotation, timex: TimexAnnotation) -> bool:
    return timex.char_start <= event.char_start and event.char_end <= timex.char_end


def build_graph_with_report(
    question_text: str,
    qspan: QuestionTimeSpan,
    doc: AnnotatedDocument,
) -> GraphBuildResult:
    """
    Build the full temporal graph of a question/document pair

    The question time node gets id 0; document nodes follow in document order.
    Every annotation tlink becomes an ANNOTATION edge and every normalized
    document time gets a TIME_LINK edge to the question time.

    Raises:
        BadAnnotation: spans, tlink indices or relation labels are invalid
    """
    if not qspan.matches(question_text):
        raise ValidationError(f"Question time '{qspan.surface}' does not match the question text")
    doc.validate()

    kept: list[tuple[int, NodeKind, EventAnnotation | TimexAnnotation]] = []
    dropped_events = 0
    for index, event in enumerate(doc.events):
        container = next((t for t in doc.timexes if _inside(event, t)), None)
        if container is not None:
            logger.warning(
                f"Dropping event '{event.surface}' at [{event.char_start}, {event.char_end}) "
                f"inside timex '{container.surface}'"
            )
            dropped_events += 1
            continue
        kept.append((index, NodeKind.DOC_EVENT, event))
    for offset, timex in enumerate(doc.timexes):
        kept.append((len(doc.events) + offset, NodeKind.DOC_TIME, timex))
    kept.sort(key=lambda item: (item[2].char_start, item[2].char_end, item[0]))

    question = Node(
        id=QUESTION_NODE_ID,
        kind=NodeKind.QUESTION_TIME,
        char_start=qspan.char_start,
        char_end=qspan.char_end,
        surface=qspan.surface,
        interval=qspan.interval,
    )
    nodes = [question]
    node_for_annotation: dict[int, int] = {}
    unnormalizable: list[str] = []
    for node_id, (index, kind, annotation) in enumerate(kept, start=1):
        interval = None
        if kind == NodeKind.DOC_TIME:
            try:
                interval = resolve_timex_interval(annotation)
            except UnnormalizableTimex as e:
                logger.warning(str(e))
                unnormalizable.append(annotation.surface)
        nodes.append(Node(node_id, kind, annotation.char_start, annotation.char_end, annotation.surface, interval))
        node_for_annotation[index] = node_id

    edges: list[Edge] = []
    seen: set[tuple[int, int, TemporalRelation]] = set()
    skipped_tlinks = 0
    for tlink in doc.tlinks:
        relation = TemporalRelation.from_label(tlink.relation)
        src = node_for_annotation.get(tlink.source)
        dst = node_for_annotation.get(tlink.target)
        if src is None or dst is None:
            logger.warning(f"Skipping tlink {tlink.source}->{tlink.target}: endpoint was dropped")
            skipped_tlinks += 1
            continue
        if (src, dst, relation) in seen:
            continue
        seen.add((src, dst, relation))
        edges.append(Edge(src, dst, relation, Provenance.ANNOTATION))

    for node in nodes[1:]:
        if node.kind == NodeKind.DOC_TIME and node.interval is not None:
            edges.append(Edge(node.id, QUESTION_NODE_ID, relate(node.interval, qspan.interval), Provenance.TIME_LINK))

    graph = TemporalGraph(question_text, doc.text, tuple(nodes), tuple(edges))
    logger.debug(f"Built graph with {len(graph.nodes)} nodes and {len(graph.edges)} edges")
    return GraphBuildResult(
        graph=graph,
        unnormalizable_timexes=unnormalizable,
        dropped_events=dropped_events,
        skipped_tlinks=skipped_tlinks,
    )


def build_graph(question_text: str, qspan: QuestionTimeSpan, doc: AnnotatedDocument) -> TemporalGraph:
    """Full temporal graph; see build_graph_with_report"""
    return build_graph_with_report(question_text, qspan, doc).graph


def _time_to_question(g: TemporalGraph) -> tuple[list[Node], list[Edge]]:
    nodes = [g.question_node, *g.nodes_of_kind(NodeKind.DOC_TIME)]
    edges = [
        edge for edge in g.edges_with(Provenance.TIME_LINK)
        if edge.dst == QUESTION_NODE_ID
    ]
    return nodes, edges


def select_subgraph(
    g: TemporalGraph,
    variant: GraphVariant,
    table: Optional[CompositionTable] = None,
) -> TemporalGraph:
    """
    Select the subgraph used for fusion

    FULL returns g. DT2QT keeps the question time, document times and their
    links. DTE2QT adds every event with an inferable relation to the question
    time. ALL_TIME adds pairwise relations among the normalized document times.
    """
    if variant == GraphVariant.FULL:
        return g

    nodes, edges = _time_to_question(g)

    if variant == GraphVariant.DTE2QT:
        inferred = infer_all(g, table)
        index = g.node_index()
        for event_id, relation in inferred.items():
            if relation == TemporalRelation.UNDETERMINED:
                continue
            nodes.append(index[event_id])
            edges.append(Edge(event_id, QUESTION_NODE_ID, relation, Provenance.INFERRED))

    elif variant == GraphVariant.ALL_TIME:
        times = [node for node in g.nodes_of_kind(NodeKind.DOC_TIME) if node.interval is not None]
        for i, first in enumerate(times):
            for second in times[i + 1:]:
                edges.append(Edge(first.id, second.id, relate(first.interval, second.interval), Provenance.TIME_LINK))

    return g.with_parts(nodes, edges)

"""
Graph fusion into model input text

Marked spans are wrapped in XML-style delimiters: "<before>June 14, 1775</before>".
Labels are lower case with internal spaces ("question time", "included by").
Padded delimiters add a space inside each tag pair so that every delimiter is
its own whitespace piece: "<before> June 14, 1775 </before>".
"""
import logging
import re
from typing import Callable, Iterable, Mapping, Optional, Sequence, Tuple

from app.core.exceptions import OverlapConflict, ValidationError
from app.domain.entities.fused_sequence import FusedSequence, GnnEdge, GnnExport, GnnNode, MarkerSpan
from app.domain.entities.temporal_graph import (
    NodeKind,
    Node,
    Provenance,
    TemporalGraph,
)
from app.domain.services.inference import infer_all
from app.domain.services.interval_algebra import CompositionTable
from app.domain.value_objects import QuestionTimeSpan, TemporalRelation


logger = logging.getLogger("tempograph.fusion")

QUESTION_TIME_LABEL = "question time"
NODE_LABEL = "e"
QUESTION_PREFIX = "question: "
CONTEXT_PREFIX = " context: "

Span = Tuple[int, int, str]


def opening(label: str, padded: bool = False) -> str:
    return f"<{label}> " if padded else f"<{label}>"


def closing(label: str, padded: bool = False) -> str:
    return f" </{label}>" if padded else f"</{label}>"


def mark_spans(text: str, spans: Iterable[Span], padded: bool = False) -> FusedSequence:
    """
    Wrap each (start, end, label) span of text in its delimiters

    Raises:
        OverlapConflict: two spans share a character
        ValidationError: a span is empty or outside text
    """
    ordered = sorted(spans, key=lambda s: (s[0], s[1]))
    for start, end, _ in ordered:
        if not 0 <= start < end <= len(text):
            raise ValidationError(f"Span [{start}, {end}) outside text of length {len(text)}")
    for previous, current in zip(ordered, ordered[1:]):
        if current[0] < previous[1]:
            raise OverlapConflict((previous[0], previous[1]), (current[0], current[1]))

    fused = text
    for start, end, label in reversed(ordered):
        fused = fused[:end] + closing(label, padded) + fused[end:]
        fused = fused[:start] + opening(label, padded) + fused[start:]

    source_map = []
    marker_spans = []
    shift = 0
    cursor = 0
    for start, end, label in ordered:
        source_map.extend(range(cursor + shift, start + shift))
        region_start = start + shift
        shift += len(opening(label, padded))
        source_map.extend(range(start + shift, end + shift))
        shift += len(closing(label, padded))
        marker_spans.append(MarkerSpan(label, region_start, end + shift))
        cursor = end
    source_map.extend(range(cursor + shift, len(text) + shift + 1))

    return FusedSequence(
        text=fused,
        marker_spans=tuple(marker_spans),
        source_map=tuple(source_map),
        padded=padded,
    )


def concat(*parts: str | FusedSequence) -> FusedSequence:
    """Join plain and fused pieces, shifting marker spans and source maps"""
    text = []
    marker_spans = []
    source_map = []
    offset = 0
    padded = False
    for part in parts:
        if isinstance(part, str):
            part = FusedSequence(part, (), tuple(range(len(part) + 1)))
        padded = padded or part.padded
        text.append(part.text)
        source_map.extend(offset + i for i in part.source_map[:-1])
        marker_spans.extend(
            MarkerSpan(span.label, span.char_start + offset, span.char_end + offset)
            for span in part.marker_spans
        )
        offset += len(part.text)
    source_map.append(offset)
    return FusedSequence("".join(text), tuple(marker_spans), tuple(source_map), padded)


def strip_markers(text: str, labels: Iterable[str], padded: bool = False) -> str:
    """Delete every delimiter with one of the given labels"""
    alternatives = "|".join(re.escape(label) for label in sorted(set(labels), key=len, reverse=True))
    if not alternatives:
        return text
    if padded:
        pattern = rf"<(?:{alternatives})> | </(?:{alternatives})>"
    else:
        pattern = rf"</?(?:{alternatives})>"
    return re.sub(pattern, "", text)


def plain_serialization(question_text: str, document_text: str) -> str:
    """Unfused model input"""
    return f"{QUESTION_PREFIX}{question_text}{CONTEXT_PREFIX}{document_text}"


def relation_label(relation: TemporalRelation, merge3: bool = False) -> str:
    return (relation.merged() if merge3 else relation).label


def err_parts(
    question_text: str,
    qspan: QuestionTimeSpan,
    document_text: str,
    relations: Mapping[Node, TemporalRelation],
    merge3: bool = False,
    padded: bool = False,
) -> Tuple[FusedSequence, FusedSequence]:
    """Marked question and marked document, before joining"""
    spans = []
    for node, relation in relations.items():
        if node.kind == NodeKind.QUESTION_TIME or relation == TemporalRelation.UNDETERMINED:
            continue
        spans.append((node.char_start, node.char_end, relation_label(relation, merge3)))

    question = mark_spans(question_text, [(qspan.char_start, qspan.char_end, QUESTION_TIME_LABEL)], padded)
    context = mark_spans(document_text, spans, padded)
    return question, context


def err_serialize(
    question_text: str,
    qspan: QuestionTimeSpan,
    document_text: str,
    relations: Mapping[Node, TemporalRelation],
    merge3: bool = False,
    padded: bool = False,
) -> FusedSequence:
    """
    Explicit edge representation of a question/document pair

    The question time is wrapped in "question time" delimiters and every related
    document node in the delimiters of its relation to the question time.
    UNDETERMINED entries are left unmarked.

    Raises:
        OverlapConflict: two document nodes to mark overlap
    """
    question, context = err_parts(question_text, qspan, document_text, relations, merge3, padded)
    return concat(QUESTION_PREFIX, question, CONTEXT_PREFIX, context)


def relations_to_question(
    g: TemporalGraph,
    infer_events: bool = False,
    table: Optional[CompositionTable] = None,
) -> dict[Node, TemporalRelation]:
    """
    Relation of each document node to the question time, as the graph states it

    Document times use their TIME_LINK edge and events their INFERRED edge. With
    infer_events, events are inferred over the whole graph instead.
    """
    question_id = g.question_node.id
    index = g.node_index()
    relations: dict[Node, TemporalRelation] = {}
    for edge in g.edges:
        if edge.dst != question_id or edge.provenance not in (Provenance.TIME_LINK, Provenance.INFERRED):
            continue
        relations.setdefault(index[edge.src], edge.relation)
    if infer_events:
        logger.warning("Fusing the full graph; context length grows with every event marker")
        for event_id, relation in infer_all(g, table).items():
            relations[index[event_id]] = relation
    return relations


def gnn_export(
    question_text: str,
    qspan: QuestionTimeSpan,
    document_text: str,
    g: TemporalGraph,
    padded: bool = False,
) -> GnnExport:
    """
    Wrap every graph node in node delimiters and list the edges

    Nodes are listed in marker order: the question time first, then document
    nodes by ascending offset.

    Raises:
        OverlapConflict: two document nodes overlap
    """
    if (qspan.char_start, qspan.char_end) != (g.question_node.char_start, g.question_node.char_end):
        raise ValidationError("Question time span does not match the graph's question node")
    document_nodes = sorted(
        (node for node in g.nodes if not node.is_question),
        key=lambda n: (n.char_start, n.char_end, n.id),
    )
    question = mark_spans(question_text, [(qspan.char_start, qspan.char_end, NODE_LABEL)], padded)
    context = mark_spans(document_text, [(n.char_start, n.char_end, NODE_LABEL) for n in document_nodes], padded)
    fused = concat(QUESTION_PREFIX, question, CONTEXT_PREFIX, context)

    ordered = [g.question_node, *document_nodes]
    nodes = tuple(GnnNode(node.id, node.kind, position) for position, node in enumerate(ordered))
    edges = tuple(GnnEdge(edge.src, edge.dst, edge.relation.relation_id) for edge in g.edges)
    return GnnExport(
        marked_text=fused.text,
        nodes=nodes,
        edges=edges,
        marker_spans=fused.marker_spans,
    )


def count_whitespace_pieces(text: str) -> int:
    return len(text.split())


def length_report(
    before: str,
    after: FusedSequence,
    tokenizer: Callable[[str], int] = count_whitespace_pieces,
) -> Tuple[int, int]:
    """Piece counts of the unfused and fused inputs"""
    return tokenizer(before), tokenizer(after.text)


def marker_labels(relations: Sequence[TemporalRelation] = (), merge3: bool = False) -> set[str]:
    """Every delimiter label an ERR output can contain"""
    labels = {QUESTION_TIME_LABEL}
    labels.update(relation_label(r, merge3) for r in relations if r != TemporalRelation.UNDETERMINED)
    return labels

import random

import pytest

from app.core.exceptions import BadAnnotation, ValidationError
from app.domain.entities.annotated_document import (
    AnnotatedDocument,
    EventAnnotation,
    FindingKind,
    TimeLinkAnnotation,
    TimexAnnotation,
)
from app.domain.entities.temporal_graph import GraphVariant, NodeKind, Provenance
from app.domain.services.chronon import extract_question_time
from app.domain.services.graph_builder import (
    build_graph,
    build_graph_with_report,
    resolve_timex_interval,
    select_subgraph,
)
from app.domain.services.graph_stats import aggregate_stats, graph_stats
from app.domain.value_objects import CalendarDate, TemporalRelation, TimeInterval
from app.domain.services.inference import infer_relation
from tests.fixtures.synthetic_corpus import Q1_QUESTION, event, random_document, timex


B = TemporalRelation.BEFORE
A = TemporalRelation.AFTER


def _relations_to_question(graph):
    return {graph.node(e.src).surface: e.relation for e in graph.edges if e.dst == 0}


@pytest.mark.unit
class TestAnnotatedDocument:
    def test_valid_document_has_no_findings(self, mock_q1_document):
        assert mock_q1_document.find_violations() == []
        mock_q1_document.validate()

    def test_out_of_range_span(self):
        document = AnnotatedDocument("short", events=[EventAnnotation(3, 10, "rt and")])
        findings = document.find_violations()

        assert [f.kind for f in findings] == [FindingKind.SPAN_OUT_OF_RANGE]
        assert (findings[0].char_start, findings[0].char_end) == (3, 10)

    def test_unknown_relation_names_label(self):
        text = "It rained in 1990."
        document = AnnotatedDocument(
            text,
            events=[event(text, "rained")],
            timexes=[timex(text, "1990")],
            tlinks=[TimeLinkAnnotation(0, 1, "DURING_SOMETIME")],
        )
        findings = document.find_violations()

        assert [f.kind for f in findings] == [FindingKind.UNKNOWN_RELATION]
        assert findings[0].label == "DURING_SOMETIME"
        with pytest.raises(BadAnnotation, match="DURING_SOMETIME"):
            document.validate()

    def test_tlink_index_and_self_link(self):
        text = "It rained."
        document = AnnotatedDocument(
            text,
            events=[event(text, "rained")],
            tlinks=[TimeLinkAnnotation(0, 3, "BEFORE"), TimeLinkAnnotation(0, 0, "BEFORE")],
        )
        kinds = [f.kind for f in document.find_violations()]
        assert kinds == [FindingKind.TLINK_INDEX_OUT_OF_RANGE, FindingKind.SELF_LINK]

    def test_surface_mismatch(self):
        document = AnnotatedDocument("It rained.", events=[EventAnnotation(3, 9, "snowed")])
        assert document.find_violations()[0].kind == FindingKind.SURFACE_MISMATCH

    def test_truncation_drops_annotations_past_the_cut(self, mock_q1_document):
        budget = mock_q1_document.text.index("appointed")
        truncated = mock_q1_document.truncated(budget)

        assert truncated.text == mock_q1_document.text[:budget]
        assert [e.surface for e in truncated.events] == ["created"]
        assert [t.surface for t in truncated.timexes] == ["1732", "June 14, 1775"]
        assert truncated.tlinks == [TimeLinkAnnotation(0, 2, "INCLUDED_BY")]
        assert truncated.find_violations() == []

    def test_truncation_within_budget_is_identity(self, mock_q1_document):
        assert mock_q1_document.truncated(10_000) is mock_q1_document


@pytest.mark.unit
class TestBuildGraph:
    def test_q1_graph(self, mock_q1_graph):
        surfaces = [node.surface for node in mock_q1_graph.nodes]
        assert surfaces == ["between 1776 - 1780", "1732", "created", "June 14, 1775", "appointed", "resigned", "1783"]
        assert len(mock_q1_graph.edges_with(Provenance.ANNOTATION)) == 3
        assert _relations_to_question(mock_q1_graph) == {"1732": B, "June 14, 1775": B, "1783": A}

    def test_q1_node_kinds_and_intervals(self, mock_q1_graph):
        june = mock_q1_graph.node(3)
        assert june.kind == NodeKind.DOC_TIME
        assert june.interval == TimeInterval.for_day(CalendarDate(1775, 6, 14))
        assert mock_q1_graph.node(2).kind == NodeKind.DOC_EVENT
        assert mock_q1_graph.question_node.interval == TimeInterval(CalendarDate(1776, 1, 1), CalendarDate(1780, 12, 31))

    def test_event_inside_timex_is_dropped(self, mock_q1_span, caplog):
        text = "It happened on June 14, 1775."
        document = AnnotatedDocument(
            text,
            events=[event(text, "happened"), event(text, "June")],
            timexes=[timex(text, "June 14, 1775")],
            tlinks=[TimeLinkAnnotation(1, 2, "INCLUDED_BY"), TimeLinkAnnotation(0, 2, "INCLUDED_BY")],
        )
        with caplog.at_level("WARNING", logger="tempograph.graph"):
            result = build_graph_with_report(Q1_QUESTION, mock_q1_span, document)

        assert result.dropped_events == 1
        assert result.skipped_tlinks == 1
        assert [n.surface for n in result.graph.nodes] == ["between 1776 - 1780", "happened", "June 14, 1775"]
        assert "inside timex" in caplog.text

    def test_unnormalizable_timex_has_no_time_link(self, mock_q1_span):
        text = "It rained last summer and in 1777."
        document = AnnotatedDocument(text, timexes=[timex(text, "last summer"), timex(text, "1777")])
        result = build_graph_with_report(Q1_QUESTION, mock_q1_span, document)

        assert result.unnormalizable_timexes == ["last summer"]
        assert result.graph.node(1).interval is None
        assert _relations_to_question(result.graph) == {"1777": TemporalRelation.INCLUDED_BY}

    def test_value_wins_over_surface(self):
        assert resolve_timex_interval(TimexAnnotation(0, 9, "that year", "1999")) == TimeInterval.for_year(1999)
        assert resolve_timex_interval(TimexAnnotation(0, 4, "1999", "garbage")) == TimeInterval.for_year(1999)

    def test_duplicate_tlinks_collapse(self, mock_q1_span):
        text = "It rained in 1777."
        document = AnnotatedDocument(
            text,
            events=[event(text, "rained")],
            timexes=[timex(text, "1777")],
            tlinks=[TimeLinkAnnotation(0, 1, "INCLUDED_BY"), TimeLinkAnnotation(0, 1, "included by")],
        )
        graph = build_graph(Q1_QUESTION, mock_q1_span, document)
        assert len(graph.edges_with(Provenance.ANNOTATION)) == 1

    def test_bad_annotation_raises(self, mock_q1_span):
        document = AnnotatedDocument("x", tlinks=[TimeLinkAnnotation(0, 1, "BEFORE")])
        with pytest.raises(BadAnnotation, match="references annotation"):
            build_graph(Q1_QUESTION, mock_q1_span, document)

    def test_unknown_tlink_label_raises(self, mock_q1_span):
        text = "It rained in 1700."
        document = AnnotatedDocument(
            text,
            events=[event(text, "rained")],
            timexes=[timex(text, "1700")],
            tlinks=[TimeLinkAnnotation(0, 1, "VAGUE")],
        )
        with pytest.raises(BadAnnotation, match="unknown relation 'VAGUE'"):
            build_graph(Q1_QUESTION, mock_q1_span, document)

    def test_question_span_must_match(self, mock_q1_document):
        span = extract_question_time("Who led it in 1990?")
        with pytest.raises(ValidationError, match="does not match the question text"):
            build_graph(Q1_QUESTION, span, mock_q1_document)


@pytest.mark.unit
class TestSelectSubgraph:
    def test_full_is_identity(self, mock_q1_graph):
        assert select_subgraph(mock_q1_graph, GraphVariant.FULL) is mock_q1_graph

    def test_dt2qt(self, mock_q1_graph):
        graph = select_subgraph(mock_q1_graph, GraphVariant.DT2QT)
        assert graph.node_ids == (0, 1, 3, 6)
        assert all(e.provenance == Provenance.TIME_LINK and e.dst == 0 for e in graph.edges)
        assert len(graph.edges) == 3

    def test_dte2qt_adds_inferred_events(self, mock_q1_graph, mock_table):
        graph = select_subgraph(mock_q1_graph, GraphVariant.DTE2QT, mock_table)
        assert graph.node_ids == (0, 1, 2, 3, 4, 5, 6)
        inferred = {graph.node(e.src).surface: e.relation for e in graph.edges_with(Provenance.INFERRED)}
        assert inferred == {"created": B, "appointed": B, "resigned": A}

    def test_dte2qt_skips_undetermined_events(self, mock_q1_span):
        text = "It rained, then it snowed in 1700."
        document = AnnotatedDocument(
            text,
            events=[event(text, "rained"), event(text, "snowed")],
            timexes=[timex(text, "1700")],
            tlinks=[TimeLinkAnnotation(1, 2, "INCLUDED_BY")],
        )
        graph = select_subgraph(build_graph(Q1_QUESTION, mock_q1_span, document), GraphVariant.DTE2QT)
        assert [n.surface for n in graph.nodes_of_kind(NodeKind.DOC_EVENT)] == ["snowed"]

    def test_all_time_relates_every_pair(self, mock_q1_graph):
        graph = select_subgraph(mock_q1_graph, GraphVariant.ALL_TIME)
        pairs = {(e.src, e.dst): e.relation for e in graph.edges if e.dst != 0}
        assert pairs == {(1, 3): B, (1, 6): B, (3, 6): B}

    @pytest.mark.slow
    def test_variants_nest_on_random_documents(self, mock_q1_span, mock_table):
        rng = random.Random(31)
        for _ in range(500):
            full = build_graph(Q1_QUESTION, mock_q1_span, random_document(rng))
            dt2qt = select_subgraph(full, GraphVariant.DT2QT, mock_table)
            dte2qt = select_subgraph(full, GraphVariant.DTE2QT, mock_table)

            assert set(dt2qt.node_ids) <= set(dte2qt.node_ids) <= set(full.node_ids)
            assert set(dt2qt.edges) <= set(dte2qt.edges)
            assert {e for e in dte2qt.edges if e.provenance != Provenance.INFERRED} <= set(full.edges)
            for edge in dte2qt.edges_with(Provenance.INFERRED):
                assert edge.relation == infer_relation(full, edge.src, mock_table)


@pytest.mark.unit
class TestGraphStats:
    def test_q1_stats(self, mock_q1_graph):
        stats = graph_stats(mock_q1_graph)
        assert (stats.nodes, stats.edges) == (7, 6)
        assert stats.in_degrees[0] == 3
        assert stats.mean_in_degree == pytest.approx(6 / 7)
        assert stats.mean_out_degree == pytest.approx(6 / 7)

    def test_aggregate(self, mock_q1_graph):
        selected = select_subgraph(mock_q1_graph, GraphVariant.DT2QT)
        corpus = aggregate_stats([graph_stats(mock_q1_graph), graph_stats(selected)])
        assert corpus.graphs == 2
        assert corpus.avg_nodes == pytest.approx((7 + 4) / 2)
        assert corpus.avg_edges == pytest.approx((6 + 3) / 2)

    def test_empty_corpus(self):
        assert aggregate_stats([]).graphs == 0

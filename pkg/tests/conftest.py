import pytest

from app.domain.entities.dataset_example import DatasetExample
from app.domain.services.chronon import extract_question_time
from app.domain.services.graph_builder import build_graph
from app.domain.services.interval_algebra import load_composition_table
from tests.fixtures.synthetic_corpus import (
    Q1_ANSWERS,
    Q1_CONTEXT,
    Q1_QUESTION,
    graph_from_edges,
    q1_document,
    three_example_rows,
    write_jsonl,
)
from app.domain.value_objects import TemporalRelation


@pytest.fixture
def mock_table():
    return load_composition_table()


@pytest.fixture
def mock_q1_document():
    return q1_document()


@pytest.fixture
def mock_q1_span():
    return extract_question_time(Q1_QUESTION)


@pytest.fixture
def mock_q1_graph(mock_q1_span, mock_q1_document):
    return build_graph(Q1_QUESTION, mock_q1_span, mock_q1_document)


@pytest.fixture
def mock_q1_example(mock_q1_document):
    return DatasetExample(
        id="q1",
        question=Q1_QUESTION,
        context=Q1_CONTEXT,
        answers=list(Q1_ANSWERS),
        annotation=mock_q1_document,
    )


@pytest.fixture
def mock_chain_graph():
    """1 -INCLUDED_BY-> 2 -BEFORE-> 0 (question time), plus an isolated node 3"""
    return graph_from_edges(4, [
        (1, 2, TemporalRelation.INCLUDED_BY),
        (2, 0, TemporalRelation.BEFORE),
    ])


@pytest.fixture
def mock_dataset_file(tmp_path):
    return write_jsonl(tmp_path / "dataset.jsonl", three_example_rows())

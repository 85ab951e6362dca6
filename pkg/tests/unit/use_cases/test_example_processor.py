import pytest

from app.application.dtos.request.run_config import FusionMode
from app.application.use_cases import example_processor
from app.application.use_cases.example_processor import (
    ExampleTask,
    OutcomeStatus,
    ProcessingOptions,
    process_example,
)
from app.domain.entities.temporal_graph import GraphVariant
from app.domain.services.fusion import count_whitespace_pieces, plain_serialization
from tests.fixtures.synthetic_corpus import Q1_CONTEXT, Q1_QUESTION


def _task(example, document, **options):
    return ExampleTask(example=example, document=document, options=ProcessingOptions(**options))


@pytest.mark.unit
class TestProcessExample:
    def test_gnn_mode_does_not_build_edge_markers(self, mock_q1_example, mock_q1_document, mocker, caplog):
        serialize = mocker.patch.object(example_processor, "err_serialize", wraps=example_processor.err_serialize)
        relations = mocker.patch.object(
            example_processor, "relations_to_question", wraps=example_processor.relations_to_question
        )
        task = _task(mock_q1_example, mock_q1_document, variant=GraphVariant.FULL, mode=FusionMode.GNN)

        with caplog.at_level("WARNING", logger="tempograph.fusion"):
            outcome = process_example(task)

        assert outcome.status == OutcomeStatus.PROCESSED
        serialize.assert_not_called()
        relations.assert_not_called()
        assert "Fusing the full graph" not in caplog.text
        assert outcome.tokens_after == count_whitespace_pieces(outcome.record["marked_text"])

    def test_err_mode_counts_fused_pieces(self, mock_q1_example, mock_q1_document):
        outcome = process_example(_task(mock_q1_example, mock_q1_document, variant=GraphVariant.DTE2QT))

        assert outcome.tokens_before == count_whitespace_pieces(plain_serialization(Q1_QUESTION, Q1_CONTEXT))
        assert outcome.tokens_after == count_whitespace_pieces(outcome.record["text"])
        assert outcome.tokens_after > outcome.tokens_before

    def test_unfused_prompt_keeps_plain_length(self, mock_q1_example, mock_q1_document, mocker):
        relations = mocker.patch.object(
            example_processor, "relations_to_question", wraps=example_processor.relations_to_question
        )
        task = _task(mock_q1_example, mock_q1_document, mode=FusionMode.PROMPT, fused_prompt=False)

        outcome = process_example(task)

        relations.assert_not_called()
        assert outcome.tokens_after == outcome.tokens_before
        assert "<question time>" not in outcome.record["prompt"]

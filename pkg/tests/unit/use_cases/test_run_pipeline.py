import json
from unittest.mock import Mock

import pytest

from app.application.dtos.request.run_config import FusionMode, RunConfig
from app.application.use_cases.run_pipeline_use_case import RunPipelineUseCase
from app.core.exceptions import DatasetParseError, UseCaseError
from app.domain.entities.dataset_example import DatasetExample
from app.domain.entities.temporal_graph import GraphVariant
from app.infrastructure.annotators import ChrononStubAnnotator
from app.infrastructure.persistence.repositories.json_annotation_repository import JsonAnnotationRepository
from app.infrastructure.persistence.repositories.json_run_output_repository import JsonRunOutputRepository
from app.infrastructure.persistence.repositories.jsonl_dataset_repository import JsonlDatasetRepository
from tests.fixtures.synthetic_corpus import Q1_CONTEXT, Q1_QUESTION, q1_document


def _read_jsonl(path):
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]


@pytest.mark.unit
class TestRunPipelineUseCase:
    @pytest.fixture
    def out_dir(self, tmp_path):
        return tmp_path / "out"

    @pytest.fixture
    def make_use_case(self, mock_dataset_file, out_dir):
        def make(annotation_repo=None):
            return RunPipelineUseCase(
                dataset_repo=JsonlDatasetRepository(mock_dataset_file),
                output_repo=JsonRunOutputRepository(out_dir),
                annotator=ChrononStubAnnotator(),
                annotation_repo=annotation_repo,
            )
        return make

    @pytest.fixture
    def config(self, mock_dataset_file, out_dir):
        return RunConfig(dataset_path=str(mock_dataset_file), out_dir=str(out_dir), variant=GraphVariant.DTE2QT)

    def test_counts(self, make_use_case, config):
        report = make_use_case().execute(config)

        assert report.total == 3
        assert report.processed == 2
        assert report.passthrough == 1
        assert report.skipped == 0
        # q3 passes through but still goes through the stub annotator
        assert report.stub_annotated == 2
        assert report.exit_code == 0
        assert report.full_graph_stats.graphs == 2

    def test_fused_records(self, make_use_case, config, out_dir):
        make_use_case().execute(config)
        records = {r["id"]: r for r in _read_jsonl(out_dir / "fused.jsonl")}

        assert "<before>created</before>" in records["q1"]["text"]
        assert records["q1"]["answers"] == ["Commander-in-Chief"]
        q2 = records["q2"]["text"]
        assert "<question time>from 1990 to 1995</question time>" in q2
        assert "<before>1988</before>" in q2
        assert "<included by>1993</included by>" in q2
        assert "<after>1999</after>" in q2
        assert records["q3"] == {
            "id": "q3",
            "text": "question: Which team did Ann play for? context: Ann joined Leeds in 1988.",
            "marker_spans": [],
            "answers": [],
            "fused": False,
        }

    def test_graphs_and_report_written(self, make_use_case, config, out_dir):
        make_use_case().execute(config)

        graphs = _read_jsonl(out_dir / "graphs.jsonl")
        assert [g["id"] for g in graphs] == ["q1", "q2"]
        assert len(graphs[0]["full"]["nodes"]) == 7
        report = json.loads((out_dir / "report.json").read_text())
        assert report["processed"] == 2

    def test_worker_count_does_not_change_output(self, make_use_case, config, out_dir, tmp_path):
        make_use_case().execute(config)
        sequential = (out_dir / "fused.jsonl").read_bytes()

        parallel_dir = tmp_path / "parallel"
        use_case = RunPipelineUseCase(
            dataset_repo=make_use_case().dataset_repo,
            output_repo=JsonRunOutputRepository(parallel_dir),
            annotator=ChrononStubAnnotator(),
        )
        use_case.execute(config.model_copy(update={"workers": 2, "out_dir": str(parallel_dir)}))

        assert (parallel_dir / "fused.jsonl").read_bytes() == sequential

    def test_gnn_mode(self, make_use_case, config, out_dir):
        make_use_case().execute(config.model_copy(update={"mode": FusionMode.GNN}))
        records = {r["id"]: r for r in _read_jsonl(out_dir / "gnn.jsonl")}

        assert records["q1"]["schema"] == "tg-gnn/1"
        assert records["q1"]["nodes"][0]["kind"] == "question_time"
        assert records["q3"]["fused"] is False

    def test_prompt_mode_with_shots(self, make_use_case, config, out_dir):
        use_case = make_use_case()
        use_case.shots_repo = Mock()
        use_case.shots_repo.find_all = Mock(return_value=[
            DatasetExample(id="s1", question=Q1_QUESTION, context=Q1_CONTEXT, answers=["Commander-in-Chief"],
                           annotation=q1_document()),
        ])
        use_case.execute(config.model_copy(update={"mode": FusionMode.PROMPT}))
        records = {r["id"]: r for r in _read_jsonl(out_dir / "prompts.jsonl")}

        prompt = records["q2"]["prompt"]
        assert prompt.startswith("Instruction: ")
        assert "<question time>between 1776 - 1780</question time>" in prompt
        assert "Answer: Commander-in-Chief" in prompt
        assert prompt.endswith("Answer:")

    def test_unreadable_shot_annotation_keeps_shot_unfused(self, make_use_case, config, out_dir, mocker, caplog):
        annotation_repo = mocker.Mock()
        annotation_repo.find_by_ref.side_effect = DatasetParseError("s1.json", 1, "invalid JSON")
        annotation_repo.find_by_example_id.return_value = None
        use_case = make_use_case(annotation_repo)
        use_case.shots_repo = mocker.Mock()
        use_case.shots_repo.find_all.return_value = [
            DatasetExample(id="s1", question=Q1_QUESTION, context=Q1_CONTEXT, answers=["Commander-in-Chief"],
                           annotation_ref="s1.json"),
        ]

        with caplog.at_level("WARNING", logger="tempograph.pipeline"):
            report = use_case.execute(config.model_copy(update={"mode": FusionMode.PROMPT}))
        records = {r["id"]: r for r in _read_jsonl(out_dir / "prompts.jsonl")}

        assert report.exit_code == 0
        assert "Shot s1 kept unfused" in caplog.text
        assert f"Context: {Q1_CONTEXT}\nQuestion: {Q1_QUESTION}\nAnswer: Commander-in-Chief" in records["q2"]["prompt"]
        annotation_repo.find_by_ref.assert_called_once_with("s1.json")

    def test_stored_annotation_replaces_stub(self, make_use_case, config, tmp_path, mocker):
        repo = JsonAnnotationRepository(tmp_path / "ann")
        repo.save("q2", ChrononStubAnnotator().annotate(
            "Ann joined Leeds in 1988. She moved to York in 1993 and retired in 1999."
        ))
        use_case = make_use_case(repo)
        annotate = mocker.spy(use_case.annotator, "annotate")

        report = use_case.execute(config)

        assert report.stub_annotated == 1
        annotate.assert_called_once_with("Ann joined Leeds in 1988.")

    def test_mismatched_annotation_is_skipped(self, make_use_case, config, tmp_path):
        repo = JsonAnnotationRepository(tmp_path / "ann")
        repo.save("q2", ChrononStubAnnotator().annotate("Some other text from 1990."))

        report = make_use_case(repo).execute(config)

        assert report.skipped == 1
        assert report.errors[0].id == "q2"
        assert report.errors[0].error_type == "BadAnnotation"
        assert report.exit_code == 2

    def test_budget_truncates_context(self, make_use_case, config, out_dir):
        make_use_case().execute(config.model_copy(update={"context_char_budget": 28}))
        records = {r["id"]: r for r in _read_jsonl(out_dir / "fused.jsonl")}
        assert records["q1"]["text"].endswith("context: Washington was born in <before>1732</before>.")

    def test_dataset_errors_propagate(self, config):
        dataset_repo = Mock()
        dataset_repo.find_all = Mock(side_effect=DatasetParseError("d.jsonl", 3, "invalid JSON"))
        use_case = RunPipelineUseCase(dataset_repo, Mock(), ChrononStubAnnotator())

        with pytest.raises(DatasetParseError, match="d.jsonl:3"):
            use_case.execute(config)

    def test_unexpected_errors_are_wrapped(self, config, mocker):
        dataset_repo = mocker.Mock()
        dataset_repo.find_all.side_effect = RuntimeError("boom")
        output_repo = mocker.Mock()
        use_case = RunPipelineUseCase(dataset_repo, output_repo, ChrononStubAnnotator())

        with pytest.raises(UseCaseError, match="Failed to run pipeline: boom"):
            use_case.execute(config)
        output_repo.write_report.assert_not_called()

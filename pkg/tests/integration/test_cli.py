import json
import subprocess
import sys
from pathlib import Path

import pytest

from tests.fixtures.synthetic_corpus import annotation_payload, q1_document, three_example_rows, write_jsonl


REPO_ROOT = Path(__file__).resolve().parents[2]


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "app.cli", *map(str, args)],
        cwd=REPO_ROOT,
        capture_output=True,
        text=True,
        timeout=600,
    )


@pytest.fixture
def dataset(tmp_path):
    rows = three_example_rows()
    # enough rows for several worker chunks
    for i in range(12):
        row = dict(rows[1])
        row["id"] = f"q2-{i:02d}"
        rows.append(row)
    return write_jsonl(tmp_path / "dataset.jsonl", rows)


@pytest.mark.integration
class TestCli:
    def test_run_writes_outputs(self, dataset, tmp_path):
        out = tmp_path / "out"
        result = run_cli("run", "--dataset", dataset, "--variant", "dte2qt", "--out", out)

        assert result.returncode == 0, result.stderr
        assert "14 processed, 1 passthrough, 0 skipped of 15" in result.stdout
        assert {p.name for p in out.iterdir()} == {"fused.jsonl", "graphs.jsonl", "report.json"}

    def test_worker_count_is_byte_identical(self, dataset, tmp_path):
        one, eight = tmp_path / "one", tmp_path / "eight"
        assert run_cli("run", "--dataset", dataset, "--workers", 1, "--out", one).returncode == 0
        assert run_cli("run", "--dataset", dataset, "--workers", 8, "--out", eight).returncode == 0

        for name in ("fused.jsonl", "graphs.jsonl", "report.json"):
            assert (one / name).read_bytes() == (eight / name).read_bytes()

    def test_skipped_examples_exit_2(self, tmp_path):
        rows = three_example_rows()
        rows[0]["annotation"]["text"] = "A different text."
        dataset = write_jsonl(tmp_path / "d.jsonl", rows)

        result = run_cli("run", "--dataset", dataset, "--out", tmp_path / "out")

        assert result.returncode == 2
        report = json.loads((tmp_path / "out" / "report.json").read_text())
        assert report["errors"][0]["id"] == "q1"

    def test_malformed_dataset_exit_1(self, tmp_path):
        dataset = tmp_path / "d.jsonl"
        dataset.write_text('{"id": "a", "question": "Q?", "context": "c"}\n{oops\n')

        result = run_cli("run", "--dataset", dataset, "--out", tmp_path / "out")

        assert result.returncode == 1
        assert "d.jsonl:2" in result.stderr

    def test_invalid_options_exit_1(self, dataset, tmp_path):
        result = run_cli("run", "--dataset", dataset, "--shots", dataset, "--out", tmp_path / "out")
        assert result.returncode == 1
        assert "prompt mode" in result.stderr

    def test_stats_after_run(self, dataset, tmp_path):
        out = tmp_path / "out"
        run_cli("run", "--dataset", dataset, "--out", out)

        result = run_cli("stats", "--out", out)

        assert result.returncode == 0, result.stderr
        assert json.loads(result.stdout)["matches_report"] is True

    def test_validate(self, tmp_path):
        store = tmp_path / "ann"
        store.mkdir()
        (store / "q1.json").write_text(json.dumps(annotation_payload(q1_document())))
        assert run_cli("validate", "--annotations", store).returncode == 0

        payload = annotation_payload(q1_document())
        payload["tlinks"].append({"source": 0, "target": 0, "relation": "BEFORE"})
        (store / "bad.json").write_text(json.dumps(payload))
        result = run_cli("validate", "--annotations", store)

        assert result.returncode == 2
        assert "bad: self_link" in result.stdout

    @pytest.mark.slow
    def test_table_regenerates_packaged_copy(self):
        result = run_cli("table")

        assert result.returncode == 0, result.stderr
        packaged = (REPO_ROOT / "app" / "resources" / "composition_table.txt").read_text()
        assert result.stdout == packaged

    def test_convert_timeml(self, tmp_path):
        source = tmp_path / "doc.tml"
        source.write_text("<TimeML><TEXT>It <EVENT eid='e1'>rained</EVENT>.</TEXT></TimeML>")

        result = run_cli("convert-timeml", source, "--out", tmp_path / "ann")

        assert result.returncode == 0, result.stderr
        assert json.loads(result.stdout)["documents"] == 1
        assert (tmp_path / "ann" / "doc.json").is_file()

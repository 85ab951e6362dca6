"""JSON/JSONL implementation of Run Output Repository"""
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from app.core.exceptions import DatasetParseError, RepositoryError
from app.domain.repositories.run_output_repository import RunOutputRepository


REPORT_FILE = "report.json"


class JsonRunOutputRepository(RunOutputRepository):
    """Record sequences as <name>.jsonl and the report as report.json in one directory"""

    def __init__(self, out_dir: str | Path):
        self.out_dir = Path(out_dir)

    def _write(self, path: Path, content: str) -> None:
        try:
            self.out_dir.mkdir(parents=True, exist_ok=True)
            path.write_text(content, encoding="utf-8")
        except OSError as e:
            raise RepositoryError(f"Failed to write {path}: {e}")

    def write_records(self, name: str, records: Iterable[Dict[str, Any]]) -> None:
        lines = [json.dumps(record, ensure_ascii=False) + "\n" for record in records]
        self._write(self.out_dir / f"{name}.jsonl", "".join(lines))

    def read_records(self, name: str) -> List[Dict[str, Any]]:
        path = self.out_dir / f"{name}.jsonl"
        try:
            content = path.read_text(encoding="utf-8")
        except OSError as e:
            raise DatasetParseError(str(path), None, f"cannot read ({e.strerror})")
        records = []
        for number, line in enumerate(content.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise DatasetParseError(str(path), number, f"invalid JSON ({e.msg})")
        return records

    def write_report(self, report: Dict[str, Any]) -> None:
        self._write(self.out_dir / REPORT_FILE, json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True) + "\n")

    def read_report(self) -> Optional[Dict[str, Any]]:
        path = self.out_dir / REPORT_FILE
        if not path.is_file():
            return None
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise DatasetParseError(str(path), e.lineno, f"invalid JSON ({e.msg})")

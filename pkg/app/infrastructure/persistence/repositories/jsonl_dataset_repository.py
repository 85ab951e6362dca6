"""JSONL implementation of Dataset Repository"""
import json
import logging
from pathlib import Path
from typing import List

from pydantic import ValidationError as PydanticValidationError

from app.core.exceptions import DatasetParseError, DomainException
from app.domain.entities.dataset_example import DatasetExample
from app.domain.repositories.dataset_repository import DatasetRepository
from app.application.dtos.request.dataset_example_dto import DatasetExampleDTO, TimeQAExampleDTO
from app.application.mappers.annotation_mapper import DatasetExampleMapper


logger = logging.getLogger("tempograph.dataset")


class JsonlDatasetRepository(DatasetRepository):
    """
    One example per line

    Lines in TimeQA layout (idx / targets) are adapted on the fly. Blank lines
    are ignored.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def _parse_line(self, line: str, number: int) -> DatasetExample:
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as e:
            raise DatasetParseError(str(self.path), number, f"invalid JSON ({e.msg})")
        if not isinstance(raw, dict):
            raise DatasetParseError(str(self.path), number, "expected a JSON object")
        try:
            if "idx" in raw and "id" not in raw:
                dto = TimeQAExampleDTO.model_validate(raw).to_example()
            else:
                dto = DatasetExampleDTO.model_validate(raw)
            return DatasetExampleMapper.to_entity(dto)
        except PydanticValidationError as e:
            reason = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
            raise DatasetParseError(str(self.path), number, reason)
        except DomainException as e:
            raise DatasetParseError(str(self.path), number, str(e))

    def find_all(self) -> List[DatasetExample]:
        """
        Raises:
            DatasetParseError: unreadable file, malformed line or duplicate id
        """
        try:
            content = self.path.read_text(encoding="utf-8")
        except OSError as e:
            raise DatasetParseError(str(self.path), None, f"cannot read ({e.strerror})")

        examples: List[DatasetExample] = []
        seen: dict[str, int] = {}
        for number, line in enumerate(content.splitlines(), start=1):
            if not line.strip():
                continue
            example = self._parse_line(line, number)
            if example.id in seen:
                raise DatasetParseError(
                    str(self.path), number, f"duplicate id '{example.id}' (first on line {seen[example.id]})"
                )
            seen[example.id] = number
            examples.append(example)
        logger.info(f"Loaded {len(examples)} examples from {self.path}")
        return examples

"""JSON-file implementation of Annotation Repository"""
import json
import logging
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError as PydanticValidationError

from app.core.exceptions import DatasetParseError, RepositoryError
from app.domain.entities.annotated_document import AnnotatedDocument
from app.domain.repositories.annotation_repository import AnnotationRepository
from app.application.dtos.request.annotation_document_dto import AnnotationDocumentDTO
from app.application.mappers.annotation_mapper import AnnotationMapper


logger = logging.getLogger("tempograph.annotations")


class JsonAnnotationRepository(AnnotationRepository):
    """Annotations stored as <example id>.json inside one directory"""

    SUFFIX = ".json"

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def _path_for(self, example_id: str) -> Path:
        return self.directory / f"{example_id}{self.SUFFIX}"

    def _load(self, path: Path) -> AnnotatedDocument:
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise DatasetParseError(str(path), None, f"cannot read ({e.strerror})")
        except json.JSONDecodeError as e:
            raise DatasetParseError(str(path), e.lineno, f"invalid JSON ({e.msg})")
        try:
            dto = AnnotationDocumentDTO.model_validate(raw)
        except PydanticValidationError as e:
            reason = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
            raise DatasetParseError(str(path), None, reason)
        return AnnotationMapper.to_entity(dto)

    def find_by_example_id(self, example_id: str) -> Optional[AnnotatedDocument]:
        path = self._path_for(example_id)
        if not path.is_file():
            return None
        return self._load(path)

    def find_by_ref(self, ref: str) -> AnnotatedDocument:
        path = Path(ref)
        if not path.is_absolute():
            path = self.directory / path
        return self._load(path)

    def list_example_ids(self) -> List[str]:
        if not self.directory.is_dir():
            return []
        return sorted(p.name[: -len(self.SUFFIX)] for p in self.directory.glob(f"*{self.SUFFIX}") if p.is_file())

    def save(self, example_id: str, document: AnnotatedDocument) -> None:
        dto = AnnotationMapper.to_dto(document, example_id)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            self._path_for(example_id).write_text(
                json.dumps(dto.model_dump(by_alias=True), ensure_ascii=False, indent=2) + "\n",
                encoding="utf-8",
            )
        except OSError as e:
            raise RepositoryError(f"Failed to save annotation '{example_id}': {e}")
        logger.debug(f"Saved annotation for {example_id}")

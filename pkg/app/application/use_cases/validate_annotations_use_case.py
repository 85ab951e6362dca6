"""Validate Annotations Use Case"""
import logging
from typing import List

from app.core.exceptions import DatasetParseError, UseCaseError
from app.domain.repositories.annotation_repository import AnnotationRepository
from app.application.dtos.response.validation_report import FindingDTO, ValidationReportDTO


logger = logging.getLogger("tempograph.validate")

PARSE_ERROR = "parse_error"


class ValidateAnnotationsUseCase:
    """
    Validate Annotations Use Case

    Reports every span, surface and tlink problem of every stored annotation
    instead of stopping at the first one.
    """

    def __init__(self, annotation_repo: AnnotationRepository):
        self.annotation_repo = annotation_repo

    def execute(self) -> ValidationReportDTO:
        """Execute the use case"""
        try:
            example_ids = self.annotation_repo.list_example_ids()
            findings: List[FindingDTO] = []
            for example_id in example_ids:
                try:
                    document = self.annotation_repo.find_by_example_id(example_id)
                except DatasetParseError as e:
                    findings.append(FindingDTO(example_id=example_id, kind=PARSE_ERROR, message=str(e)))
                    continue
                if document is None:
                    continue
                for finding in document.find_violations():
                    findings.append(FindingDTO(
                        example_id=example_id,
                        kind=finding.kind.value,
                        message=finding.message,
                        char_start=finding.char_start,
                        char_end=finding.char_end,
                        label=finding.label,
                    ))
            if findings:
                logger.warning(f"{len(findings)} findings in {len(example_ids)} annotations")
            return ValidationReportDTO(documents=len(example_ids), findings=findings)
        except Exception as e:
            raise UseCaseError(f"Failed to validate annotations: {str(e)}")

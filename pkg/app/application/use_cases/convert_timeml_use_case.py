"""Convert TimeML Use Case"""
import logging
from collections import Counter
from pathlib import Path
from typing import Iterable, List

from app.core.exceptions import InfrastructureError, UseCaseError
from app.domain.repositories.annotation_repository import AnnotationRepository
from app.application.dtos.response.maintenance_reports import ConversionReportDTO
from app.infrastructure.annotators.timeml_converter import TimeMLConverter


logger = logging.getLogger("tempograph.timeml")


def expand_inputs(inputs: Iterable[str]) -> List[Path]:
    """Files as given, directories as their *.tml and *.xml files, sorted"""
    paths: List[Path] = []
    for item in inputs:
        path = Path(item)
        if path.is_dir():
            paths.extend(sorted(p for p in path.iterdir() if p.suffix in (".tml", ".xml") and p.is_file()))
        else:
            paths.append(path)
    return paths


class ConvertTimeMLUseCase:
    """
    Convert TimeML Use Case

    Converts TimeML documents into stored annotations keyed by document id.
    """

    def __init__(self, annotation_repo: AnnotationRepository, converter: TimeMLConverter):
        self.annotation_repo = annotation_repo
        self.converter = converter

    def execute(self, inputs: Iterable[str]) -> ConversionReportDTO:
        """
        Execute the use case

        Raises:
            DatasetParseError: an input is not TimeML
            RepositoryError: an annotation cannot be stored
        """
        try:
            dropped: Counter = Counter()
            report = ConversionReportDTO()
            for path in expand_inputs(inputs):
                conversion = self.converter.convert_file(path)
                self.annotation_repo.save(conversion.doc_id, conversion.document)
                report.documents += 1
                report.events += len(conversion.document.events)
                report.timexes += len(conversion.document.timexes)
                report.tlinks += len(conversion.document.tlinks)
                dropped.update(conversion.dropped)
            report.dropped_tlinks = dict(sorted(dropped.items()))
            logger.info(f"Converted {report.documents} TimeML documents")
            return report
        except InfrastructureError:
            raise
        except Exception as e:
            raise UseCaseError(f"Failed to convert TimeML: {str(e)}")

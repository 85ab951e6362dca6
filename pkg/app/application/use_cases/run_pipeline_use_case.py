"""Run Pipeline Use Case"""
import logging
import uuid
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Tuple

from app.core.exceptions import DomainException, InfrastructureError, UseCaseError
from app.domain.entities.annotated_document import AnnotatedDocument
from app.domain.entities.dataset_example import DatasetExample
from app.domain.repositories.annotation_repository import AnnotationRepository
from app.domain.repositories.dataset_repository import DatasetRepository
from app.domain.repositories.run_output_repository import RunOutputRepository
from app.domain.services.document_annotator import DocumentAnnotator
from app.domain.services.graph_stats import aggregate_stats
from app.domain.services.prompt_builder import PromptShot
from app.application.dtos.request.run_config import FusionMode, RunConfig
from app.application.dtos.response.run_report import ExampleErrorDTO, RunReportDTO
from app.application.mappers.graph_mapper import GraphMapper
from app.application.use_cases.example_processor import (
    ExampleOutcome,
    ExampleTask,
    OutcomeStatus,
    ProcessingOptions,
    fused_texts,
    prepare_document,
    process_example,
)
from app.infrastructure.observability import PipelineStage, get_pipeline_logger


logger = logging.getLogger("tempograph.pipeline")

RECORD_FILES = {
    FusionMode.ERR: "fused",
    FusionMode.GNN: "gnn",
    FusionMode.PROMPT: "prompts",
}
GRAPH_FILE = "graphs"


class RunPipelineUseCase:
    """
    Run Pipeline Use Case

    Following Single Responsibility Principle - orchestrates loading,
    per-example processing and writing. Per-example work is pure, so the
    output does not depend on the worker count.
    """

    def __init__(
        self,
        dataset_repo: DatasetRepository,
        output_repo: RunOutputRepository,
        annotator: DocumentAnnotator,
        annotation_repo: Optional[AnnotationRepository] = None,
        shots_repo: Optional[DatasetRepository] = None,
    ):
        self.dataset_repo = dataset_repo
        self.output_repo = output_repo
        self.annotator = annotator
        self.annotation_repo = annotation_repo
        self.shots_repo = shots_repo
        self.observability = get_pipeline_logger()

    def execute(self, config: RunConfig) -> RunReportDTO:
        """
        Execute the use case

        Raises:
            DatasetParseError: the dataset cannot be read
            RepositoryError: outputs cannot be written
            UseCaseError: anything unexpected
        """
        trace = self.observability.start_execution_trace(str(uuid.uuid4()), "run")
        try:
            with self.observability.step(trace, "load_dataset", PipelineStage.LOAD) as meta:
                examples = self.dataset_repo.find_all()
                meta["examples"] = len(examples)

            with self.observability.step(trace, "resolve_annotations", PipelineStage.ANNOTATE) as meta:
                tasks, failures, stub_annotated = self._build_tasks(examples, config)
                meta["stub_annotated"] = stub_annotated

            with self.observability.step(trace, "process", PipelineStage.PROCESS, workers=config.workers):
                outcomes = self._run(tasks, config.workers)

            outcomes = sorted([*outcomes, *failures], key=lambda o: o.id)
            report = self._report(config, outcomes, stub_annotated)

            with self.observability.step(trace, "write_outputs", PipelineStage.WRITE):
                self.output_repo.write_records(RECORD_FILES[config.mode], (o.record for o in outcomes if o.record))
                self.output_repo.write_records(GRAPH_FILE, (o.graph_record for o in outcomes if o.graph_record))
                self.output_repo.write_report(report.model_dump())

            self.observability.end_execution_trace(trace)
            logger.info(
                f"Processed {report.processed}/{report.total} "
                f"(passthrough {report.passthrough}, skipped {report.skipped})"
            )
            return report
        except (DomainException, InfrastructureError) as e:
            self.observability.end_execution_trace(trace, success=False, error_message=str(e))
            raise
        except Exception as e:
            self.observability.end_execution_trace(trace, success=False, error_message=str(e))
            raise UseCaseError(f"Failed to run pipeline: {str(e)}")

    def resolve_annotation(self, example: DatasetExample) -> Tuple[AnnotatedDocument, bool]:
        """
        Annotation of an example and whether the stub annotator produced it

        Inline annotations win, then an explicit reference, then the store's
        entry for the example id, then the stub annotator.
        """
        if example.annotation is not None:
            return example.annotation, False
        if self.annotation_repo is not None:
            if example.annotation_ref:
                return self.annotation_repo.find_by_ref(example.annotation_ref), False
            stored = self.annotation_repo.find_by_example_id(example.id)
            if stored is not None:
                return stored, False
        return self.annotator.annotate(example.context), True

    def _build_tasks(
        self,
        examples: List[DatasetExample],
        config: RunConfig,
    ) -> Tuple[List[ExampleTask], List[ExampleOutcome], int]:
        options = ProcessingOptions.from_config(config, self._load_shots(config))
        tasks: List[ExampleTask] = []
        failures: List[ExampleOutcome] = []
        stub_annotated = 0
        for example in examples:
            try:
                document, from_stub = self.resolve_annotation(example)
            except InfrastructureError as e:
                logger.warning(f"Skipping {example.id}: {e}")
                failures.append(ExampleOutcome(
                    id=example.id,
                    status=OutcomeStatus.SKIPPED,
                    error_type=type(e).__name__,
                    message=str(e),
                ))
                continue
            stub_annotated += int(from_stub)
            tasks.append(ExampleTask(example=example, document=document, options=options))
        return tasks, failures, stub_annotated

    def _load_shots(self, config: RunConfig) -> Tuple[PromptShot, ...]:
        if config.mode != FusionMode.PROMPT or self.shots_repo is None:
            return ()
        plain = ProcessingOptions.from_config(config)
        shots = []
        for example in self.shots_repo.find_all():
            try:
                document, _ = self.resolve_annotation(example)
                document = prepare_document(example, document, config.context_char_budget)
                question, context = fused_texts(example, document, plain)
            except (DomainException, InfrastructureError) as e:
                logger.warning(f"Shot {example.id} kept unfused: {e}")
                question, context = example.question, example.context
            shots.append(PromptShot(context=context, question=question, answers=list(example.answers)))
        logger.info(f"Loaded {len(shots)} prompt shots")
        return tuple(shots)

    @staticmethod
    def _run(tasks: List[ExampleTask], workers: int) -> List[ExampleOutcome]:
        if workers <= 1 or len(tasks) <= 1:
            return [process_example(task) for task in tasks]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(process_example, tasks, chunksize=max(1, len(tasks) // (workers * 4))))

    @staticmethod
    def _report(config: RunConfig, outcomes: List[ExampleOutcome], stub_annotated: int) -> RunReportDTO:
        processed = [o for o in outcomes if o.status == OutcomeStatus.PROCESSED]
        skipped = [o for o in outcomes if o.status == OutcomeStatus.SKIPPED]

        def mean(values: Iterable[int]) -> float:
            values = list(values)
            return sum(values) / len(values) if values else 0.0

        def stats_of(attr: str):
            return aggregate_stats(getattr(o, attr) for o in processed)

        return RunReportDTO(
            variant=config.variant.value,
            mode=config.mode.value,
            merge3=config.merge3,
            total=len(outcomes),
            processed=len(processed),
            skipped=len(skipped),
            passthrough=sum(1 for o in outcomes if o.status == OutcomeStatus.PASSTHROUGH),
            stub_annotated=stub_annotated,
            errors=[ExampleErrorDTO(id=o.id, error_type=o.error_type, message=o.message) for o in skipped],
            full_graph_stats=GraphMapper.to_stats_dto(stats_of("full_stats")),
            fused_graph_stats=GraphMapper.to_stats_dto(stats_of("fused_stats")),
            unnormalizable_timexes=sum(o.unnormalizable_timexes for o in processed),
            undetermined_events=sum(o.undetermined_events for o in processed),
            dropped_events=sum(o.dropped_events for o in processed),
            mean_tokens_before=mean(o.tokens_before for o in processed),
            mean_tokens_after=mean(o.tokens_after for o in processed),
        )

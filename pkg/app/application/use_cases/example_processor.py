"""Per-example pipeline work, kept at module level so worker processes can run it"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from app.core.exceptions import BadAnnotation, DomainException
from app.domain.entities.annotated_document import AnnotatedDocument
from app.domain.entities.dataset_example import DatasetExample
from app.domain.entities.temporal_graph import GraphVariant
from app.domain.services.chronon import extract_question_time
from app.domain.services.fusion import (
    CONTEXT_PREFIX,
    QUESTION_PREFIX,
    count_whitespace_pieces,
    err_parts,
    err_serialize,
    gnn_export,
    length_report,
    plain_serialization,
    relations_to_question,
    concat,
)
from app.domain.services.graph_builder import build_graph_with_report, select_subgraph
from app.domain.services.graph_stats import GraphStats, graph_stats
from app.domain.services.inference import infer_all
from app.domain.services.interval_algebra import load_composition_table
from app.domain.services.prompt_builder import PromptShot, PromptTarget, build_icl_prompt
from app.domain.value_objects import TemporalRelation
from app.application.dtos.request.run_config import FusionMode, RunConfig
from app.application.dtos.response.record_dtos import GnnExportDTO, GraphRecordDTO
from app.application.mappers.fusion_mapper import FusionMapper
from app.application.mappers.graph_mapper import GraphMapper


logger = logging.getLogger("tempograph.pipeline")


class OutcomeStatus:
    PROCESSED = "processed"
    PASSTHROUGH = "passthrough"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class ProcessingOptions:
    """The picklable part of a RunConfig, plus prepared prompt shots"""
    variant: GraphVariant = GraphVariant.DT2QT
    mode: FusionMode = FusionMode.ERR
    merge3: bool = False
    padded: bool = False
    context_char_budget: Optional[int] = None
    composition_table_path: Optional[str] = None
    fused_prompt: bool = True
    instruction: str = ""
    shots: Tuple[PromptShot, ...] = ()

    @classmethod
    def from_config(cls, config: RunConfig, shots: Tuple[PromptShot, ...] = ()) -> "ProcessingOptions":
        return cls(
            variant=config.variant,
            mode=config.mode,
            merge3=config.merge3,
            padded=config.padded,
            context_char_budget=config.context_char_budget,
            composition_table_path=config.composition_table_path,
            fused_prompt=config.fused_prompt,
            instruction=config.instruction,
            shots=shots,
        )


@dataclass(frozen=True)
class ExampleTask:
    example: DatasetExample
    document: AnnotatedDocument
    options: ProcessingOptions


@dataclass
class ExampleOutcome:
    """Everything the report and the output files need from one example"""
    id: str
    status: str
    record: Optional[Dict[str, Any]] = None
    graph_record: Optional[Dict[str, Any]] = None
    full_stats: Optional[GraphStats] = None
    fused_stats: Optional[GraphStats] = None
    unnormalizable_timexes: int = 0
    undetermined_events: int = 0
    dropped_events: int = 0
    tokens_before: int = 0
    tokens_after: int = 0
    error_type: Optional[str] = None
    message: Optional[str] = None


def prepare_document(example: DatasetExample, document: AnnotatedDocument, budget: Optional[int]) -> AnnotatedDocument:
    """
    Raises:
        BadAnnotation: the annotation was made over a different text
    """
    if document.text != example.context:
        raise BadAnnotation(f"Annotation text of '{example.id}' does not match its context")
    return document.truncated(budget) if budget else document


def _passthrough(example: DatasetExample, document: AnnotatedDocument, options: ProcessingOptions) -> ExampleOutcome:
    plain = plain_serialization(example.question, document.text)
    if options.mode == FusionMode.ERR:
        record = FusionMapper.to_fused_record(example.id, concat(plain), example.answers, is_fused=False)
    elif options.mode == FusionMode.GNN:
        record = GnnExportDTO(id=example.id, marked_text=plain, answers=example.answers, fused=False)
    else:
        target = PromptTarget(context=document.text, question=example.question)
        prompt = build_icl_prompt(options.instruction, options.shots, target, fused=options.fused_prompt)
        record = FusionMapper.to_prompt_record(example.id, prompt, example.answers, is_fused=False)
    return ExampleOutcome(
        id=example.id,
        status=OutcomeStatus.PASSTHROUGH,
        record=record.model_dump(by_alias=True),
    )


def fused_texts(example: DatasetExample, document: AnnotatedDocument, options: ProcessingOptions) -> Tuple[str, str]:
    """
    Question and context as they appear in a prompt

    Falls back to the plain texts when the question has no time expression.
    """
    qspan = extract_question_time(example.question)
    if qspan is None or not options.fused_prompt:
        return example.question, document.text
    table = load_composition_table(options.composition_table_path)
    graph = build_graph_with_report(example.question, qspan, document).graph
    selected = select_subgraph(graph, options.variant, table)
    relations = relations_to_question(selected, options.variant == GraphVariant.FULL, table)
    question, context = err_parts(example.question, qspan, document.text, relations, options.merge3, options.padded)
    return question.text, context.text


def process_example(task: ExampleTask) -> ExampleOutcome:
    """Construction, inference and fusion for one example; domain errors skip it"""
    example, options = task.example, task.options
    try:
        document = prepare_document(example, task.document, options.context_char_budget)
        question_text = example.question
        qspan = extract_question_time(question_text)
        if qspan is None:
            logger.debug(f"{example.id}: no question time, passing through")
            return _passthrough(example, document, options)

        table = load_composition_table(options.composition_table_path)
        built = build_graph_with_report(question_text, qspan, document)
        full = built.graph
        selected = select_subgraph(full, options.variant, table)
        inferred = infer_all(full, table)

        before = plain_serialization(question_text, document.text)
        infer_events = options.variant == GraphVariant.FULL

        if options.mode == FusionMode.ERR:
            relations = relations_to_question(selected, infer_events, table)
            fused = err_serialize(question_text, qspan, document.text, relations, options.merge3, options.padded)
            tokens_before, tokens_after = length_report(before, fused, count_whitespace_pieces)
            record = FusionMapper.to_fused_record(example.id, fused, example.answers)
        elif options.mode == FusionMode.GNN:
            export = gnn_export(question_text, qspan, document.text, selected, options.padded)
            tokens_before = count_whitespace_pieces(before)
            tokens_after = count_whitespace_pieces(export.marked_text)
            record = FusionMapper.to_gnn_dto(example.id, export, example.answers)
        else:
            if options.fused_prompt:
                relations = relations_to_question(selected, infer_events, table)
                question, context = err_parts(question_text, qspan, document.text, relations, options.merge3, options.padded)
                fused = concat(QUESTION_PREFIX, question, CONTEXT_PREFIX, context)
                tokens_before, tokens_after = length_report(before, fused, count_whitespace_pieces)
                target = PromptTarget(context=context.text, question=question.text)
            else:
                tokens_before = tokens_after = count_whitespace_pieces(before)
                target = PromptTarget(context=document.text, question=question_text)
            prompt = build_icl_prompt(options.instruction, options.shots, target, fused=options.fused_prompt)
            record = FusionMapper.to_prompt_record(example.id, prompt, example.answers, is_fused=options.fused_prompt)

        graph_record = GraphRecordDTO(
            id=example.id,
            full=GraphMapper.to_dump_dto(full),
            selected=GraphMapper.to_dump_dto(selected),
        )
        return ExampleOutcome(
            id=example.id,
            status=OutcomeStatus.PROCESSED,
            record=record.model_dump(by_alias=True),
            graph_record=graph_record.model_dump(),
            full_stats=graph_stats(full),
            fused_stats=graph_stats(selected),
            unnormalizable_timexes=len(built.unnormalizable_timexes),
            undetermined_events=sum(1 for r in inferred.values() if r == TemporalRelation.UNDETERMINED),
            dropped_events=built.dropped_events,
            tokens_before=tokens_before,
            tokens_after=tokens_after,
        )
    except DomainException as e:
        logger.warning(f"Skipping {example.id}: {type(e).__name__}: {e}")
        return ExampleOutcome(
            id=example.id,
            status=OutcomeStatus.SKIPPED,
            error_type=type(e).__name__,
            message=str(e),
        )

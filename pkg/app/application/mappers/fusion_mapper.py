"""Fusion mapper - converts fused sequences and exports to output records"""
from typing import List, Sequence

from app.domain.entities.fused_sequence import FusedSequence, GnnExport, MarkerSpan
from app.application.dtos.response.record_dtos import (
    FusedRecordDTO,
    GnnEdgeDTO,
    GnnExportDTO,
    GnnNodeDTO,
    MarkerSpanDTO,
    PromptRecordDTO,
)


class FusionMapper:
    """Mapper for fusion outputs"""

    @staticmethod
    def _spans(spans: Sequence[MarkerSpan]) -> List[MarkerSpanDTO]:
        return [MarkerSpanDTO(label=s.label, start=s.char_start, end=s.char_end) for s in spans]

    @staticmethod
    def to_fused_record(example_id: str, fused: FusedSequence, answers: List[str], is_fused: bool = True) -> FusedRecordDTO:
        return FusedRecordDTO(
            id=example_id,
            text=fused.text,
            marker_spans=FusionMapper._spans(fused.marker_spans),
            answers=answers,
            fused=is_fused,
        )

    @staticmethod
    def to_gnn_dto(example_id: str, export: GnnExport, answers: List[str], is_fused: bool = True) -> GnnExportDTO:
        return GnnExportDTO(
            id=example_id,
            marked_text=export.marked_text,
            nodes=[GnnNodeDTO(node_id=n.node_id, kind=n.kind.value, marker_index=n.marker_index) for n in export.nodes],
            edges=[GnnEdgeDTO(src=e.src, dst=e.dst, relation_id=e.relation_id) for e in export.edges],
            relation_vocabulary=[r.value for r in export.relation_vocabulary],
            marker_spans=FusionMapper._spans(export.marker_spans),
            answers=answers,
            fused=is_fused,
        )

    @staticmethod
    def to_prompt_record(example_id: str, prompt: str, answers: List[str], is_fused: bool = True) -> PromptRecordDTO:
        return PromptRecordDTO(id=example_id, prompt=prompt, answers=answers, fused=is_fused)

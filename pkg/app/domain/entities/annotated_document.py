"""Annotated document entity - ingestion boundary for event/timex/tlink annotations"""
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from app.core.exceptions import BadAnnotation, ValidationError
from app.domain.value_objects import TemporalRelation


@dataclass(frozen=True)
class EventAnnotation:
    """Event mention, typically a verb"""
    char_start: int
    char_end: int
    surface: str


@dataclass(frozen=True)
class TimexAnnotation:
    """Time expression with an optional normalized value (YYYY, YYYY-MM, YYYY-MM-DD or A/B)"""
    char_start: int
    char_end: int
    surface: str
    value: Optional[str] = None


@dataclass(frozen=True)
class TimeLinkAnnotation:
    """
    Relation between two annotations

    source and target index the combined list events + timexes.
    """
    source: int
    target: int
    relation: str


class FindingKind(str, Enum):
    """Kinds of annotation problems"""
    SPAN_OUT_OF_RANGE = "span_out_of_range"
    SURFACE_MISMATCH = "surface_mismatch"
    TLINK_INDEX_OUT_OF_RANGE = "tlink_index_out_of_range"
    UNKNOWN_RELATION = "unknown_relation"
    SELF_LINK = "self_link"


@dataclass(frozen=True)
class AnnotationFinding:
    """One invariant violation inside an annotated document"""
    kind: FindingKind
    message: str
    char_start: Optional[int] = None
    char_end: Optional[int] = None
    label: Optional[str] = None


@dataclass
class AnnotatedDocument:
    """Raw document text plus externally supplied annotations"""
    text: str
    events: List[EventAnnotation] = field(default_factory=list)
    timexes: List[TimexAnnotation] = field(default_factory=list)
    tlinks: List[TimeLinkAnnotation] = field(default_factory=list)

    @property
    def annotation_count(self) -> int:
        return len(self.events) + len(self.timexes)

    def _span_findings(self, kind_name: str, annotation) -> List[AnnotationFinding]:
        start, end = annotation.char_start, annotation.char_end
        if not 0 <= start < end <= len(self.text):
            return [AnnotationFinding(
                kind=FindingKind.SPAN_OUT_OF_RANGE,
                message=f"{kind_name} span [{start}, {end}) outside text of length {len(self.text)}",
                char_start=start,
                char_end=end,
            )]
        if self.text[start:end] != annotation.surface:
            return [AnnotationFinding(
                kind=FindingKind.SURFACE_MISMATCH,
                message=f"{kind_name} surface '{annotation.surface}' does not match text '{self.text[start:end]}'",
                char_start=start,
                char_end=end,
            )]
        return []

    def find_violations(self) -> List[AnnotationFinding]:
        """All invariant violations, in annotation order"""
        findings: List[AnnotationFinding] = []
        for event in self.events:
            findings.extend(self._span_findings("Event", event))
        for timex in self.timexes:
            findings.extend(self._span_findings("Timex", timex))

        for position, tlink in enumerate(self.tlinks):
            for index in (tlink.source, tlink.target):
                if not 0 <= index < self.annotation_count:
                    findings.append(AnnotationFinding(
                        kind=FindingKind.TLINK_INDEX_OUT_OF_RANGE,
                        message=f"Tlink {position} references annotation {index}, only {self.annotation_count} exist",
                    ))
            if tlink.source == tlink.target:
                findings.append(AnnotationFinding(
                    kind=FindingKind.SELF_LINK,
                    message=f"Tlink {position} links annotation {tlink.source} to itself",
                ))
            try:
                TemporalRelation.from_label(tlink.relation)
            except ValidationError:
                findings.append(AnnotationFinding(
                    kind=FindingKind.UNKNOWN_RELATION,
                    message=f"Tlink {position} has unknown relation '{tlink.relation}'",
                    label=tlink.relation,
                ))
        return findings

    def truncated(self, budget: int) -> "AnnotatedDocument":
        """
        Cut the text at budget characters

        Annotations ending past the cut are dropped along with every tlink that
        references them; the remaining tlinks are re-indexed.
        """
        if len(self.text) <= budget:
            return self
        events = [e for e in self.events if e.char_end <= budget]
        timexes = [t for t in self.timexes if t.char_end <= budget]
        kept = [i for i, e in enumerate(self.events) if e.char_end <= budget]
        kept += [len(self.events) + i for i, t in enumerate(self.timexes) if t.char_end <= budget]
        new_index = {old: new for new, old in enumerate(kept)}
        tlinks = [
            TimeLinkAnnotation(new_index[t.source], new_index[t.target], t.relation)
            for t in self.tlinks
            if t.source in new_index and t.target in new_index
        ]
        return AnnotatedDocument(self.text[:budget], events, timexes, tlinks)

    def validate(self) -> None:
        """
        Raises:
            BadAnnotation: first violation found
        """
        findings = self.find_violations()
        if findings:
            raise BadAnnotation(findings[0].message)

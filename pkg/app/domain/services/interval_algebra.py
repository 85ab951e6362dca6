"""
Six-relation interval algebra and relation composition

relate() collapses Allen's thirteen relations onto BEFORE, AFTER, INCLUDES,
INCLUDED_BY, SIMULTANEOUS and OVERLAP over closed intervals. compose() looks up
the checked-in composition table, which build_composition_table() regenerates by
enumerating integer intervals.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Any, Mapping, Optional

import numpy as np

from app.core.exceptions import OracleInconsistency, ValidationError
from app.domain.value_objects import TimeInterval, TemporalRelation, RELATION_VOCABULARY


logger = logging.getLogger("tempograph.interval_algebra")

GENERATION_WIDTH = 8
SOUNDNESS_WIDTH = 12

_B = TemporalRelation.BEFORE
_A = TemporalRelation.AFTER
_I = TemporalRelation.INCLUDES
_IB = TemporalRelation.INCLUDED_BY
_S = TemporalRelation.SIMULTANEOUS
_O = TemporalRelation.OVERLAP
_U = TemporalRelation.UNDETERMINED

# Determined cells as drawn in the published transitivity rules; every other
# non-identity cell is ambiguous.
REFERENCE_RULES: Mapping[tuple[TemporalRelation, TemporalRelation], TemporalRelation] = MappingProxyType({
    (_B, _B): _B,
    (_B, _I): _B,
    (_A, _A): _A,
    (_A, _I): _A,
    (_I, _I): _I,
    (_IB, _B): _B,
    (_IB, _A): _A,
    (_IB, _IB): _IB,
})


def relate_endpoints(a_start: Any, a_end: Any, b_start: Any, b_end: Any) -> TemporalRelation:
    """Relation of [a_start, a_end] to [b_start, b_end] for any totally ordered endpoints"""
    if a_start == b_start and a_end == b_end:
        return TemporalRelation.SIMULTANEOUS
    if a_end < b_start:
        return TemporalRelation.BEFORE
    if a_start > b_end:
        return TemporalRelation.AFTER
    if a_start <= b_start and b_end <= a_end:
        return TemporalRelation.INCLUDES
    if b_start <= a_start and a_end <= b_end:
        return TemporalRelation.INCLUDED_BY
    return TemporalRelation.OVERLAP


def relate(a: TimeInterval, b: TimeInterval) -> TemporalRelation:
    """Relation of interval a to interval b; unbounded endpoints compare as infinities"""
    return relate_endpoints(a.start_key, a.end_key, b.start_key, b.end_key)


@dataclass(frozen=True)
class CompositionTable:
    """6x6 mapping (first hop, second hop) -> relation, possibly UNDETERMINED"""
    cells: Mapping[tuple[TemporalRelation, TemporalRelation], TemporalRelation] = field(
        default_factory=dict
    )

    def __post_init__(self):
        missing = [
            (r1, r2) for r1 in RELATION_VOCABULARY for r2 in RELATION_VOCABULARY
            if (r1, r2) not in self.cells
        ]
        if missing:
            raise ValidationError(f"Composition table is missing {len(missing)} cells, first {missing[0]}")
        object.__setattr__(self, "cells", MappingProxyType(dict(self.cells)))

    def lookup(self, first: TemporalRelation, second: TemporalRelation) -> TemporalRelation:
        return self.cells[(first, second)]

    def to_text(self) -> str:
        """Golden file form: one "R1 R2 -> R3" line per cell, row-major"""
        lines = [
            f"{r1.value} {r2.value} -> {self.cells[(r1, r2)].value}"
            for r1 in RELATION_VOCABULARY
            for r2 in RELATION_VOCABULARY
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CompositionTable":
        cells = {}
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 4 or parts[2] != "->":
                raise ValidationError(f"Composition table line {number} is malformed: '{line}'")
            try:
                first, second, result = (TemporalRelation(parts[0]), TemporalRelation(parts[1]), TemporalRelation(parts[3]))
            except ValueError:
                raise ValidationError(f"Composition table line {number} has an unknown relation: '{line}'")
            cells[(first, second)] = result
        return cls(cells)

    def differences(self, other: "CompositionTable") -> list[tuple[TemporalRelation, TemporalRelation, TemporalRelation, TemporalRelation]]:
        """Cells where the two tables disagree, as (r1, r2, ours, theirs)"""
        return [
            (r1, r2, self.cells[(r1, r2)], other.cells[(r1, r2)])
            for r1 in RELATION_VOCABULARY
            for r2 in RELATION_VOCABULARY
            if self.cells[(r1, r2)] is not other.cells[(r1, r2)]
        ]


_CODES = {relation: index for index, relation in enumerate(RELATION_VOCABULARY)}


def enumerate_intervals(width: int) -> list[tuple[int, int]]:
    """All closed integer intervals [s, e] with 0 <= s <= e < width"""
    return [(start, end) for start in range(width) for end in range(start, width)]


def _relation_matrix(width: int) -> np.ndarray:
    intervals = enumerate_intervals(width)
    matrix = np.empty((len(intervals), len(intervals)), dtype=np.int32)
    for i, (a_start, a_end) in enumerate(intervals):
        for j, (b_start, b_end) in enumerate(intervals):
            matrix[i, j] = _CODES[relate_endpoints(a_start, a_end, b_start, b_end)]
    return matrix


def composition_outcomes(width: int) -> dict[tuple[TemporalRelation, TemporalRelation], set[TemporalRelation]]:
    """
    Every relate(A, C) seen for relate(A, B) = r1 and relate(B, C) = r2

    Enumerates all interval triples inside an integer window of the given width.
    """
    matrix = _relation_matrix(width)
    size = len(RELATION_VOCABULARY)
    first_hop = matrix[:, :, None]
    second_hop = matrix[None, :, :]
    direct = matrix[:, None, :]
    codes = np.unique((first_hop * size + second_hop) * size + direct)

    outcomes: dict[tuple[TemporalRelation, TemporalRelation], set[TemporalRelation]] = defaultdict(set)
    for code in codes.tolist():
        first, rest = divmod(code, size * size)
        second, result = divmod(rest, size)
        outcomes[(RELATION_VOCABULARY[first], RELATION_VOCABULARY[second])].add(RELATION_VOCABULARY[result])
    return dict(outcomes)


def check_table_invariants(table: CompositionTable) -> None:
    """
    Raises:
        OracleInconsistency: identity or inverse symmetry is violated
    """
    for relation in RELATION_VOCABULARY:
        if table.lookup(relation, _S) is not relation or table.lookup(_S, relation) is not relation:
            raise OracleInconsistency(f"SIMULTANEOUS is not the identity for {relation.value}")
    for r1 in RELATION_VOCABULARY:
        for r2 in RELATION_VOCABULARY:
            forward = table.lookup(r1, r2)
            if forward is _U:
                continue
            backward = table.lookup(r2.inverse, r1.inverse)
            if backward is not forward.inverse:
                raise OracleInconsistency(
                    f"compose({r1.value}, {r2.value}) = {forward.value} but "
                    f"compose({r2.inverse.value}, {r1.inverse.value}) = {backward.value}"
                )


def build_composition_table(width: int = GENERATION_WIDTH) -> CompositionTable:
    """
    Generate the composition table from interval semantics

    A cell holds the single outcome observed in the window, or UNDETERMINED when
    several outcomes are possible.

    Raises:
        OracleInconsistency: the generated table breaks identity or inverse symmetry
    """
    outcomes = composition_outcomes(width)
    cells = {}
    for r1 in RELATION_VOCABULARY:
        for r2 in RELATION_VOCABULARY:
            seen = outcomes.get((r1, r2), set())
            if not seen:
                raise OracleInconsistency(f"No witness for ({r1.value}, {r2.value}) at width {width}")
            cells[(r1, r2)] = next(iter(seen)) if len(seen) == 1 else _U
    table = CompositionTable(cells)
    check_table_invariants(table)
    logger.info(f"Built composition table at width {width}: {sum(1 for r in cells.values() if r is not _U)} determined cells")
    return table


def find_counterexamples(
    table: CompositionTable,
    width: int = SOUNDNESS_WIDTH,
) -> list[tuple[TemporalRelation, TemporalRelation, TemporalRelation]]:
    """Determined cells contradicted by some interval triple, as (r1, r2, observed)"""
    outcomes = composition_outcomes(width)
    counterexamples = []
    for (r1, r2), seen in sorted(outcomes.items(), key=lambda item: (_CODES[item[0][0]], _CODES[item[0][1]])):
        expected = table.lookup(r1, r2)
        if expected is _U:
            continue
        for observed in sorted(seen, key=_CODES.__getitem__):
            if observed is not expected:
                counterexamples.append((r1, r2, observed))
    return counterexamples


def reference_table() -> CompositionTable:
    """Table with the published determined cells and SIMULTANEOUS as identity"""
    cells = {}
    for r1 in RELATION_VOCABULARY:
        for r2 in RELATION_VOCABULARY:
            if r1 is _S:
                cells[(r1, r2)] = r2
            elif r2 is _S:
                cells[(r1, r2)] = r1
            else:
                cells[(r1, r2)] = REFERENCE_RULES.get((r1, r2), _U)
    return CompositionTable(cells)


def reconcile(generated: CompositionTable) -> CompositionTable:
    """
    Merge a generated table with the published rules

    Disagreeing cells are logged and the published value is kept.
    """
    published = reference_table()
    differences = published.differences(generated)
    for r1, r2, expected, observed in differences:
        logger.warning(
            f"Composition ({r1.value}, {r2.value}): published {expected.value}, generated {observed.value}; keeping published"
        )
    if not differences:
        logger.info("Generated composition table agrees with the published rules")
    return published if differences else generated


def _read_table_text(path: Optional[str]) -> str:
    if path:
        return Path(path).read_text(encoding="utf-8")
    return resources.files("app.resources").joinpath("composition_table.txt").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_composition_table(path: Optional[str] = None) -> CompositionTable:
    """Load the golden table, packaged or from an explicit path"""
    table = CompositionTable.from_text(_read_table_text(path))
    check_table_invariants(table)
    logger.debug(f"Loaded composition table from {path or 'package resources'}")
    return table


def compose(
    first: TemporalRelation,
    second: TemporalRelation,
    table: Optional[CompositionTable] = None,
) -> TemporalRelation:
    """Relation of A to C given A-first->B and B-second->C"""
    if first is _U or second is _U:
        return _U
    if table is None:
        table = load_composition_table()
    return table.lookup(first, second)

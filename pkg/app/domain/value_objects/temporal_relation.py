"""Temporal relation value object"""
from enum import Enum

from app.core.exceptions import ValidationError


class TemporalRelation(str, Enum):
    """The six stored relations plus the inference-only UNDETERMINED"""
    BEFORE = "BEFORE"
    AFTER = "AFTER"
    INCLUDES = "INCLUDES"
    INCLUDED_BY = "INCLUDED_BY"
    SIMULTANEOUS = "SIMULTANEOUS"
    OVERLAP = "OVERLAP"
    UNDETERMINED = "UNDETERMINED"

    @classmethod
    def from_label(cls, label: str) -> "TemporalRelation":
        """
        Parse a stored relation label

        Accepts enum names ("INCLUDED_BY") and marker labels ("included by").
        UNDETERMINED is not a storable label.
        """
        key = label.strip().upper().replace(" ", "_")
        try:
            relation = cls(key)
        except ValueError:
            raise ValidationError(f"Unknown relation label '{label}'")
        if relation is cls.UNDETERMINED:
            raise ValidationError("UNDETERMINED cannot be used as an edge label")
        return relation

    @property
    def inverse(self) -> "TemporalRelation":
        return _INVERSES.get(self, self)

    @property
    def label(self) -> str:
        """Marker label: lower case with internal space"""
        return self.value.lower().replace("_", " ")

    @property
    def relation_id(self) -> int:
        """Index in the fixed export vocabulary"""
        if self is TemporalRelation.UNDETERMINED:
            raise ValidationError("UNDETERMINED has no vocabulary id")
        return RELATION_VOCABULARY.index(self)

    def merged(self) -> "TemporalRelation":
        """Collapse onto BEFORE / AFTER / OVERLAP"""
        if self in (TemporalRelation.BEFORE, TemporalRelation.AFTER, TemporalRelation.UNDETERMINED):
            return self
        return TemporalRelation.OVERLAP


_INVERSES = {
    TemporalRelation.BEFORE: TemporalRelation.AFTER,
    TemporalRelation.AFTER: TemporalRelation.BEFORE,
    TemporalRelation.INCLUDES: TemporalRelation.INCLUDED_BY,
    TemporalRelation.INCLUDED_BY: TemporalRelation.INCLUDES,
}

RELATION_VOCABULARY: tuple[TemporalRelation, ...] = (
    TemporalRelation.BEFORE,
    TemporalRelation.AFTER,
    TemporalRelation.INCLUDES,
    TemporalRelation.INCLUDED_BY,
    TemporalRelation.SIMULTANEOUS,
    TemporalRelation.OVERLAP,
)

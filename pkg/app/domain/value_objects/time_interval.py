"""Time interval value object"""
from dataclasses import dataclass
from enum import Enum
from typing import Union

from app.core.exceptions import ValidationError
from app.domain.value_objects.calendar_date import CalendarDate


class Unbounded(str, Enum):
    """Open endpoint of an interval"""
    NEG_INFINITY = "-inf"
    POS_INFINITY = "+inf"


NEG_INFINITY = Unbounded.NEG_INFINITY
POS_INFINITY = Unbounded.POS_INFINITY

Endpoint = Union[CalendarDate, Unbounded]
EndpointKey = tuple[int, int, int, int]


def endpoint_key(point: Endpoint) -> EndpointKey:
    """Totally ordered key; -inf sorts below every date and +inf above"""
    if point is NEG_INFINITY:
        return (-1, 0, 0, 0)
    if point is POS_INFINITY:
        return (1, 0, 0, 0)
    return (0, point.year, point.month, point.day)


@dataclass(frozen=True)
class TimeInterval:
    """
    Calendar interval at day granularity, closed on its bounded endpoints

    start may be -inf and end may be +inf.
    """
    start: Endpoint
    end: Endpoint

    def __post_init__(self):
        if self.start is POS_INFINITY:
            raise ValidationError("Interval cannot start at +inf")
        if self.end is NEG_INFINITY:
            raise ValidationError("Interval cannot end at -inf")
        if endpoint_key(self.start) > endpoint_key(self.end):
            raise ValidationError(f"Interval start {self.start} is after end {self.end}")

    @classmethod
    def for_year(cls, year: int) -> "TimeInterval":
        return cls(CalendarDate(year, 1, 1), CalendarDate(year, 12, 31))

    @classmethod
    def for_month(cls, year: int, month: int) -> "TimeInterval":
        return cls(CalendarDate.first_of_month(year, month), CalendarDate.last_of_month(year, month))

    @classmethod
    def for_day(cls, day: CalendarDate) -> "TimeInterval":
        return cls(day, day)

    @property
    def start_key(self) -> EndpointKey:
        return endpoint_key(self.start)

    @property
    def end_key(self) -> EndpointKey:
        return endpoint_key(self.end)

    @property
    def is_bounded(self) -> bool:
        return isinstance(self.start, CalendarDate) and isinstance(self.end, CalendarDate)

    def contains(self, day: CalendarDate) -> bool:
        """Check if a day lies within the interval"""
        key = endpoint_key(day)
        return self.start_key <= key <= self.end_key

    def __str__(self) -> str:
        left = "(-inf" if self.start is NEG_INFINITY else f"[{self.start}"
        right = "+inf)" if self.end is POS_INFINITY else f"{self.end}]"
        return f"{left}, {right}"

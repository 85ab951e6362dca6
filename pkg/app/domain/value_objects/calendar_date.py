"""Calendar date value object"""
import calendar
import re
from dataclasses import dataclass

from app.core.exceptions import MalformedDate


_ISO_DATE = re.compile(r"(-?\d{1,4})-(\d{2})-(\d{2})")


def days_in_month(year: int, month: int) -> int:
    """Length of a month in the proleptic Gregorian calendar"""
    if month == 2 and calendar.isleap(year):
        return 29
    return calendar.mdays[month]


@dataclass(frozen=True, order=True)
class CalendarDate:
    """
    Immutable proleptic-Gregorian date

    Ordering is lexicographic on (year, month, day). Negative years are accepted
    for BCE dates; nothing here relies on datetime, which stops at year 1.
    """
    year: int
    month: int
    day: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise MalformedDate(f"Month {self.month} out of range in {self.year}-{self.month}-{self.day}")
        if not 1 <= self.day <= days_in_month(self.year, self.month):
            raise MalformedDate(
                f"Day {self.day} does not exist in {calendar.month_name[self.month]} {self.year}"
            )

    @classmethod
    def from_iso(cls, text: str) -> "CalendarDate":
        """Parse YYYY-MM-DD"""
        match = _ISO_DATE.fullmatch(text.strip())
        if not match:
            raise MalformedDate(f"Not an ISO date: '{text}'")
        return cls(int(match.group(1)), int(match.group(2)), int(match.group(3)))

    @classmethod
    def first_of_month(cls, year: int, month: int) -> "CalendarDate":
        return cls(year, month, 1)

    @classmethod
    def last_of_month(cls, year: int, month: int) -> "CalendarDate":
        if not 1 <= month <= 12:
            raise MalformedDate(f"Month {month} out of range in {year}")
        return cls(year, month, days_in_month(year, month))

    def previous_day(self) -> "CalendarDate":
        if self.day > 1:
            return CalendarDate(self.year, self.month, self.day - 1)
        if self.month > 1:
            return CalendarDate.last_of_month(self.year, self.month - 1)
        return CalendarDate(self.year - 1, 12, 31)

    def next_day(self) -> "CalendarDate":
        if self.day < days_in_month(self.year, self.month):
            return CalendarDate(self.year, self.month, self.day + 1)
        if self.month < 12:
            return CalendarDate(self.year, self.month + 1, 1)
        return CalendarDate(self.year + 1, 1, 1)

    def isoformat(self) -> str:
        sign = "-" if self.year < 0 else ""
        return f"{sign}{abs(self.year):04d}-{self.month:02d}-{self.day:02d}"

    def __str__(self) -> str:
        return self.isoformat()

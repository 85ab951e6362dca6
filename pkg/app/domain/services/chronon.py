"""
Time expression recognition and normalization

The grammar is a closed list of pattern classes:

    YEAR                "1990"
    THE_YEAR            "the year 2022"
    MONTH_YEAR          "Apr 1956", "December 1992"
    FULL_DATE           "June 14, 1775"
    RANGE_FROM_TO       "from 1789 to 1797"
    RANGE_BETWEEN_DASH  "between 1776 - 1780"
    RANGE_BETWEEN_AND   "between 1776 and 1780"
    RANGE_DASH          "1928-1965"
    BEFORE / AFTER / SINCE / AS_OF / IN
                        one of the above (minus the keyword ranges) behind
                        "before", "after", "since", "as of", "in"

Month names may be full or three-letter abbreviations ("Sept" is accepted too).
Every expression normalizes to the smallest closed day-granularity interval that
covers it. "before X" ends the day before X starts and "after X" starts the day
after X ends; "since X" and "as of X" include X.
"""
import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from app.core.exceptions import MalformedDate, UnsupportedPattern, ValidationError
from app.domain.value_objects import (
    CalendarDate,
    TimeInterval,
    NEG_INFINITY,
    POS_INFINITY,
)
from app.domain.value_objects.question_time_span import QuestionTimeSpan


logger = logging.getLogger("tempograph.chronon")


_MONTH = (
    r"(?:Jan(?:uary)?|Feb(?:ruary)?|Mar(?:ch)?|Apr(?:il)?|May|June?|July?|Aug(?:ust)?"
    r"|Sep(?:t(?:ember)?)?|Oct(?:ober)?|Nov(?:ember)?|Dec(?:ember)?)\.?"
)
_YEAR = r"\d{4}(?!\w)"
_THE_YEAR = rf"(?i:the\s+year)\s+{_YEAR}"
_FULL_DATE = rf"{_MONTH}\s+\d{{1,2}},?\s+{_YEAR}"
_MONTH_YEAR = rf"{_MONTH}\s+{_YEAR}"
_ATOM = rf"(?:{_THE_YEAR}|{_FULL_DATE}|{_MONTH_YEAR}|{_YEAR})"
_DASH = r"\s*[-–]\s*"
_CORE = rf"(?:{_ATOM}{_DASH}{_ATOM}|{_ATOM})"
_START = r"(?<!\w)"

_MONTH_NUMBERS = {
    "jan": 1, "feb": 2, "mar": 3, "apr": 4, "may": 5, "jun": 6,
    "jul": 7, "aug": 8, "sep": 9, "oct": 10, "nov": 11, "dec": 12,
}

_YEAR_PARTS = re.compile(r"(?:(?i:the\s+year)\s+)?(?P<year>\d{4})")
_MONTH_YEAR_PARTS = re.compile(r"(?P<month>[A-Za-z]+)\.?\s+(?P<year>\d{4})")
_FULL_DATE_PARTS = re.compile(r"(?P<month>[A-Za-z]+)\.?\s+(?P<day>\d{1,2}),?\s+(?P<year>\d{4})")


class TimexClass(str, Enum):
    """Supported pattern classes"""
    YEAR = "year"
    THE_YEAR = "the_year"
    MONTH_YEAR = "month_year"
    FULL_DATE = "full_date"
    RANGE_FROM_TO = "range_from_to"
    RANGE_BETWEEN_DASH = "range_between_dash"
    RANGE_BETWEEN_AND = "range_between_and"
    RANGE_DASH = "range_dash"
    BEFORE = "before"
    AFTER = "after"
    SINCE = "since"
    AS_OF = "as_of"
    IN = "in"


@dataclass(frozen=True)
class TimexMatch:
    """A recognized time expression inside a larger text"""
    surface: str
    char_start: int
    char_end: int
    timex_class: TimexClass


def _month_number(name: str) -> int:
    return _MONTH_NUMBERS[name[:3].lower()]


def _atom_interval(text: str) -> TimeInterval:
    """Interval of a single year / month-year / full-date expression"""
    text = text.strip()
    match = _FULL_DATE_PARTS.fullmatch(text)
    if match:
        day = CalendarDate(int(match["year"]), _month_number(match["month"]), int(match["day"]))
        return TimeInterval.for_day(day)
    match = _MONTH_YEAR_PARTS.fullmatch(text)
    if match and match["month"][:3].lower() in _MONTH_NUMBERS:
        return TimeInterval.for_month(int(match["year"]), _month_number(match["month"]))
    match = _YEAR_PARTS.fullmatch(text)
    if match:
        return TimeInterval.for_year(int(match["year"]))
    raise UnsupportedPattern(text)


def _span(first: TimeInterval, last: TimeInterval, surface: str) -> TimeInterval:
    try:
        return TimeInterval(first.start, last.end)
    except ValidationError:
        raise MalformedDate(f"Range '{surface}' ends before it starts")


def _range_interval(match: re.Match) -> TimeInterval:
    return _span(_atom_interval(match["a"]), _atom_interval(match["b"]), match.group(0))


def _core_interval(text: str) -> TimeInterval:
    """Interval of an atom or a bare dash range"""
    match = _RANGE_DASH.fullmatch(text.strip())
    if match:
        return _range_interval(match)
    return _atom_interval(text)


def _before(match: re.Match) -> TimeInterval:
    inner = _core_interval(match["x"])
    return TimeInterval(NEG_INFINITY, inner.start.previous_day())


def _after(match: re.Match) -> TimeInterval:
    inner = _core_interval(match["x"])
    return TimeInterval(inner.end.next_day(), POS_INFINITY)


def _since(match: re.Match) -> TimeInterval:
    inner = _core_interval(match["x"])
    return TimeInterval(inner.start, POS_INFINITY)


def _same(match: re.Match) -> TimeInterval:
    return _core_interval(match["x"])


_RANGE_DASH = re.compile(rf"(?P<a>{_ATOM}){_DASH}(?P<b>{_ATOM})")


@dataclass(frozen=True)
class _PatternClass:
    timex_class: TimexClass
    regex: re.Pattern
    build: Callable[[re.Match], TimeInterval]


def _prefixed(keyword: str) -> re.Pattern:
    return re.compile(rf"{_START}(?i:{keyword})\s+(?P<x>{_CORE})")


_PATTERNS: tuple[_PatternClass, ...] = (
    _PatternClass(TimexClass.YEAR, re.compile(rf"{_START}{_YEAR}"), lambda m: _atom_interval(m.group(0))),
    _PatternClass(TimexClass.THE_YEAR, re.compile(rf"{_START}{_THE_YEAR}"), lambda m: _atom_interval(m.group(0))),
    _PatternClass(TimexClass.MONTH_YEAR, re.compile(rf"{_START}{_MONTH_YEAR}"), lambda m: _atom_interval(m.group(0))),
    _PatternClass(TimexClass.FULL_DATE, re.compile(rf"{_START}{_FULL_DATE}"), lambda m: _atom_interval(m.group(0))),
    _PatternClass(
        TimexClass.RANGE_FROM_TO,
        re.compile(rf"{_START}(?i:from)\s+(?P<a>{_ATOM})\s+(?i:to)\s+(?P<b>{_ATOM})"),
        _range_interval,
    ),
    _PatternClass(
        TimexClass.RANGE_BETWEEN_DASH,
        re.compile(rf"{_START}(?i:between)\s+(?P<a>{_ATOM}){_DASH}(?P<b>{_ATOM})"),
        _range_interval,
    ),
    _PatternClass(
        TimexClass.RANGE_BETWEEN_AND,
        re.compile(rf"{_START}(?i:between)\s+(?P<a>{_ATOM})\s+(?i:and)\s+(?P<b>{_ATOM})"),
        _range_interval,
    ),
    _PatternClass(TimexClass.RANGE_DASH, re.compile(rf"{_START}(?P<a>{_ATOM}){_DASH}(?P<b>{_ATOM})"), _range_interval),
    _PatternClass(TimexClass.BEFORE, _prefixed("before"), _before),
    _PatternClass(TimexClass.AFTER, _prefixed("after"), _after),
    _PatternClass(TimexClass.SINCE, _prefixed("since"), _since),
    _PatternClass(TimexClass.AS_OF, _prefixed(r"as\s+of"), _same),
    _PatternClass(TimexClass.IN, _prefixed("in"), _same),
)

# Document scanning leaves the relational prefixes to the question side
_PREFIXED_CLASSES = {TimexClass.BEFORE, TimexClass.AFTER, TimexClass.SINCE, TimexClass.AS_OF, TimexClass.IN}
_DOCUMENT_PATTERNS = tuple(p for p in _PATTERNS if p.timex_class not in _PREFIXED_CLASSES)
_BY_CLASS = {p.timex_class: p for p in _PATTERNS}


def _word_starts(text: str):
    for pos, char in enumerate(text):
        if char.isalnum() and (pos == 0 or not text[pos - 1].isalnum()):
            yield pos


def _all_matches(text: str, patterns: tuple[_PatternClass, ...]) -> list[TimexMatch]:
    matches = []
    for pos in _word_starts(text):
        for pattern in patterns:
            found = pattern.regex.match(text, pos)
            if found:
                matches.append(TimexMatch(found.group(0), found.start(), found.end(), pattern.timex_class))
    return matches


def _interval_for(match: TimexMatch) -> TimeInterval:
    pattern = _BY_CLASS[match.timex_class]
    return pattern.build(pattern.regex.fullmatch(match.surface))


def extract_question_time(question_text: str) -> Optional[QuestionTimeSpan]:
    """
    Find the question's time expression

    Returns the longest match of the grammar (leftmost on ties) with its
    interval, or None when the question has no time expression.

    Raises:
        MalformedDate: the longest match names a date that does not exist
    """
    candidates = _all_matches(question_text, _PATTERNS)
    if not candidates:
        return None
    best = min(candidates, key=lambda m: (-(m.char_end - m.char_start), m.char_start))
    interval = _interval_for(best)
    logger.debug(f"Question time '{best.surface}' ({best.timex_class.value}) -> {interval}")
    return QuestionTimeSpan(
        surface=best.surface,
        char_start=best.char_start,
        char_end=best.char_end,
        interval=interval,
    )


def find_time_expressions(text: str) -> list[TimexMatch]:
    """Leftmost-longest, non-overlapping scan of a document for un-prefixed expressions"""
    candidates = sorted(
        _all_matches(text, _DOCUMENT_PATTERNS),
        key=lambda m: (m.char_start, -(m.char_end - m.char_start)),
    )
    selected: list[TimexMatch] = []
    cursor = 0
    for match in candidates:
        if match.char_start >= cursor:
            selected.append(match)
            cursor = match.char_end
    return selected


def classify_timex(surface: str) -> TimexClass:
    """Pattern class that matches the whole surface"""
    text = surface.strip()
    for pattern in _PATTERNS:
        if pattern.regex.fullmatch(text):
            return pattern.timex_class
    raise UnsupportedPattern(surface)


def normalize_timex(surface: str, anchor: Optional[CalendarDate] = None) -> TimeInterval:
    """
    Normalize a time expression to a closed calendar interval

    anchor is reserved for relative expressions, which the grammar does not
    cover yet; it is accepted and ignored.

    Raises:
        UnsupportedPattern: surface is outside the grammar
        MalformedDate: surface names a date that does not exist
    """
    if anchor is not None:
        logger.debug(f"Anchor {anchor} ignored for '{surface}'")
    text = surface.strip()
    pattern = _BY_CLASS[classify_timex(text)]
    return pattern.build(pattern.regex.fullmatch(text))


_VALUE_YEAR = re.compile(r"-?\d{4}")
_VALUE_MONTH = re.compile(r"(-?\d{4})-(\d{2})")
_VALUE_DAY = re.compile(r"-?\d{4}-\d{2}-\d{2}")
_VALUE_DECADE = re.compile(r"(\d{3})X")
_VALUE_CENTURY = re.compile(r"(\d{2})XX")


def _value_interval(value: str) -> TimeInterval:
    if _VALUE_DAY.fullmatch(value):
        return TimeInterval.for_day(CalendarDate.from_iso(value))
    match = _VALUE_MONTH.fullmatch(value)
    if match:
        month = int(match.group(2))
        if not 1 <= month <= 12:
            raise MalformedDate(f"Month {month} out of range in '{value}'")
        return TimeInterval.for_month(int(match.group(1)), month)
    if _VALUE_YEAR.fullmatch(value):
        return TimeInterval.for_year(int(value))
    match = _VALUE_DECADE.fullmatch(value)
    if match:
        first = int(match.group(1)) * 10
        return TimeInterval(CalendarDate(first, 1, 1), CalendarDate(first + 9, 12, 31))
    match = _VALUE_CENTURY.fullmatch(value)
    if match:
        first = int(match.group(1)) * 100
        return TimeInterval(CalendarDate(first, 1, 1), CalendarDate(first + 99, 12, 31))
    raise UnsupportedPattern(value)


def normalize_timex_value(value: str) -> TimeInterval:
    """
    Normalize a TIMEX3-style value string

    Accepts YYYY, YYYY-MM, YYYY-MM-DD, decades (199X), centuries (19XX) and
    ISO intervals "A/B" of those forms.
    """
    text = value.strip()
    if "/" in text:
        first, _, last = text.partition("/")
        return _span(_value_interval(first), _value_interval(last), text)
    return _value_interval(text)

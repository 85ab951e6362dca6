import calendar
import random

import pytest

from app.core.exceptions import MalformedDate, UnsupportedPattern
from app.domain.services.chronon import (
    TimexClass,
    classify_timex,
    extract_question_time,
    find_time_expressions,
    normalize_timex,
    normalize_timex_value,
)
from app.domain.services.interval_algebra import relate
from app.domain.value_objects import CalendarDate, NEG_INFINITY, TemporalRelation, TimeInterval
from app.domain.value_objects.calendar_date import days_in_month
from tests.fixtures.question_templates import NO_TIME_QUESTIONS, TEMPLATE_QUESTIONS


@pytest.mark.unit
class TestExtractQuestionTime:
    def test_template_suite_covers_every_class(self):
        assert len(TEMPLATE_QUESTIONS) >= 50
        assert {row[2] for row in TEMPLATE_QUESTIONS} == set(TimexClass)

    @pytest.mark.parametrize("question,surface,timex_class,interval", TEMPLATE_QUESTIONS)
    def test_template_question(self, question, surface, timex_class, interval):
        span = extract_question_time(question)

        assert span is not None
        assert span.surface == surface
        assert question[span.char_start:span.char_end] == surface
        assert classify_timex(surface) == timex_class
        assert span.interval == interval

    @pytest.mark.parametrize("question", NO_TIME_QUESTIONS)
    def test_question_without_time(self, question):
        assert extract_question_time(question) is None

    def test_knox_cunningham_offsets(self):
        question = "Which position did Knox Cunningham hold before Apr 1956?"
        span = extract_question_time(question)

        assert span.char_start == question.index("before")
        assert span.char_end == question.index("?")
        assert span.interval == TimeInterval(NEG_INFINITY, CalendarDate(1956, 3, 31))

    def test_invalid_date_fails(self):
        with pytest.raises(MalformedDate):
            extract_question_time("What happened on February 30, 1999?")

    def test_inverted_range_fails(self):
        with pytest.raises(MalformedDate, match="ends before it starts"):
            extract_question_time("Who led it from 1797 to 1789?")

    def test_leftmost_wins_ties(self):
        span = extract_question_time("Who won in 1990 or in 1994?")
        assert span.surface == "in 1990"

    def test_decade_suffix_is_not_a_year(self):
        assert extract_question_time("Who led the band in 1990s?") is None
        assert extract_question_time("Who led the band in the 1990s, and in 1994?").surface == "in 1994"


@pytest.mark.unit
class TestNormalizeTimex:
    def test_worked_example(self):
        first = normalize_timex("the year 2022")
        second = normalize_timex("from 1789 to 1797")

        assert first == TimeInterval(CalendarDate(2022, 1, 1), CalendarDate(2022, 12, 31))
        assert second == TimeInterval(CalendarDate(1789, 1, 1), CalendarDate(1797, 12, 31))
        assert relate(first, second) == TemporalRelation.AFTER

    def test_full_date(self):
        assert normalize_timex("June 14, 1775") == TimeInterval.for_day(CalendarDate(1775, 6, 14))

    def test_anchor_is_accepted(self):
        assert normalize_timex("1990", anchor=CalendarDate(2000, 1, 1)) == TimeInterval.for_year(1990)

    @pytest.mark.parametrize("surface", ["last year", "the 1990s", "yesterday", "Smarch 1990"])
    def test_unsupported(self, surface):
        with pytest.raises(UnsupportedPattern, match="Unsupported time expression"):
            normalize_timex(surface)


@pytest.mark.unit
class TestNormalizeTimexValue:
    @pytest.mark.parametrize("value,start,end", [
        ("1775", "1775-01-01", "1775-12-31"),
        ("1956-04", "1956-04-01", "1956-04-30"),
        ("2000-02", "2000-02-01", "2000-02-29"),
        ("1775-06-14", "1775-06-14", "1775-06-14"),
        ("199X", "1990-01-01", "1999-12-31"),
        ("19XX", "1900-01-01", "1999-12-31"),
        ("1789/1797", "1789-01-01", "1797-12-31"),
        ("1960-05/1962-01-15", "1960-05-01", "1962-01-15"),
    ])
    def test_values(self, value, start, end):
        interval = normalize_timex_value(value)
        assert interval == TimeInterval(CalendarDate.from_iso(start), CalendarDate.from_iso(end))

    def test_bad_month(self):
        with pytest.raises(MalformedDate, match="Month 13"):
            normalize_timex_value("1999-13")

    @pytest.mark.parametrize("value", ["PRESENT_REF", "P3Y", "1990-W12", ""])
    def test_unsupported_values(self, value):
        with pytest.raises(UnsupportedPattern):
            normalize_timex_value(value)


@pytest.mark.unit
class TestFindTimeExpressions:
    def test_leftmost_longest_without_prefixes(self):
        text = "Congress created the Continental Army on June 14, 1775, and he resigned in 1783."
        matches = find_time_expressions(text)

        assert [m.surface for m in matches] == ["June 14, 1775", "1783"]
        assert [m.timex_class for m in matches] == [TimexClass.FULL_DATE, TimexClass.YEAR]
        for match in matches:
            assert text[match.char_start:match.char_end] == match.surface

    def test_ranges_are_one_match(self):
        matches = find_time_expressions("He coached from 1980 to 1984 and again 1990-1992.")
        assert [m.surface for m in matches] == ["from 1980 to 1984", "1990-1992"]

    def test_no_digits_inside_words(self):
        assert find_time_expressions("Model A1990 and 12345 units") == []

    def test_decade_suffix_is_skipped(self):
        matches = find_time_expressions("A 1990s hit, re-released in 1994.")
        assert [m.surface for m in matches] == ["1994"]


def _month_name(rng: random.Random, month: int) -> str:
    return rng.choice([calendar.month_name[month], calendar.month_abbr[month]])


def _atom(rng: random.Random, year: int) -> str:
    month = rng.randint(1, 12)
    day = rng.randint(1, days_in_month(year, month))
    return rng.choice([
        f"{year}",
        f"the year {year}",
        f"{_month_name(rng, month)} {year}",
        f"{_month_name(rng, month)} {day}, {year}",
    ])


def _generated_surface(rng: random.Random, timex_class: TimexClass) -> str:
    first = rng.randint(1000, 2998)
    a, b = _atom(rng, first), _atom(rng, rng.randint(first + 1, 2999))
    month = rng.randint(1, 12)
    surfaces = {
        TimexClass.YEAR: f"{first}",
        TimexClass.THE_YEAR: f"the year {first}",
        TimexClass.MONTH_YEAR: f"{_month_name(rng, month)} {first}",
        TimexClass.FULL_DATE: f"{_month_name(rng, month)} {rng.randint(1, days_in_month(first, month))}, {first}",
        TimexClass.RANGE_FROM_TO: f"from {a} to {b}",
        TimexClass.RANGE_BETWEEN_DASH: f"between {a} - {b}",
        TimexClass.RANGE_BETWEEN_AND: f"between {a} and {b}",
        TimexClass.RANGE_DASH: f"{a}-{b}",
        TimexClass.BEFORE: f"before {a}",
        TimexClass.AFTER: f"after {a}",
        TimexClass.SINCE: f"since {a}",
        TimexClass.AS_OF: f"as of {a}",
        TimexClass.IN: f"in {a}",
    }
    return surfaces[timex_class]


@pytest.mark.unit
class TestGeneratedCorpus:
    @pytest.mark.parametrize("timex_class", list(TimexClass))
    def test_every_class_normalizes_to_an_ordered_interval(self, timex_class):
        rng = random.Random(f"chronon-{timex_class.value}")
        for _ in range(300):
            surface = _generated_surface(rng, timex_class)
            interval = normalize_timex(surface)

            assert classify_timex(surface) == timex_class, surface
            assert interval.start_key <= interval.end_key, surface

    def test_bare_years_are_monotone(self):
        rng = random.Random(11)
        for _ in range(1000):
            a = rng.randint(1000, 2998)
            b = rng.randint(a + 1, 2999)
            earlier, later = normalize_timex(str(a)), normalize_timex(str(b))

            assert earlier.end < later.start
            assert relate(earlier, later) == TemporalRelation.BEFORE

    def test_full_dates_sit_inside_their_month_and_year(self):
        rng = random.Random(12)
        for _ in range(1000):
            year = rng.randint(1000, 2999)
            month = rng.randint(1, 12)
            day = rng.randint(1, days_in_month(year, month))
            name = _month_name(rng, month)

            date = normalize_timex(f"{name} {day}, {year}")
            whole_month = normalize_timex(f"{name} {year}")
            whole_year = normalize_timex(str(year))

            assert date == TimeInterval.for_day(CalendarDate(year, month, day))
            assert whole_month.contains(date.start)
            assert whole_year.contains(date.start)
            assert relate(date, whole_month) == TemporalRelation.INCLUDED_BY
            assert relate(whole_month, whole_year) == TemporalRelation.INCLUDED_BY

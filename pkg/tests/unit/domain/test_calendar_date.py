import calendar
import datetime

import pytest

from app.core.exceptions import MalformedDate, ValidationError
from app.domain.value_objects import (
    CalendarDate,
    NEG_INFINITY,
    POS_INFINITY,
    TimeInterval,
    days_in_month,
)


@pytest.mark.unit
class TestCalendarDate:
    def test_valid_date(self):
        date = CalendarDate(1775, 6, 14)
        assert date.isoformat() == "1775-06-14"
        assert str(date) == "1775-06-14"

    def test_february_30_fails(self):
        with pytest.raises(MalformedDate, match="does not exist"):
            CalendarDate(1775, 2, 30)

    def test_month_out_of_range_fails(self):
        with pytest.raises(MalformedDate, match="Month 13"):
            CalendarDate(1999, 13, 1)

    @pytest.mark.parametrize("year,leap", [(1900, False), (2000, True), (2004, True), (2023, False), (1600, True)])
    def test_leap_years(self, year, leap):
        assert days_in_month(year, 2) == (29 if leap else 28)

    def test_days_in_month_agrees_with_calendar_module(self):
        for year in range(1580, 2100):
            for month in range(1, 13):
                assert days_in_month(year, month) == calendar.monthrange(year, month)[1]

    def test_ordering_is_lexicographic(self):
        assert CalendarDate(1775, 6, 14) < CalendarDate(1775, 6, 15) < CalendarDate(1776, 1, 1)

    def test_from_iso(self):
        assert CalendarDate.from_iso("2000-02-29") == CalendarDate(2000, 2, 29)
        with pytest.raises(MalformedDate, match="Not an ISO date"):
            CalendarDate.from_iso("14 June 1775")

    def test_previous_and_next_day_cross_boundaries(self):
        assert CalendarDate(2000, 3, 1).previous_day() == CalendarDate(2000, 2, 29)
        assert CalendarDate(1900, 3, 1).previous_day() == CalendarDate(1900, 2, 28)
        assert CalendarDate(1990, 1, 1).previous_day() == CalendarDate(1989, 12, 31)
        assert CalendarDate(1999, 12, 31).next_day() == CalendarDate(2000, 1, 1)

    def test_day_steps_match_datetime(self):
        day = datetime.date(1899, 12, 25)
        date = CalendarDate(1899, 12, 25)
        for _ in range(800):
            day += datetime.timedelta(days=1)
            date = date.next_day()
            assert (date.year, date.month, date.day) == (day.year, day.month, day.day)


@pytest.mark.unit
class TestTimeInterval:
    def test_for_year(self):
        interval = TimeInterval.for_year(2022)
        assert interval.start == CalendarDate(2022, 1, 1)
        assert interval.end == CalendarDate(2022, 12, 31)
        assert str(interval) == "[2022-01-01, 2022-12-31]"

    def test_for_month_in_leap_year(self):
        assert TimeInterval.for_month(2004, 2).end == CalendarDate(2004, 2, 29)

    def test_inverted_interval_fails(self):
        with pytest.raises(ValidationError, match="is after end"):
            TimeInterval(CalendarDate(1780, 1, 1), CalendarDate(1776, 1, 1))

    def test_unbounded_endpoints(self):
        interval = TimeInterval(NEG_INFINITY, CalendarDate(1956, 3, 31))
        assert not interval.is_bounded
        assert str(interval) == "(-inf, 1956-03-31]"
        assert interval.contains(CalendarDate(1, 1, 1))
        assert not interval.contains(CalendarDate(1956, 4, 1))

    def test_infinities_on_wrong_side_fail(self):
        with pytest.raises(ValidationError, match="cannot start at \\+inf"):
            TimeInterval(POS_INFINITY, POS_INFINITY)
        with pytest.raises(ValidationError, match="cannot end at -inf"):
            TimeInterval(NEG_INFINITY, NEG_INFINITY)

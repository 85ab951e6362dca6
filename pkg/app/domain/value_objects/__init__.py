"""Value objects for domain entities"""
from .calendar_date import CalendarDate, days_in_month
from .time_interval import TimeInterval, Unbounded, NEG_INFINITY, POS_INFINITY, endpoint_key
from .temporal_relation import TemporalRelation, RELATION_VOCABULARY
from .question_time_span import QuestionTimeSpan

__all__ = [
    "CalendarDate",
    "days_in_month",
    "TimeInterval",
    "Unbounded",
    "NEG_INFINITY",
    "POS_INFINITY",
    "endpoint_key",
    "TemporalRelation",
    "RELATION_VOCABULARY",
    "QuestionTimeSpan",
]

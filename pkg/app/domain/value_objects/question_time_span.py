"""Question time span value object"""
from dataclasses import dataclass

from app.core.exceptions import ValidationError
from app.domain.value_objects.time_interval import TimeInterval


@dataclass(frozen=True)
class QuestionTimeSpan:
    """The single time expression of a question, with its offsets and interval"""
    surface: str
    char_start: int
    char_end: int
    interval: TimeInterval

    def __post_init__(self):
        if self.char_start < 0 or self.char_end <= self.char_start:
            raise ValidationError(f"Invalid span [{self.char_start}, {self.char_end})")
        if len(self.surface) != self.char_end - self.char_start:
            raise ValidationError("Surface length does not match its offsets")

    def matches(self, text: str) -> bool:
        """Check that the offsets address the surface within text"""
        return text[self.char_start:self.char_end] == self.surface

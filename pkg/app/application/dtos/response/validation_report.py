"""Validation Report DTOs"""
from typing import List, Optional

from pydantic import BaseModel, Field


class FindingDTO(BaseModel):
    """One annotation problem"""
    example_id: str
    kind: str
    message: str
    char_start: Optional[int] = None
    char_end: Optional[int] = None
    label: Optional[str] = None


class ValidationReportDTO(BaseModel):
    documents: int = 0
    findings: List[FindingDTO] = Field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.findings

"""Run output repository interface"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Optional


class RunOutputRepository(ABC):
    """
    Run output repository interface (port)

    Records are JSON-ready mappings; a store keeps one sequence per name.
    """

    @abstractmethod
    def write_records(self, name: str, records: Iterable[Dict[str, Any]]) -> None:
        """Replace the named record sequence"""
        pass

    @abstractmethod
    def read_records(self, name: str) -> List[Dict[str, Any]]:
        """Read the named record sequence"""
        pass

    @abstractmethod
    def write_report(self, report: Dict[str, Any]) -> None:
        """Replace the run report"""
        pass

    @abstractmethod
    def read_report(self) -> Optional[Dict[str, Any]]:
        """Run report, if one was written"""
        pass

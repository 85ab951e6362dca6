"""Dataset repository interface"""
from abc import ABC, abstractmethod
from typing import List

from app.domain.entities.dataset_example import DatasetExample


class DatasetRepository(ABC):
    """
    Dataset repository interface (port)

    Following Interface Segregation Principle
    """

    @abstractmethod
    def find_all(self) -> List[DatasetExample]:
        """All examples in file order"""
        pass

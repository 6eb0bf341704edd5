from abc import ABC, abstractmethod
from typing import Optional

from .entities import ExpectedOutcome


class ExpectedOutcomeRepository(ABC):
    """Interface for the recorded outcomes that scenario runs are checked against."""

    @abstractmethod
    def get_expected(self, scenario_id: str, degree: Optional[int]) -> ExpectedOutcome:
        """Get the recorded outcome of a scenario at a degree (None for degree-free scenarios)."""
        pass

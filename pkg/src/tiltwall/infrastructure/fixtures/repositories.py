import json
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from tiltwall.domain.fano.entities import ExpectedOutcome
from tiltwall.domain.fano.repositories import ExpectedOutcomeRepository

FIXTURE_NAME = "expected_outcomes.json"
SCHEMA_VERSION = 1


class JsonExpectedOutcomeRepository(ExpectedOutcomeRepository):
    """Implementation of the expected-outcome repository backed by a checked-in JSON file."""

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = path
        self._entries: Optional[Dict[Tuple[str, Optional[int]], ExpectedOutcome]] = None

    def _read(self) -> Dict[str, Any]:
        if self.path is None:
            text = resources.files(__package__).joinpath(FIXTURE_NAME).read_text(encoding="utf-8")
        else:
            text = Path(self.path).read_text(encoding="utf-8")
        return json.loads(text)

    def _load(self) -> Dict[Tuple[str, Optional[int]], ExpectedOutcome]:
        if self._entries is None:
            data = self._read()
            if data.get("schema") != SCHEMA_VERSION:
                raise ValueError(f"Unsupported fixture schema: {data.get('schema')!r}")
            self._entries = {}
            for entry in data["entries"]:
                outcome = ExpectedOutcome(
                    scenario_id=entry["scenario"],
                    degree=entry["degree"],
                    outcome=entry["outcome"],
                    source=entry.get("source", ""),
                )
                self._entries[(outcome.scenario_id, outcome.degree)] = outcome
        return self._entries

    def get_expected(self, scenario_id: str, degree: Optional[int]) -> ExpectedOutcome:
        """Get the recorded outcome of a scenario at a degree."""
        try:
            return self._load()[(scenario_id, degree)]
        except KeyError:
            raise KeyError(f"No recorded outcome for {scenario_id} at degree {degree}") from None

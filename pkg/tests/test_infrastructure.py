import json
import os
from unittest.mock import patch

import pytest

from tiltwall.application.services.verification_services import SCENARIO_DEGREES, ScenarioVerificationService
from tiltwall.infrastructure.config import THREADS_ENV, load_cli_config, resolve_thread_count
from tiltwall.infrastructure.factory import create_verification_service
from tiltwall.infrastructure.fixtures.repositories import JsonExpectedOutcomeRepository


class TestJsonExpectedOutcomeRepository:
    """Tests for the packaged expected-outcome fixture."""

    def setup_method(self):
        """Set up test fixtures."""
        self.repository = JsonExpectedOutcomeRepository()

    def test_every_scenario_run_has_an_outcome(self):
        for scenario_id, degrees in SCENARIO_DEGREES.items():
            for degree in degrees:
                # Act
                expected = self.repository.get_expected(scenario_id, degree)

                # Assert
                assert (expected.scenario_id, expected.degree) == (scenario_id, degree)
                assert expected.source

    def test_get_expected(self):
        # Act
        expected = self.repository.get_expected("numerical-class", 4)

        # Assert
        assert expected.scenario_id == "numerical-class"
        assert expected.degree == 4
        assert expected.outcome == {"character": ["2", "0", "-2", "0"]}
        assert expected.source

    def test_axis_listing_keeps_the_rejected_case(self):
        cases = self.repository.get_expected("axis-destabilizers", 3).outcome["cases"]
        assert [c["index"] for c in cases] == [5, 6, 7, 8, 9, 10, 11]
        assert cases[2]["excluded_by"] == "delta-violation"

    def test_missing_outcome(self):
        with pytest.raises(KeyError, match="No recorded outcome for unit-line at degree 1"):
            self.repository.get_expected("unit-line", 1)

    def test_custom_path_and_schema_check(self, tmp_path):
        # Arrange
        good = tmp_path / "good.json"
        good.write_text(
            json.dumps({"schema": 1, "entries": [{"scenario": "s", "degree": None, "outcome": {"x": 1}}]}),
            encoding="utf-8",
        )
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"schema": 2, "entries": []}), encoding="utf-8")

        # Act
        expected = JsonExpectedOutcomeRepository(good).get_expected("s", None)

        # Assert
        assert expected.outcome == {"x": 1}
        assert expected.source == ""
        with pytest.raises(ValueError, match="Unsupported fixture schema"):
            JsonExpectedOutcomeRepository(bad).get_expected("s", None)


class TestConfig:
    """Tests for the config file and thread count helpers."""

    def test_load_cli_config(self, tmp_path):
        # Arrange
        path = tmp_path / "tiltwall.env"
        path.write_text("alpha-sq-max=1/4\nbeta=-1/2\nd=5\n", encoding="utf-8")

        # Act
        config = load_cli_config(str(path))

        # Assert
        assert config == {"alpha_sq_max": "1/4", "beta": "-1/2", "d": "5"}

    def test_no_config(self):
        assert load_cli_config(None) == {}

    def test_missing_config(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="Config file not found"):
            load_cli_config(str(tmp_path / "nope.env"))

    def test_thread_count_precedence(self):
        with patch.dict(os.environ, {THREADS_ENV: "6"}):
            assert resolve_thread_count("2") == 2
            assert resolve_thread_count() == 6
        with patch.dict(os.environ, {}, clear=True):
            assert resolve_thread_count() is None

    @pytest.mark.parametrize("value", ["0", "-3", "two"])
    def test_bad_thread_count(self, value):
        with pytest.raises(ValueError, match="positive integer"):
            resolve_thread_count(value)


class TestFactory:
    """Tests for the service factory."""

    @patch("tiltwall.infrastructure.factory.JsonExpectedOutcomeRepository")
    def test_create_verification_service(self, mock_repository_class):
        # Act
        service = create_verification_service(threads=4, fixture_path="outcomes.json")

        # Assert
        mock_repository_class.assert_called_once_with(path="outcomes.json")
        assert isinstance(service, ScenarioVerificationService)
        assert service.outcome_repository is mock_repository_class.return_value
        assert service.max_workers == 4

    def test_default_wiring(self):
        service = create_verification_service()
        assert isinstance(service.outcome_repository, JsonExpectedOutcomeRepository)
        assert service.max_workers is None

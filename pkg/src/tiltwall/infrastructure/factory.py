# src/tiltwall/infrastructure/factory.py

from typing import Optional

from tiltwall.application.services.verification_services import ScenarioVerificationService
from tiltwall.infrastructure.fixtures.repositories import JsonExpectedOutcomeRepository


def create_verification_service(threads: Optional[int] = None, fixture_path: Optional[str] = None):
    """
    Factory function to create and wire a ScenarioVerificationService.

    Args:
        threads: Worker count for the scenario pool (None lets the executor decide)
        fixture_path: Alternative expected-outcome file (defaults to the packaged fixture)

    Returns:
        A fully configured ScenarioVerificationService
    """
    outcome_repository = JsonExpectedOutcomeRepository(path=fixture_path)
    return ScenarioVerificationService(outcome_repository=outcome_repository, max_workers=threads)

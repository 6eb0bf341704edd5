from fractions import Fraction
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.table import Table

from tiltwall.domain.fano.entities import (
    BranchNote,
    DestabilizerCase,
    ScenarioReport,
    WallCandidate,
    WallEnumeration,
)
from tiltwall.utils.rational_text import RationalText


def _tags(classification) -> List[str]:
    return sorted(tag.value for tag in classification)


class ReportFormatter:
    """Utility for turning enumeration results and scenario reports into JSON-ready data, text and rich output."""

    @staticmethod
    def candidate_as_dict(candidate: WallCandidate) -> Dict[str, Any]:
        return {
            "triple": list(candidate.provenance),
            "alpha_sq": RationalText.format(candidate.alpha_sq),
            "sub": RationalText.format_character(candidate.sub),
            "quot": RationalText.format_character(candidate.quot),
            "classification": _tags(candidate.classification),
            "notes": list(candidate.notes),
        }

    @staticmethod
    def note_as_dict(note: BranchNote) -> Dict[str, Any]:
        return {
            "kind": note.kind.value,
            "a": note.a,
            "b": note.b,
            "alpha_sq_lower": RationalText.format(note.alpha_sq_lower),
            "alpha_sq_upper": RationalText.format(note.alpha_sq_upper),
        }

    @staticmethod
    def enumeration_as_dict(enumeration: WallEnumeration) -> Dict[str, Any]:
        certificate = enumeration.certificate
        return {
            "candidates": [ReportFormatter.candidate_as_dict(c) for c in enumeration.candidates],
            "survivors": [list(c.provenance) for c in enumeration.survivors],
            "certificate": {
                "complete": certificate.complete,
                "rank_bound_used": certificate.rank_bound_used,
                "derivation": certificate.derivation.value,
            },
            "notes": [ReportFormatter.note_as_dict(n) for n in enumeration.notes],
        }

    @staticmethod
    def case_as_dict(case: DestabilizerCase) -> Dict[str, Any]:
        return {
            "P": RationalText.format_character(case.chP),
            "Q": RationalText.format_character(case.chQ),
            "classification": _tags(case.classification),
            "notes": list(case.notes),
        }

    @staticmethod
    def format_as_dict(report: ScenarioReport, timings: bool = False) -> Dict[str, Any]:
        """Format a report for JSON; the duration is left out unless timings are requested."""
        report_info = {
            "scenario": report.scenario_id,
            "degree": report.degree,
            "verdict": report.verdict.value,
            "expected": report.expected,
            "actual": report.actual,
            "source": report.source,
        }
        if report.findings:
            report_info["findings"] = list(report.findings)
        if timings:
            microseconds = round(report.duration_seconds * 1_000_000)
            report_info["duration_seconds"] = RationalText.format(Fraction(microseconds, 1_000_000))
        return report_info

    @staticmethod
    def format_as_text(report: ScenarioReport) -> str:
        degree = "-" if report.degree is None else f"d={report.degree}"
        line = f"{report.scenario_id} {degree}: {report.verdict.value}"
        for finding in report.findings:
            line += f"\n    {finding}"
        return line

    @staticmethod
    def format_as_rich(reports: List[ScenarioReport], console: Optional[Console] = None) -> None:
        """Print a summary table of reports."""
        if not console:
            console = Console(stderr=True)

        table = Table(title="Scenario verification")
        table.add_column("Scenario", style="bold blue")
        table.add_column("Degree", justify="right")
        table.add_column("Verdict")
        table.add_column("Findings", style="italic")
        for report in reports:
            verdict = "[green]match[/green]" if report.matched else "[bold red]mismatch[/bold red]"
            degree = "-" if report.degree is None else str(report.degree)
            table.add_row(report.scenario_id, degree, verdict, "; ".join(report.findings))
        console.print(table)
        mismatches = sum(1 for report in reports if not report.matched)
        console.print(f"{len(reports) - mismatches}/{len(reports)} scenarios match")

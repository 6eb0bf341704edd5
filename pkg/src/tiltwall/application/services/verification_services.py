import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from tiltwall.domain.fano.chern import LINE_IDEAL, TRIVIAL, line_bundle_character, solve_character_from_euler_constraints
from tiltwall.domain.fano.classification import axis_pair_conditions
from tiltwall.domain.fano.entities import ScenarioReport, WallCandidate, WallEnumeration
from tiltwall.domain.fano.enums import BranchNoteKind, PairingSide, Verdict
from tiltwall.domain.fano.exceptions import InconsistentSystemError, SingularSystemError, UnsupportedDegreeError
from tiltwall.domain.fano.repositories import ExpectedOutcomeRepository
from tiltwall.domain.fano.splits import (
    RANK_THREE_POINT,
    RANK_THREE_SHEAF,
    rank_three_split_solutions,
    semistable_splits,
    shifted_line_bundle_pairings,
)
from tiltwall.domain.fano.value_objects import ChernCharacter, EulerConstraint, FanoContext, TiltPoint
from tiltwall.domain.fano.walls import enumerate_axis_destabilizers, enumerate_walls_on_line, genuine_cases
from tiltwall.utils.rational_text import RationalText
from tiltwall.utils.report_formatters import ReportFormatter

logger = logging.getLogger(__name__)

INSTANTON = ChernCharacter(2, 0, -2)
CHARGE_THREE = ChernCharacter(3, 0, -3)
AXIS_TARGET = LINE_IDEAL.truncated().scale(-2)
WIDE_WINDOW = (-50, 50)

SCENARIO_DEGREES: Dict[str, Tuple[Optional[int], ...]] = {
    "instanton-line": (1, 2, 3, 4, 5),
    "unit-line": (3, 4, 5),
    "axis-destabilizers": (3, 4, 5),
    "charge-three-line": (2, 3, 4, 5),
    "numerical-class": (1, 2, 3, 4, 5),
    "rank-three-splits": (None,),
    "shifted-pairings": (3, 4, 5),
}
SCENARIO_ORDER = tuple(SCENARIO_DEGREES)


def _wall_summary(candidate: WallCandidate, with_tags: bool = True) -> Dict[str, Any]:
    summary = {"triple": list(candidate.provenance), "alpha_sq": RationalText.format(candidate.alpha_sq)}
    if with_tags:
        summary["classification"] = sorted(tag.value for tag in candidate.classification)
    return summary


def _survivors(enumeration: WallEnumeration) -> List[Dict[str, Any]]:
    return [_wall_summary(c, with_tags=False) for c in enumeration.survivors]


def axis_point(degree: int) -> TiltPoint:
    """The point ((d-2)/(2d))², -(d+2)/(2d) where the rotated charge of -2·I_l is real."""
    return TiltPoint(Fraction(degree - 2, 2 * degree) ** 2, Fraction(-(degree + 2), 2 * degree))


def numerical_class_constraints(ctx: FanoContext) -> List[EulerConstraint]:
    """Euler pairings pinning down 2·ch(I_l)."""
    return [
        EulerConstraint(TRIVIAL, PairingSide.LEFT, 0),
        EulerConstraint(line_bundle_character(1, ctx), PairingSide.LEFT, 0),
        EulerConstraint(LINE_IDEAL, PairingSide.LEFT, -2),
        EulerConstraint(LINE_IDEAL, PairingSide.RIGHT, -2),
    ]


class ScenarioVerificationService:
    """Service that reruns each scenario and compares it with its recorded outcome."""

    def __init__(self, outcome_repository: ExpectedOutcomeRepository, max_workers: Optional[int] = None):
        self.outcome_repository = outcome_repository
        self.max_workers = max_workers

    def _check_degree(self, scenario_id: str, degree: Optional[int]) -> None:
        allowed = SCENARIO_DEGREES[scenario_id]
        if degree not in allowed:
            raise UnsupportedDegreeError(degree, allowed)

    def _report(
        self,
        scenario_id: str,
        degree: Optional[int],
        compute: Callable[[Dict[str, Any]], Tuple[Dict[str, Any], List[str]]],
    ) -> ScenarioReport:
        self._check_degree(scenario_id, degree)
        expected = self.outcome_repository.get_expected(scenario_id, degree)
        logger.info("Running %s at degree %s", scenario_id, degree)
        start = time.perf_counter()
        actual, findings = compute(expected.outcome)
        duration = time.perf_counter() - start
        verdict = Verdict.MATCH if actual == expected.outcome else Verdict.MISMATCH
        logger.info("Finished %s at degree %s: %s", scenario_id, degree, verdict.value)
        return ScenarioReport(
            scenario_id=scenario_id,
            degree=degree,
            expected=expected.outcome,
            actual=actual,
            verdict=verdict,
            duration_seconds=duration,
            source=expected.source,
            findings=findings,
        )

    def verify_instanton_line(self, degree: int) -> ScenarioReport:
        """Walls of (2,0,-2) on beta = -1/2 for alpha² in (0, 1/4]."""
        def compute(_):
            ctx = FanoContext(degree)
            enumeration = enumerate_walls_on_line(INSTANTON, ctx, Fraction(-1, 2), (0, Fraction(1, 4)))
            actual = {
                "survivors": _survivors(enumeration),
                "numerical_walls": [_wall_summary(c) for c in enumeration.numerical_walls],
            }
            return actual, []

        return self._report("instanton-line", degree, compute)

    def verify_unit_line(self, degree: int) -> ScenarioReport:
        """Walls of (2,0,-2) on beta = -1 for alpha² in (0, 1]."""
        def compute(_):
            ctx = FanoContext(degree)
            enumeration = enumerate_walls_on_line(INSTANTON, ctx, -1, (0, 1))
            gaps = [
                {
                    "a": note.a,
                    "b": note.b,
                    "alpha_sq_lower": RationalText.format(note.alpha_sq_lower),
                    "alpha_sq_upper": RationalText.format(note.alpha_sq_upper),
                }
                for note in enumeration.notes
                if note.kind is BranchNoteKind.INTEGRALITY_GAP
            ]
            zero_part = next(c for c in enumeration.candidates if c.provenance == (0, 0, 0))
            zero_summary = _wall_summary(zero_part)
            del zero_summary["triple"]
            actual = {"survivors": _survivors(enumeration), "integrality_gaps": gaps, "zero_part": zero_summary}
            return actual, []

        return self._report("unit-line", degree, compute)

    def verify_axis_destabilizers(self, degree: int) -> ScenarioReport:
        """Real-axis destabilizer pairs of -2·I_l against the listed cases."""
        def compute(expected):
            ctx = FanoContext(degree)
            pt = axis_point(degree)
            found = {}
            for case in genuine_cases(enumerate_axis_destabilizers(AXIS_TARGET, pt, ctx)):
                summary = ReportFormatter.case_as_dict(case)
                found[(tuple(summary["P"]), tuple(summary["Q"]))] = summary

            cases = []
            for listed in expected.get("cases", []):
                key = (tuple(listed["P"]), tuple(listed["Q"]))
                if key in found:
                    cases.append({"index": listed["index"], **found.pop(key)})
                    continue
                p, q = (RationalText.parse_character(",".join(part)) for part in key)
                failed = axis_pair_conditions(p, q, pt, ctx)
                reason = failed.value if failed is not None else "not-found"
                cases.append({"index": listed["index"], "P": listed["P"], "Q": listed["Q"], "excluded_by": reason})

            extra = list(found.values())
            findings = [f"extra-case: P={c['P']} Q={c['Q']}" for c in extra]
            return {"cases": cases, "extra_cases": extra}, findings

        return self._report("axis-destabilizers", degree, compute)

    def verify_charge_three_line(self, degree: int) -> ScenarioReport:
        """Walls of (3,0,-3) on beta = -1/2 for alpha² in (0, 1/4]."""
        def compute(_):
            ctx = FanoContext(degree)
            enumeration = enumerate_walls_on_line(CHARGE_THREE, ctx, Fraction(-1, 2), (0, Fraction(1, 4)))
            sporadic = [c for c in enumeration.numerical_walls if c.provenance[:2] == (3, 1)]
            actual = {"survivors": _survivors(enumeration), "sporadic": [_wall_summary(c) for c in sporadic]}
            return actual, []

        return self._report("charge-three-line", degree, compute)

    def verify_numerical_class(self, degree: int) -> ScenarioReport:
        """Recover (2,0,-2,0) from four Euler pairings."""
        def compute(_):
            ctx = FanoContext(degree)
            try:
                solution = solve_character_from_euler_constraints(numerical_class_constraints(ctx), ctx)
            except (SingularSystemError, InconsistentSystemError) as e:
                return {"error": str(e)}, [str(e)]
            return {"character": RationalText.format_character(solution)}, []

        return self._report("numerical-class", degree, compute)

    def verify_rank_three_splits(self) -> ScenarioReport:
        """No semistable split of the rank-three sheaf, by the integer system and by the general search."""
        def compute(_):
            splits = semistable_splits(RANK_THREE_SHEAF, RANK_THREE_POINT, FanoContext(5))
            actual = {
                "solutions": [list(s) for s in rank_three_split_solutions()],
                "wide_window_solutions": [list(s) for s in rank_three_split_solutions(WIDE_WINDOW, WIDE_WINDOW)],
                "semistable_splits": [[RationalText.format_character(part) for part in split] for split in splits],
            }
            return actual, []

        return self._report("rank-three-splits", None, compute)

    def verify_shifted_pairings(self, degree: int) -> ScenarioReport:
        """Euler pairings ruling out shifted line bundles, for n = 1, 2, 3."""
        def compute(_):
            ctx = FanoContext(degree)
            pairings = []
            for n in (1, 2, 3):
                chi_line, chi_pair = shifted_line_bundle_pairings(n, ctx)
                pairings.append({"n": n, "chi_line": RationalText.format(chi_line), "chi_pair": RationalText.format(chi_pair)})
            return {"pairings": pairings}, []

        return self._report("shifted-pairings", degree, compute)

    def run(self, scenario_id: str, degree: Optional[int]) -> ScenarioReport:
        """Run one scenario at one degree."""
        if scenario_id not in SCENARIO_DEGREES:
            raise ValueError(f"Unknown scenario: {scenario_id}")
        if scenario_id == "rank-three-splits":
            self._check_degree(scenario_id, degree)
            return self.verify_rank_three_splits()
        runner = {
            "instanton-line": self.verify_instanton_line,
            "unit-line": self.verify_unit_line,
            "axis-destabilizers": self.verify_axis_destabilizers,
            "charge-three-line": self.verify_charge_three_line,
            "numerical-class": self.verify_numerical_class,
            "shifted-pairings": self.verify_shifted_pairings,
        }[scenario_id]
        return runner(degree)

    def plan(self, scenario_ids: Optional[Iterable[str]] = None, degree: Optional[int] = None) -> List[Tuple[str, Optional[int]]]:
        """The (scenario, degree) runs selected by the filters, in report order.

        A degree filter on a single scenario must be one of its degrees;
        across all scenarios it just selects the scenarios recorded at it.
        """
        selected = list(scenario_ids) if scenario_ids else list(SCENARIO_ORDER)
        for scenario_id in selected:
            if scenario_id not in SCENARIO_DEGREES:
                raise ValueError(f"Unknown scenario: {scenario_id}")
        if degree is not None and scenario_ids:
            for scenario_id in selected:
                self._check_degree(scenario_id, degree)
        runs = []
        for scenario_id in sorted(selected, key=SCENARIO_ORDER.index):
            for d in SCENARIO_DEGREES[scenario_id]:
                if degree is None or d == degree:
                    runs.append((scenario_id, d))
        return runs

    def verify_all(self, scenario_ids: Optional[Iterable[str]] = None, degree: Optional[int] = None) -> List[ScenarioReport]:
        """Run the selected scenarios in parallel and return their reports in a fixed order."""
        runs = self.plan(scenario_ids, degree)
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = [executor.submit(self.run, scenario_id, d) for scenario_id, d in runs]
            reports = [future.result() for future in futures]
        mismatches = sum(1 for report in reports if not report.matched)
        logger.info("Verified %d runs, %d mismatches", len(reports), mismatches)
        return reports

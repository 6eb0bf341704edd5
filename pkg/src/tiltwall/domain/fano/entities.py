from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from .enums import BranchNoteKind, CertificateDerivation, ClassificationTag, Verdict
from .value_objects import ChernCharacter, TiltPoint


@dataclass(frozen=True)
class WallCandidate:
    """A two-step filtration sub -> target -> quot on a vertical line beta = const.

    provenance holds (a, b, c): the twisted character of sub is
    (a, b·u1, c·u2) with u1 = 1/q and u2 = 1/(2q²) for beta = p/q.
    alpha_sq is None when the slopes agree for every alpha.
    """
    sub: ChernCharacter
    quot: ChernCharacter
    beta: Fraction
    alpha_sq: Optional[Fraction]
    provenance: Tuple[int, int, int]
    classification: FrozenSet[ClassificationTag] = frozenset()
    notes: Tuple[str, ...] = ()

    @property
    def target(self) -> ChernCharacter:
        return self.sub + self.quot

    @property
    def survives(self) -> bool:
        return ClassificationTag.SURVIVES in self.classification

    @property
    def is_numerical_wall(self) -> bool:
        """Passes lattice, sign and discriminant filters and is a genuine two-part split."""
        blocking = {
            ClassificationTag.LATTICE_VIOLATION,
            ClassificationTag.SIGN_CLASH,
            ClassificationTag.DELTA_VIOLATION,
            ClassificationTag.PROPORTIONAL,
            ClassificationTag.ZERO_PART,
        }
        return not (self.classification & blocking)

    def sort_key(self) -> Tuple[int, int, int]:
        return self.provenance


@dataclass(frozen=True)
class DestabilizerCase:
    """A pair (P, Q) with P + Q the target, both on the real axis of the rotated charge at pt."""
    chP: ChernCharacter
    chQ: ChernCharacter
    degree: int
    pt: TiltPoint
    classification: FrozenSet[ClassificationTag] = frozenset()
    notes: Tuple[str, ...] = ()

    def pair_key(self) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        return (self.chP.components(), self.chQ.components())


@dataclass(frozen=True)
class CompletenessCertificate:
    complete: bool
    rank_bound_used: int
    derivation: CertificateDerivation


@dataclass(frozen=True)
class BranchNote:
    """A search branch that yields no candidate, kept for reporting.

    a is None when the note covers every non-zero rank of the searched window.
    """
    kind: BranchNoteKind
    a: Optional[int]
    b: int
    alpha_sq_lower: Optional[Fraction] = None
    alpha_sq_upper: Optional[Fraction] = None


@dataclass(frozen=True)
class WallEnumeration:
    candidates: Tuple[WallCandidate, ...]
    certificate: CompletenessCertificate
    notes: Tuple[BranchNote, ...] = ()

    @property
    def survivors(self) -> List[WallCandidate]:
        return [c for c in self.candidates if c.survives]

    @property
    def numerical_walls(self) -> List[WallCandidate]:
        return [c for c in self.candidates if c.is_numerical_wall]

    def __iter__(self):
        # (candidates, certificate) unpacking
        return iter((list(self.candidates), self.certificate))


@dataclass
class ExpectedOutcome:
    """A recorded outcome for one scenario at one degree."""
    scenario_id: str
    degree: int
    outcome: Dict[str, Any]
    source: str


@dataclass
class ScenarioReport:
    scenario_id: str
    degree: Optional[int]
    expected: Dict[str, Any]
    actual: Dict[str, Any]
    verdict: Verdict
    duration_seconds: float = 0.0
    source: str = ""
    findings: List[str] = field(default_factory=list)

    @property
    def matched(self) -> bool:
        return self.verdict is Verdict.MATCH

"""Classification of wall candidates and destabilizer pairs by their numerical content."""
import math
from dataclasses import replace
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple, Union

from .bounds import bms_ch3_bound, li_check
from .chern import discriminant, is_lattice, twist
from .entities import DestabilizerCase, WallCandidate
from .enums import BoundReason, BoundStatus, ClassificationTag
from .exceptions import DegenerateBoundError
from .splits import semistable_splits
from .tilt import rotated_charge
from .value_objects import ChernCharacter, FanoContext, TiltPoint

Classification = Tuple[FrozenSet[ClassificationTag], Tuple[str, ...]]

AFTER_SPLIT = "after-semistable-split"


def _tags(*tags: ClassificationTag) -> FrozenSet[ClassificationTag]:
    return frozenset(tags)


def is_proportional(v: ChernCharacter, w: ChernCharacter) -> bool:
    """Level-2 proportionality of two characters."""
    a, b = v.components()[:3], w.components()[:3]
    return all(a[i] * b[j] == a[j] * b[i] for i in range(3) for j in range(i + 1, 3))


def is_certified_stable(sheaf: ChernCharacter, beta: Fraction, ctx: FanoContext) -> bool:
    """Numerical certificates that a semistable object with this character is stable.

    Δ = 0 with coprime (ch0, ch1) forces stability; so does a twisted ch1 of
    exactly one lattice unit 1/q at beta = p/q, since every finite-slope
    factor needs a positive share of it.
    """
    if discriminant(sheaf, ctx) == 0 and sheaf.ch0.denominator == 1 and sheaf.ch1.denominator == 1:
        if math.gcd(int(sheaf.ch0), int(sheaf.ch1)) == 1:
            return True
    return twist(sheaf.truncated(), beta, ctx).ch1 == Fraction(1, beta.denominator)


def _elimination_tag(reason: BoundReason) -> ClassificationTag:
    if reason is BoundReason.RANK_RIDER:
        return ClassificationTag.RIDER_ELIMINATED
    return ClassificationTag.LI_ELIMINATED


def _split_is_eliminated(parts: Tuple[ChernCharacter, ...], beta: Fraction, ctx: FanoContext) -> bool:
    for part in parts:
        if part.ch0 == 0:
            continue
        sheaf = part if part.ch0 > 0 else -part
        if li_check(sheaf, ctx).status is BoundStatus.VIOLATE and is_certified_stable(sheaf, beta, ctx):
            return True
    return False


def li_elimination(sheaf: ChernCharacter, pt: TiltPoint, ctx: FanoContext) -> Optional[Classification]:
    """Tag a sheaf-side character that Li's bounds rule out, or None.

    Certified parts are eliminated directly; other violators are eliminated
    when every equal-slope split contains a certified violator.
    """
    verdict = li_check(sheaf, ctx)
    if verdict.status is not BoundStatus.VIOLATE:
        return None
    tag = _elimination_tag(verdict.reason)
    if is_certified_stable(sheaf, pt.beta, ctx):
        return _tags(tag), ()
    if discriminant(sheaf, ctx) <= 0 or twist(sheaf, pt.beta, ctx).ch1 <= 0:
        return None
    splits = semistable_splits(sheaf, pt, ctx)
    if all(_split_is_eliminated(split, pt.beta, ctx) for split in splits):
        return _tags(tag), (AFTER_SPLIT,)
    return None


def _bms_violation(sheaf: ChernCharacter, pt: TiltPoint, ctx: FanoContext) -> bool:
    if sheaf.ch3 is None:
        return False
    try:
        return sheaf.ch3 > bms_ch3_bound(sheaf, pt.alpha_sq, pt.beta, ctx)
    except DegenerateBoundError:
        return False


def _merge(results: List[Classification]) -> Classification:
    tags = frozenset().union(*(r[0] for r in results))
    notes = tuple(note for r in results for note in r[1])
    return tags, notes


def classify_wall_candidate(candidate: WallCandidate, ctx: FanoContext) -> Classification:
    sub, quot = candidate.sub.truncated(), candidate.quot.truncated()
    if not is_lattice(sub, ctx) or not is_lattice(quot, ctx):
        return _tags(ClassificationTag.LATTICE_VIOLATION), ()
    if sub.is_zero or quot.is_zero:
        if candidate.alpha_sq is None:
            return _tags(ClassificationTag.ZERO_PART), ()
        return _tags(ClassificationTag.ZERO_PART, ClassificationTag.REQUIRES_CATEGORICAL), ()
    if is_proportional(sub, quot):
        return _tags(ClassificationTag.PROPORTIONAL), ()

    parts = (candidate.sub, candidate.quot)
    if any(twist(part.truncated(), candidate.beta, ctx).ch1 <= 0 for part in parts):
        return _tags(ClassificationTag.SIGN_CLASH), ()

    target_delta = discriminant(candidate.target.truncated(), ctx)
    deltas = [discriminant(part, ctx) for part in (sub, quot)]
    if any(delta < 0 or delta > target_delta for delta in deltas):
        return _tags(ClassificationTag.DELTA_VIOLATION), ()
    notes = ("delta-equals-target",) if target_delta in deltas else ()

    if candidate.alpha_sq is None:
        return _tags(ClassificationTag.SURVIVES), notes
    pt = TiltPoint(candidate.alpha_sq, candidate.beta)
    if any(_bms_violation(part, pt, ctx) for part in parts):
        return _tags(ClassificationTag.DELTA_VIOLATION), notes + ("bms-ch3",)

    eliminations = []
    for part in parts:
        if part.ch0 != 0:
            result = li_elimination(part.truncated() if part.ch0 > 0 else -part.truncated(), pt, ctx)
            if result is not None:
                eliminations.append(result)
    if eliminations:
        tags, extra = _merge(eliminations)
        return tags, notes + extra
    return _tags(ClassificationTag.SURVIVES), notes


def axis_pair_conditions(
    chP: ChernCharacter, chQ: ChernCharacter, pt: TiltPoint, ctx: FanoContext
) -> Optional[ClassificationTag]:
    """First failed condition of a real-axis pair, or None when all hold."""
    if not (is_lattice(chP.truncated(), ctx) and is_lattice(chQ.truncated(), ctx)):
        return ClassificationTag.LATTICE_VIOLATION
    for part in (chP, chQ):
        charge = rotated_charge(part, pt, ctx)
        if charge.im != 0 or charge.re > 0:
            return ClassificationTag.SIGN_CLASH
    if discriminant(chP, ctx) < 0 or discriminant(chQ, ctx) < 0:
        return ClassificationTag.DELTA_VIOLATION
    return None


def classify_destabilizer_case(case: DestabilizerCase, ctx: FanoContext) -> Classification:
    failed = axis_pair_conditions(case.chP, case.chQ, case.pt, ctx)
    if failed is not None:
        return _tags(failed), ()
    p, q = case.chP.truncated(), case.chQ.truncated()
    if p.is_zero or q.is_zero:
        return _tags(ClassificationTag.ZERO_PART), ()
    if is_proportional(p, q):
        return _tags(ClassificationTag.PROPORTIONAL), ()

    eliminations = []
    for part in (case.chP, case.chQ):
        if part.ch0 >= 0:
            continue
        sheaf = -part
        if _bms_violation(sheaf, case.pt, ctx):
            return _tags(ClassificationTag.DELTA_VIOLATION), ("bms-ch3",)
        result = li_elimination(sheaf.truncated(), case.pt, ctx)
        if result is not None:
            eliminations.append(result)
    if eliminations:
        return _merge(eliminations)
    return _tags(ClassificationTag.REQUIRES_CATEGORICAL), ()


def classify_candidate(
    case: Union[WallCandidate, DestabilizerCase], ctx: FanoContext
) -> Union[WallCandidate, DestabilizerCase]:
    """Return the case with its classification and notes filled in."""
    if isinstance(case, WallCandidate):
        tags, notes = classify_wall_candidate(case, ctx)
    else:
        tags, notes = classify_destabilizer_case(case, ctx)
    return replace(case, classification=tags, notes=notes)

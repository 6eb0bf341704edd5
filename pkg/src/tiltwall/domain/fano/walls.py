"""Certified finite enumeration of numerical walls and real-axis destabilizer pairs.

Walls along a vertical line beta = p/q are indexed by integer triples
(a, b, c): the sub-character has twisted data (a, b/q, c/(2q²)). For each
interior b the discriminant conditions are affine in alpha², so every rank a
gets an exact alpha² window and c only ranges over the integers that map
into it.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Set, Tuple

from .chern import discriminant, is_lattice, twist
from .classification import classify_candidate
from .entities import BranchNote, CompletenessCertificate, DestabilizerCase, WallCandidate, WallEnumeration
from .enums import BranchNoteKind, CertificateDerivation, ClassificationTag
from .exceptions import TiltDomainError, UnboundedSearchError
from .tilt import central_charge
from .value_objects import ChernCharacter, FanoContext, Rational, TiltPoint, as_rational

logger = logging.getLogger(__name__)

# Integer interval, None meaning unbounded on that side
Interval = Tuple[Optional[int], Optional[int]]


@dataclass(frozen=True)
class _LineData:
    """Twisted target data and lattice units on a vertical line."""
    ctx: FanoContext
    beta: Fraction
    rank: int
    width: int
    ch2: Fraction
    u1: Fraction
    u2: Fraction

    @property
    def target_delta(self) -> Fraction:
        d = self.ctx.degree
        return (d * self.width * self.u1) ** 2 - 2 * d * self.rank * self.ch2

    def base_delta(self, a: Fraction, b: int) -> Fraction:
        """Discriminant of the part (a, b) at alpha² = 0."""
        d = self.ctx.degree
        return (d * b * self.u1) ** 2 - 2 * d * a * Fraction(b, self.width) * self.ch2


@dataclass(frozen=True)
class _AlphaWindow:
    lower: Fraction
    lower_open: bool
    upper: Fraction

    def contains(self, x: Fraction) -> bool:
        if x < self.lower or (self.lower_open and x == self.lower):
            return False
        return x <= self.upper

    @property
    def empty(self) -> bool:
        return self.upper < self.lower or (self.lower_open and self.upper == self.lower)


def _line_data(target: ChernCharacter, beta: Fraction, ctx: FanoContext) -> _LineData:
    tw = twist(target.truncated(), beta, ctx)
    q = beta.denominator
    u1, u2 = Fraction(1, q), Fraction(1, 2 * q * q)
    width = tw.ch1 / u1
    if tw.ch0.denominator != 1 or width.denominator != 1 or width <= 0:
        raise TiltDomainError(
            f"Twisted ch1 of {target.components()} at beta={beta} must be a positive multiple of {u1}"
        )
    return _LineData(ctx, beta, int(tw.ch0), int(width), tw.ch2, u1, u2)


def _quadratic_window(c2: Fraction, c1: Fraction, c0: Fraction) -> Interval:
    """Integer hull of {a : c2·a² + c1·a + c0 ≥ 0}, with c2 ≤ 0."""
    if c2 < 0:
        bound = math.ceil(max(Fraction(1), (abs(c1) + abs(c0)) / abs(c2)))
        return (-bound, bound)
    if c1 > 0:
        return (math.ceil(-c0 / c1), None)
    if c1 < 0:
        return (None, math.floor(-c0 / c1))
    return (None, None) if c0 >= 0 else (1, 0)


def _hull(x: Interval, y: Interval) -> Interval:
    lo = None if x[0] is None or y[0] is None else min(x[0], y[0])
    hi = None if x[1] is None or y[1] is None else max(x[1], y[1])
    return (lo, hi)


def _meet(x: Interval, y: Interval) -> Interval:
    los = [v for v in (x[0], y[0]) if v is not None]
    his = [v for v in (x[1], y[1]) if v is not None]
    return (max(los) if los else None, min(his) if his else None)


def _segment(p: Fraction, q: Fraction) -> Interval:
    return (math.ceil(min(p, q)), math.floor(max(p, q)))


def _part_window(data: _LineData, b: int, alpha_sq: Fraction, quotient: bool) -> Interval:
    """Ranks a for which the sub (or quotient) part can keep Δ ≥ 0 above alpha_sq."""
    d, width, rank, y = data.ctx.degree, data.width, data.rank, data.ch2
    pivot = Fraction(b * rank, width)
    if not quotient:
        c2 = -(d**2) * alpha_sq
        c1 = d**2 * alpha_sq * pivot - 2 * d * Fraction(b, width) * y
        c0 = (d * b * data.u1) ** 2
        segment = _segment(Fraction(0), pivot)
    else:
        share = Fraction(width - b, width)
        c2 = -(d**2) * alpha_sq
        c1 = 2 * d * share * y + d**2 * alpha_sq * (rank + pivot)
        c0 = (d * (width - b) * data.u1) ** 2 - 2 * d * share * y * rank - d**2 * alpha_sq * rank * pivot
        segment = _segment(pivot, Fraction(rank))
    return _hull(_quadratic_window(c2, c1, c0), segment)


def _rank_window(data: _LineData, b: int, lo: Fraction) -> Interval:
    window = _meet(_part_window(data, b, Fraction(0), False), _part_window(data, b, Fraction(0), True))
    if lo > 0:
        window = _meet(window, _meet(_part_window(data, b, lo, False), _part_window(data, b, lo, True)))
    return window


def _alpha_window(data: _LineData, a: int, b: int, lo: Fraction, hi: Fraction) -> _AlphaWindow:
    """Exact alpha² window of branch (a, b) from 0 ≤ Δ(part) ≤ Δ(target)."""
    d = data.ctx.degree
    k = a - Fraction(b * data.rank, data.width)
    constraints = []
    for part_rank, part_b, part_k in ((a, b, k), (data.rank - a, data.width - b, -k)):
        base = data.base_delta(Fraction(part_rank), part_b)
        slope = -(d**2) * part_rank * part_k
        constraints.append((slope, base))
        constraints.append((-slope, data.target_delta - base))

    lower, lower_open, upper = lo, True, hi
    for slope, intercept in constraints:
        if slope == 0:
            if intercept < 0:
                return _AlphaWindow(Fraction(1), True, Fraction(0))
            continue
        root = -intercept / slope
        if slope > 0 and root > lower:
            lower, lower_open = root, False
        elif slope < 0 and root < upper:
            upper = root
    return _AlphaWindow(lower, lower_open, upper)


def _is_canonical(data: _LineData, a: int, b: int) -> bool:
    mirror_b = data.width - b
    return b < mirror_b or (b == mirror_b and a >= data.rank - a)


def _build_candidate(
    data: _LineData, target: ChernCharacter, a: int, b: int, c: int, alpha_sq: Optional[Fraction]
) -> WallCandidate:
    sub_twisted = ChernCharacter(a, b * data.u1, c * data.u2)
    sub = twist(sub_twisted, -data.beta, data.ctx)
    candidate = WallCandidate(
        sub=sub,
        quot=target.truncated() - sub,
        beta=data.beta,
        alpha_sq=alpha_sq,
        provenance=(a, b, c),
    )
    return classify_candidate(candidate, data.ctx)


def _branch_candidates(
    data: _LineData, target: ChernCharacter, a: int, b: int, lo: Fraction, hi: Fraction
) -> Tuple[List[WallCandidate], Optional[BranchNote]]:
    d = data.ctx.degree
    share = Fraction(b, data.width)
    k = a - share * data.rank
    if k == 0:
        c = share * data.ch2 / data.u2
        if c.denominator != 1:
            return [], None
        return [_build_candidate(data, target, a, b, int(c), None)], None

    window = _alpha_window(data, a, b, lo, hi)
    if window.empty:
        return [], None

    def c_at(alpha_sq: Fraction) -> Fraction:
        return (share * data.ch2 + d * k * alpha_sq / 2) / data.u2

    ends = sorted((c_at(window.lower), c_at(window.upper)))
    found = []
    for c in range(math.ceil(ends[0]), math.floor(ends[1]) + 1):
        alpha_sq = (c * data.u2 - share * data.ch2) / (d * k / 2)
        if window.contains(alpha_sq):
            found.append(_build_candidate(data, target, a, b, c, alpha_sq))
    if not found:
        return [], BranchNote(BranchNoteKind.INTEGRALITY_GAP, a, b, window.lower, window.upper)
    return found, None


def _sign_clash_note(overall: Tuple[int, int]) -> Optional[BranchNote]:
    """The b = 0 branch, skipped for every non-zero rank in the searched window.

    A sub with vanishing twisted ch1 has Im Z = 0, so its slope is infinite and
    never meets the target's finite one. b = width is the same branch read
    from the quotient.
    """
    if overall == (0, 0):
        return None
    return BranchNote(BranchNoteKind.SIGN_CLASH, None, 0)


def _zero_part_candidate(data: _LineData, target: ChernCharacter, lo: Fraction, hi: Fraction) -> WallCandidate:
    """The torsion piece: a sub with vanishing level-2 character.

    It matters where the target's real part vanishes, i.e. alpha² = 2·ch2^β/(d·ch0^β).
    """
    alpha_sq = None
    if data.rank != 0:
        root = 2 * data.ch2 / (data.ctx.degree * data.rank)
        if lo < root <= hi:
            alpha_sq = root
    return _build_candidate(data, target, 0, 0, 0, alpha_sq)


def enumerate_walls_on_line(
    target: ChernCharacter,
    ctx: FanoContext,
    beta: Rational,
    alpha_sq_range: Tuple[Rational, Rational],
    rank_cap: Optional[int] = None,
) -> WallEnumeration:
    """Enumerate numerical walls of target along beta for alpha² in (lo, hi].

    Args:
        target: the character whose walls are searched (level-2 data is used)
        ctx: the threefold
        beta: the vertical line
        alpha_sq_range: (lo, hi) with 0 ≤ lo < hi
        rank_cap: optional bound |a| ≤ rank_cap on sub ranks

    Returns:
        The classified candidates, a completeness certificate and branch notes

    Raises:
        UnboundedSearchError: no derived rank bound and no rank_cap
    """
    beta = as_rational(beta)
    lo, hi = (as_rational(x) for x in alpha_sq_range)
    if lo < 0 or hi <= lo:
        raise TiltDomainError(f"alpha² range ({lo}, {hi}] must satisfy 0 ≤ lo < hi")
    data = _line_data(target, beta, ctx)

    windows = {b: _rank_window(data, b, lo) for b in range(1, data.width)}
    overall: Interval = (0, 0)
    for window in windows.values():
        if window[0] is not None and window[1] is not None and window[0] > window[1]:
            continue
        overall = _hull(overall, window)

    derivation = CertificateDerivation.DELTA_INTERVAL if lo > 0 else CertificateDerivation.SLOPE_MONOTONE
    complete = True
    if rank_cap is not None:
        capped = _meet(overall, (-rank_cap, rank_cap))
        if capped != overall:
            derivation, complete = CertificateDerivation.USER_CAP, False
        overall = capped
    elif overall[0] is None or overall[1] is None:
        raise UnboundedSearchError(
            f"No rank bound derives for {target.components()} on beta={beta} from alpha² > {lo}; pass a rank cap"
        )
    logger.debug("Rank window %s on beta=%s (%s)", overall, beta, derivation.value)

    candidates: List[WallCandidate] = [_zero_part_candidate(data, target, lo, hi)]
    notes: List[BranchNote] = []
    sign_clash = _sign_clash_note(overall)
    if sign_clash is not None:
        notes.append(sign_clash)
    for b, window in windows.items():
        a_lo = overall[0] if window[0] is None else max(window[0], overall[0])
        a_hi = overall[1] if window[1] is None else min(window[1], overall[1])
        for a in range(a_lo, a_hi + 1):
            if not _is_canonical(data, a, b):
                continue
            found, note = _branch_candidates(data, target, a, b, lo, hi)
            candidates.extend(found)
            if note is not None:
                notes.append(note)

    candidates.sort(key=WallCandidate.sort_key)
    logger.debug("Enumerated %d candidates on beta=%s", len(candidates), beta)
    certificate = CompletenessCertificate(
        complete=complete,
        rank_bound_used=max(abs(overall[0]), abs(overall[1])),
        derivation=derivation,
    )
    return WallEnumeration(tuple(candidates), certificate, tuple(notes))


def _axis_rank_bound(x_total: Fraction, alpha_sq: Fraction) -> int:
    """Largest m with m²·alpha² ≤ x_total²."""
    return math.isqrt(math.floor(x_total**2 / alpha_sq))


def enumerate_axis_destabilizers(
    target: ChernCharacter, pt: TiltPoint, ctx: FanoContext
) -> List[DestabilizerCase]:
    """All lattice pairs P + Q = target on the real axis of the rotated charge at pt.

    Re Z(P) = 0 pins the twisted ch2 of P to ½α²d·ch0, the sign condition
    keeps ch1^β(P) between ch1^β(target) and 0, and Δ(P) ≥ 0 then bounds the
    rank by α²·ch0² ≤ (ch1^β)².
    """
    target = target.truncated()
    if central_charge(target, pt, ctx).re != 0:
        raise TiltDomainError(f"{target.components()} is not on the real axis of the rotated charge at {pt}")
    d = ctx.degree
    x_total = twist(target, pt.beta, ctx).ch1
    bound = _axis_rank_bound(x_total, pt.alpha_sq)

    pairs: Set[Tuple[ChernCharacter, ChernCharacter]] = set()
    for r in range(-bound, bound + 1):
        shift = pt.beta * r
        for c in range(math.ceil(x_total + shift), math.floor(shift) + 1):
            twisted = ChernCharacter(r, c - shift, pt.alpha_sq * d * r / 2)
            p = twist(twisted, -pt.beta, ctx)
            if not is_lattice(p, ctx):
                continue
            q = target - p
            if discriminant(p, ctx) < 0 or discriminant(q, ctx) < 0:
                continue
            pairs.add(tuple(sorted((p, q), key=ChernCharacter.sort_key, reverse=True)))

    cases = [
        classify_candidate(DestabilizerCase(chP=p, chQ=q, degree=d, pt=pt), ctx)
        for p, q in sorted(pairs, key=lambda pair: (pair[0].sort_key(), pair[1].sort_key()))
    ]
    logger.debug("Found %d real-axis pairs for %s at %s", len(cases), target.components(), pt)
    return cases


def genuine_cases(cases: Iterable[DestabilizerCase]) -> List[DestabilizerCase]:
    """Cases that are neither zero-part nor proportional."""
    skip = {ClassificationTag.ZERO_PART, ClassificationTag.PROPORTIONAL}
    return [case for case in cases if not (case.classification & skip)]

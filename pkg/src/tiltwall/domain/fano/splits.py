"""Equal-slope splittings of a sheaf-side character and the pairings used to exclude shifted line bundles."""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from .chern import LINE_IDEAL, discriminant, euler_pairing, is_lattice, line_bundle_character, twist
from .exceptions import TiltDomainError
from .tilt import tilt_slope
from .value_objects import ChernCharacter, FanoContext, TiltPoint

logger = logging.getLogger(__name__)

IntRange = Tuple[int, int]

RANK_THREE_SHEAF = ChernCharacter(3, -1, Fraction(1, 2))
RANK_THREE_POINT = TiltPoint(Fraction(9, 100), Fraction(-7, 10))


def semistable_splits(
    sheaf: ChernCharacter,
    pt: TiltPoint,
    ctx: FanoContext,
    rank_bound: Optional[int] = None,
) -> List[Tuple[ChernCharacter, ChernCharacter]]:
    """All lattice splits sheaf = S' + S'' that a strictly semistable object could have at pt.

    Both parts share the tilt slope of the sheaf, have twisted ch1 strictly
    between 0 and that of the sheaf, and satisfy 0 ≤ Δ < Δ(sheaf). Each
    unordered split is returned once with the larger part first.
    """
    d = ctx.degree
    sheaf = sheaf.truncated()
    slope = tilt_slope(sheaf, pt, ctx)
    if slope.is_infinite:
        return []
    mu = slope.value
    total_delta = discriminant(sheaf, ctx)
    x_total = twist(sheaf, pt.beta, ctx).ch1

    if rank_bound is None:
        # α²a² ≤ t² - 2μat with 0 < t < x_total bounds |a|
        rank_bound = max(1, math.floor((x_total**2 + 2 * abs(mu) * x_total) / pt.alpha_sq))

    splits = set()
    for a in range(-rank_bound, rank_bound + 1):
        shift = pt.beta * a
        for b in range(math.floor(shift) + 1, math.ceil(shift + x_total)):
            t = b - shift
            twisted = ChernCharacter(a, t, pt.alpha_sq * d * a / 2 + mu * d * t)
            part = twist(twisted, -pt.beta, ctx)
            if not is_lattice(part, ctx):
                continue
            rest = sheaf - part
            deltas = (discriminant(part, ctx), discriminant(rest, ctx))
            if all(0 <= delta < total_delta for delta in deltas):
                splits.add(tuple(sorted((part, rest), key=ChernCharacter.sort_key, reverse=True)))

    logger.debug("Found %d equal-slope splits of %s (|a| ≤ %d)", len(splits), sheaf.components(), rank_bound)
    return sorted(splits, key=lambda pair: (pair[0].sort_key(), pair[1].sort_key()))


def rank_three_split_solutions(
    a_range: IntRange = (0, 3),
    b_range: IntRange = (-2, 1),
) -> List[Tuple[int, int, int]]:
    """Integer (a, b, c) with 2a + 7b + c = 0, 5b² - ac ∈ {0, 1} and 5(1 + b)² - (3 - a)(1 - c) ∈ {0, 1}.

    These are the splits (a, b, c/2) + (3 - a, -1 - b, (1 - c)/2) of the
    rank-three sheaf (3, -1, 1/2) at alpha² = 9/100, beta = -7/10 on the
    degree-five threefold. The default b range is the heart window
    0 < b + 7a/10 < 11/10 over the default ranks.
    """
    solutions = []
    for a in range(a_range[0], a_range[1] + 1):
        for b in range(b_range[0], b_range[1] + 1):
            c = -2 * a - 7 * b
            if 5 * b * b - a * c not in (0, 1):
                continue
            if 5 * (1 + b) ** 2 - (3 - a) * (1 - c) not in (0, 1):
                continue
            solutions.append((a, b, c))
    return solutions


def shifted_line_bundle_pairings(n: int, ctx: FanoContext) -> Tuple[Fraction, Fraction]:
    """(chi(O(-1), Q), chi(P, Q)) for P = n·O(-1) and Q = -2·I_l - P."""
    if n < 1:
        raise TiltDomainError(f"n must be a positive integer, got {n}")
    minus_one = line_bundle_character(-1, ctx)
    p = minus_one.scale(n)
    q = LINE_IDEAL.scale(-2) - p
    return euler_pairing(minus_one, q, ctx), euler_pairing(p, q, ctx)

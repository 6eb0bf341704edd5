"""Bogomolov, Li and BMS inequalities as exact tests.

Li's bounds hold for tilt-stable objects only; verdicts here evaluate the
inequality and say nothing about stability, so a VIOLATE means
"eliminates if stable".
"""
from fractions import Fraction

from .chern import discriminant, twist
from .enums import BoundReason, BoundStatus
from .exceptions import DegenerateBoundError
from .value_objects import BoundVerdict, ChernCharacter, FanoContext, Rational, as_rational

DEGREE_FIVE_WINDOW = Fraction(3, 20)
DEGREE_FOUR_WINDOW = Fraction(3, 16)
HALF = Fraction(1, 2)


def bogomolov_check(v: ChernCharacter, ctx: FanoContext) -> BoundVerdict:
    delta = discriminant(v, ctx)
    if delta > 0:
        status = BoundStatus.PASS
    elif delta == 0:
        status = BoundStatus.EQUALITY
    else:
        status = BoundStatus.VIOLATE
    return BoundVerdict(status, BoundReason.BOGOMOLOV, bound_value=Fraction(0), tested_value=delta)


def li_ch2_bound(ctx: FanoContext, mu: Rational) -> BoundVerdict:
    """Upper bound for Hch2/H³ch0 at slope mu: APPLIES with the bound, or NOT_APPLICABLE.

    The irrational window endpoints sqrt(3/20) and sqrt(3)/4 are decided on
    squares: |mu| ≤ 1 - sqrt(3)/4 iff |mu| < 1 and (1 - |mu|)² ≥ 3/16.
    """
    mu = as_rational(mu)
    d = ctx.degree
    size = abs(mu)

    if d == 5 and mu**2 <= DEGREE_FIVE_WINDOW:
        return BoundVerdict(BoundStatus.APPLIES, BoundReason.LI_DEGREE_FIVE, bound_value=Fraction(0))
    if d == 4 and mu**2 >= DEGREE_FOUR_WINDOW and size < 1 and (1 - size) ** 2 >= DEGREE_FOUR_WINDOW:
        return BoundVerdict(
            BoundStatus.APPLIES, BoundReason.LI_DEGREE_FOUR, bound_value=mu**2 / 2 - Fraction(3, 32)
        )
    if d == 3 and size <= HALF:
        return BoundVerdict(BoundStatus.APPLIES, BoundReason.LI_DEGREE_THREE_CENTRAL, bound_value=Fraction(0))
    if d == 3 and size <= 1:
        return BoundVerdict(BoundStatus.APPLIES, BoundReason.LI_DEGREE_THREE_SHOULDER, bound_value=size - HALF)
    if d == 2 and size <= HALF:
        return BoundVerdict(BoundStatus.APPLIES, BoundReason.LI_DEGREE_TWO, bound_value=Fraction(0))
    if d == 1:
        return BoundVerdict(BoundStatus.NOT_APPLICABLE, BoundReason.LI_NO_BOUND)
    return BoundVerdict(BoundStatus.NOT_APPLICABLE, BoundReason.LI_OUTSIDE_WINDOW)


def li_check(v: ChernCharacter, ctx: FanoContext) -> BoundVerdict:
    """Compare Hch2/H³ch0 = ch2/(d·ch0) with Li's bound at mu = ch1/ch0.

    Equality is only possible in ranks 1 and 2; higher ranks meeting the
    bound with equality are reported as a rider violation.
    """
    if v.ch0 == 0:
        return BoundVerdict(BoundStatus.NOT_APPLICABLE, BoundReason.ZERO_RANK)
    mu = v.ch1 / v.ch0
    ratio = v.ch2 / (ctx.degree * v.ch0)
    window = li_ch2_bound(ctx, mu)
    if window.status is BoundStatus.NOT_APPLICABLE:
        return BoundVerdict(window.status, window.reason, tested_value=ratio)

    bound = window.bound_value
    if ratio > bound:
        return BoundVerdict(BoundStatus.VIOLATE, window.reason, bound_value=bound, tested_value=ratio)
    if ratio < bound:
        return BoundVerdict(BoundStatus.PASS, window.reason, bound_value=bound, tested_value=ratio)
    if abs(v.ch0) >= 3:
        return BoundVerdict(BoundStatus.VIOLATE, BoundReason.RANK_RIDER, bound_value=bound, tested_value=ratio)
    return BoundVerdict(BoundStatus.EQUALITY, window.reason, bound_value=bound, tested_value=ratio)


def bms_ch3_bound(v: ChernCharacter, alpha_sq: Rational, beta: Rational, ctx: FanoContext) -> Fraction:
    """Largest ch3 allowed by α²Δ + 4(Hch2^β)² - 6(H²ch1^β)·ch3^β ≥ 0.

    alpha_sq may be 0, which evaluates the closed inequality in the limit.
    """
    alpha_sq, beta = as_rational(alpha_sq), as_rational(beta)
    d = ctx.degree
    level_two = v.truncated()
    tw = twist(level_two, beta, ctx)
    h2_ch1 = d * tw.ch1
    if h2_ch1 <= 0:
        raise DegenerateBoundError(f"H²ch1^β = {h2_ch1} must be positive for the ch3 bound")

    twisted_bound = (alpha_sq * discriminant(level_two, ctx) + 4 * tw.ch2**2) / (6 * h2_ch1)
    # ch3^β = ch3 - β·ch2 + β²d·ch1/2 - β³d·ch0/6
    return twisted_bound + beta * v.ch2 - beta**2 * d * v.ch1 / 2 + beta**3 * d * v.ch0 / 6

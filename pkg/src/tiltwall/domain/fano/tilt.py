"""Tilt central charges, slopes and numerical walls in the (beta, alpha²) plane."""
from fractions import Fraction

from .chern import twist
from .enums import WallKind
from .value_objects import ChargeValue, ChernCharacter, FanoContext, Slope, TiltPoint, WallLocus


def central_charge(v: ChernCharacter, pt: TiltPoint, ctx: FanoContext) -> ChargeValue:
    """Z = ½α²·H³ch0^β - Hch2^β + i·H²ch1^β."""
    tw = twist(v.truncated(), pt.beta, ctx)
    d = ctx.degree
    return ChargeValue(pt.alpha_sq * d * tw.ch0 / 2 - tw.ch2, d * tw.ch1)


def tilt_slope(v: ChernCharacter, pt: TiltPoint, ctx: FanoContext) -> Slope:
    return Slope.from_charge(central_charge(v, pt, ctx))


def rotated_charge(v: ChernCharacter, pt: TiltPoint, ctx: FanoContext) -> ChargeValue:
    """Z divided by i: the real axis of the result carries Re Z = 0."""
    return central_charge(v, pt, ctx).rotated()


def rotated_slope(v: ChernCharacter, pt: TiltPoint, ctx: FanoContext) -> Slope:
    """Finite off the parabola where Re Z vanishes, +infinity on it."""
    return Slope.from_ratio(rotated_charge(v, pt, ctx))


def region_v_contains(pt: TiltPoint) -> bool:
    """-1/2 ≤ β < 0 with α < -β, or -1 < β < -1/2 with α ≤ 1 + β."""
    beta, alpha_sq = pt.beta, pt.alpha_sq
    half = Fraction(-1, 2)
    if half <= beta < 0:
        return alpha_sq < beta**2
    if -1 < beta < half:
        return alpha_sq <= (1 + beta) ** 2
    return False


def wall_between(v: ChernCharacter, w: ChernCharacter, ctx: FanoContext) -> WallLocus:
    """Locus where Re Z(v)·Im Z(w) = Re Z(w)·Im Z(v).

    Expanding in β the equation reduces to
    A·(α² + β²) + B·β + C = 0 with
    A = ½d(r_v·c_w - r_w·c_v), B = e_v·r_w - e_w·r_v, C = e_w·c_v - e_v·c_w
    for level-2 data (r, c, e) = (ch0, ch1, ch2).
    """
    d = ctx.degree
    a = Fraction(d, 2) * (v.ch0 * w.ch1 - w.ch0 * v.ch1)
    b = v.ch2 * w.ch0 - w.ch2 * v.ch0
    c = w.ch2 * v.ch1 - v.ch2 * w.ch1

    if a == 0:
        if b != 0:
            return WallLocus(WallKind.VERTICAL_LINE, beta0=-c / b)
        return WallLocus(WallKind.EVERYWHERE if c == 0 else WallKind.NOWHERE)

    center = -b / (2 * a)
    radius_sq = center**2 - c / a
    if radius_sq <= 0:
        return WallLocus(WallKind.NOWHERE)
    return WallLocus(WallKind.CIRCLE, center_beta=center, radius_sq=radius_sq)

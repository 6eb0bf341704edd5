"""Exact Chern character arithmetic on an index-two Fano threefold of Picard rank one."""
import logging
from fractions import Fraction
from typing import Iterable, List, Optional

import sympy as sp

from .enums import PairingSide
from .exceptions import (
    InconsistentSystemError,
    LatticeViolationError,
    MissingPointClassError,
    SingularSystemError,
)
from .value_objects import (
    ChernCharacter,
    EulerConstraint,
    FanoContext,
    HilbertPolynomial,
    Rational,
    as_rational,
)

logger = logging.getLogger(__name__)

TRIVIAL = ChernCharacter(1, 0, 0, 0)
LINE_IDEAL = ChernCharacter(1, 0, -1, 0)


def _require_point_class(*characters: ChernCharacter) -> None:
    for v in characters:
        if v.ch3 is None:
            raise MissingPointClassError(f"ch3 is required but {v.components()} is a level-2 truncation")


def _is_integer(x: Fraction) -> bool:
    return x.denominator == 1


def is_lattice(v: ChernCharacter, ctx: FanoContext) -> bool:
    """Integrality of ch0, ch1, 2ch2 and 6ch3 plus 2ch2 ≡ d·ch1² (mod 2)."""
    if not (_is_integer(v.ch0) and _is_integer(v.ch1)):
        return False
    twice_ch2 = 2 * v.ch2
    if not _is_integer(twice_ch2):
        return False
    if (twice_ch2 - ctx.degree * v.ch1**2) % 2 != 0:
        return False
    return v.ch3 is None or _is_integer(6 * v.ch3)


def make_character(
    ch0: Rational,
    ch1: Rational,
    ch2: Rational,
    ch3: Optional[Rational] = None,
    assert_lattice: bool = False,
    ctx: Optional[FanoContext] = None,
) -> ChernCharacter:
    """Build a character, optionally asserting that it lies in the integral lattice.

    Args:
        ch0, ch1, ch2, ch3: coefficients in the (1, H, L, P) basis
        assert_lattice: raise when the lattice predicate fails
        ctx: the threefold, required when assert_lattice is set

    Returns:
        The character
    """
    v = ChernCharacter(ch0, ch1, ch2, ch3)
    if assert_lattice:
        if ctx is None:
            raise ValueError("A FanoContext is needed to test the lattice predicate")
        if not is_lattice(v, ctx):
            raise LatticeViolationError(
                f"{v.components()} is not integral for d={ctx.degree} "
                "(need ch0, ch1, 2ch2, 6ch3 integral and 2ch2 ≡ d·ch1² mod 2)"
            )
    return v


def exponential(beta: Rational, ctx: FanoContext) -> ChernCharacter:
    """e^{beta·H} expanded in the truncated ring."""
    b = as_rational(beta)
    d = ctx.degree
    return ChernCharacter(1, b, b**2 * d / 2, b**3 * d / 6)


def line_bundle_character(n: int, ctx: FanoContext) -> ChernCharacter:
    return exponential(n, ctx)


def ring_product(v: ChernCharacter, w: ChernCharacter, ctx: FanoContext) -> ChernCharacter:
    """Product in Q[H]/(H^4) with H·H = dL, H·L = P; ch3 survives only if both factors carry it."""
    d = ctx.degree
    c0 = v.ch0 * w.ch0
    c1 = v.ch0 * w.ch1 + v.ch1 * w.ch0
    c2 = v.ch0 * w.ch2 + v.ch2 * w.ch0 + d * v.ch1 * w.ch1
    c3 = None
    if v.ch3 is not None and w.ch3 is not None:
        c3 = v.ch0 * w.ch3 + v.ch3 * w.ch0 + v.ch1 * w.ch2 + v.ch2 * w.ch1
    return ChernCharacter(c0, c1, c2, c3)


def twist(v: ChernCharacter, beta: Rational, ctx: FanoContext) -> ChernCharacter:
    """The twisted character e^{-beta·H}·v."""
    b = as_rational(beta)
    if b == 0:
        return v
    return ring_product(exponential(-b, ctx), v, ctx)


def dual(v: ChernCharacter) -> ChernCharacter:
    ch3 = None if v.ch3 is None else -v.ch3
    return ChernCharacter(v.ch0, -v.ch1, v.ch2, ch3)


def discriminant(v: ChernCharacter, ctx: FanoContext) -> Fraction:
    """(H²ch1)² - 2·H³ch0·Hch2 = (d·ch1)² - 2d·ch0·ch2."""
    d = ctx.degree
    return (d * v.ch1) ** 2 - 2 * d * v.ch0 * v.ch2


def slope_mumford(v: ChernCharacter) -> Optional[Fraction]:
    """ch1/ch0, or None standing for +infinity when ch0 = 0."""
    if v.ch0 == 0:
        return None
    return v.ch1 / v.ch0


def _euler_characteristic(x: ChernCharacter, ctx: FanoContext) -> Fraction:
    return ring_product(x, ctx.todd, ctx).ch3


def euler_pairing(v: ChernCharacter, w: ChernCharacter, ctx: FanoContext) -> Fraction:
    """chi(v, w) by Hirzebruch-Riemann-Roch."""
    _require_point_class(v, w)
    return _euler_characteristic(ring_product(dual(v), w, ctx), ctx)


def hilbert_polynomial(v: ChernCharacter, ctx: FanoContext) -> HilbertPolynomial:
    """m -> chi(O, v·e^{mH}) as a cubic with exact coefficients."""
    _require_point_class(v)
    m = sp.Symbol("m")
    samples = []
    for k in range(4):
        value = euler_pairing(TRIVIAL, ring_product(v, line_bundle_character(k, ctx), ctx), ctx)
        samples.append((k, _to_sympy(value)))
    poly = sp.Poly(sp.interpolate(samples, m), m)
    coefficients = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    coefficients += [Fraction(0)] * (4 - len(coefficients))
    return HilbertPolynomial(tuple(coefficients[:4]))


def _basis_vector(i: int) -> ChernCharacter:
    entries = [0, 0, 0, 0]
    entries[i] = 1
    return ChernCharacter(*entries)


def _to_sympy(x: Fraction) -> sp.Rational:
    return sp.Rational(x.numerator, x.denominator)


def solve_character_from_euler_constraints(
    constraints: Iterable[EulerConstraint], ctx: FanoContext
) -> ChernCharacter:
    """Recover the unique character F satisfying the given Euler pairings.

    Each constraint is linear in (ch0, ch1, ch2, ch3) of F, so the system is
    solved exactly over the rationals.
    """
    constraints = list(constraints)
    rows: List[List[sp.Rational]] = []
    rhs: List[sp.Rational] = []
    for constraint in constraints:
        _require_point_class(constraint.partner)
        if constraint.side is PairingSide.LEFT:
            row = [euler_pairing(constraint.partner, _basis_vector(i), ctx) for i in range(4)]
        else:
            row = [euler_pairing(_basis_vector(i), constraint.partner, ctx) for i in range(4)]
        rows.append([_to_sympy(x) for x in row])
        rhs.append(_to_sympy(constraint.value))

    if not rows:
        raise SingularSystemError("No Euler constraints given")

    matrix = sp.Matrix(rows)
    column = sp.Matrix(rhs)
    rank = matrix.rank()
    if matrix.row_join(column).rank() > rank:
        raise InconsistentSystemError("The Euler constraints are inconsistent")
    if rank < 4:
        raise SingularSystemError(f"The Euler constraints have rank {rank} < 4")

    solution, _ = matrix.gauss_jordan_solve(column)
    values = [Fraction(int(s.p), int(s.q)) for s in solution]
    logger.debug("Solved %d Euler constraints for d=%d: %s", len(constraints), ctx.degree, values)
    return ChernCharacter(*values)

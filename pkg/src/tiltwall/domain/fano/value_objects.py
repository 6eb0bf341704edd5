from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from .enums import BoundReason, BoundStatus, PairingSide, SlopeBranch, WallKind
from .exceptions import TiltDomainError, UnsupportedDegreeError

Rational = Union[int, Fraction, str]

SUPPORTED_DEGREES = (1, 2, 3, 4, 5)


def as_rational(value: Rational) -> Fraction:
    """Coerce an int, Fraction or "p/q" string into a Fraction."""
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals")
    if isinstance(value, float):
        raise TypeError("Floating point values are not accepted; pass a Fraction or 'p/q'")
    return Fraction(value)


@dataclass(frozen=True)
class FanoContext:
    """A Picard-rank-one index-two Fano threefold of degree d.

    The Chow ring is spanned by 1, H, L (a line) and P (a point) with
    H·H = d·L, H·L = P and H³ = d.
    """
    degree: int

    def __post_init__(self):
        if isinstance(self.degree, bool) or not isinstance(self.degree, int):
            raise UnsupportedDegreeError(self.degree)
        if self.degree not in SUPPORTED_DEGREES:
            raise UnsupportedDegreeError(self.degree)

    @property
    def todd(self) -> "ChernCharacter":
        """Todd class (1, H, (1 + d/3)L, P)."""
        return ChernCharacter(1, 1, 1 + Fraction(self.degree, 3), 1)

    @property
    def canonical_twist(self) -> int:
        """The canonical bundle is O(-2)."""
        return -2


@dataclass(frozen=True)
class ChernCharacter:
    """Chern character in the (1, H, L, P) basis; ch3 absent means a level-2 truncation."""
    ch0: Fraction
    ch1: Fraction
    ch2: Fraction
    ch3: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "ch0", as_rational(self.ch0))
        object.__setattr__(self, "ch1", as_rational(self.ch1))
        object.__setattr__(self, "ch2", as_rational(self.ch2))
        if self.ch3 is not None:
            object.__setattr__(self, "ch3", as_rational(self.ch3))

    @property
    def has_point_class(self) -> bool:
        return self.ch3 is not None

    @property
    def is_zero(self) -> bool:
        return self.ch0 == 0 and self.ch1 == 0 and self.ch2 == 0 and not self.ch3

    def components(self) -> Tuple[Fraction, ...]:
        """The stored coefficients, ch3 included only when present."""
        if self.ch3 is None:
            return (self.ch0, self.ch1, self.ch2)
        return (self.ch0, self.ch1, self.ch2, self.ch3)

    def truncated(self) -> "ChernCharacter":
        return ChernCharacter(self.ch0, self.ch1, self.ch2)

    def scale(self, factor: Rational) -> "ChernCharacter":
        k = as_rational(factor)
        ch3 = None if self.ch3 is None else k * self.ch3
        return ChernCharacter(k * self.ch0, k * self.ch1, k * self.ch2, ch3)

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        if not isinstance(other, ChernCharacter):
            return NotImplemented
        ch3 = None
        if self.ch3 is not None and other.ch3 is not None:
            ch3 = self.ch3 + other.ch3
        return ChernCharacter(self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2, ch3)

    def __neg__(self) -> "ChernCharacter":
        return self.scale(-1)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        if not isinstance(other, ChernCharacter):
            return NotImplemented
        return self + (-other)

    def sort_key(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.ch0, self.ch1, self.ch2)


@dataclass(frozen=True)
class HilbertPolynomial:
    """Coefficients a0..a3 of m -> chi(F(m))."""
    coefficients: Tuple[Fraction, Fraction, Fraction, Fraction]

    def evaluate(self, m: Rational) -> Fraction:
        x = as_rational(m)
        return sum((a * x**i for i, a in enumerate(self.coefficients)), Fraction(0))

    @property
    def leading(self) -> Fraction:
        return self.coefficients[3]

    @property
    def reduced(self) -> Tuple[Fraction, Fraction, Fraction]:
        """The truncated polynomial with the constant term dropped, as (a1, a2, a3)."""
        return self.coefficients[1:]


@dataclass(frozen=True)
class TiltPoint:
    """A point of the tilt half-plane, stored as (alpha², beta)."""
    alpha_sq: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha_sq", as_rational(self.alpha_sq))
        object.__setattr__(self, "beta", as_rational(self.beta))
        if self.alpha_sq <= 0:
            raise TiltDomainError(f"alpha_sq must be positive, got {self.alpha_sq}")


@dataclass(frozen=True)
class ChargeValue:
    re: Fraction
    im: Fraction

    def __add__(self, other: "ChargeValue") -> "ChargeValue":
        return ChargeValue(self.re + other.re, self.im + other.im)

    def rotated(self) -> "ChargeValue":
        """Quarter turn (re, im) -> (im, -re)."""
        return ChargeValue(self.im, -self.re)


@dataclass(frozen=True)
class Slope:
    """A slope that is either a finite rational or +infinity with an annotation."""
    value: Optional[Fraction]
    branch: SlopeBranch

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @classmethod
    def from_charge(cls, charge: ChargeValue) -> "Slope":
        if charge.im > 0:
            return cls(-charge.re / charge.im, SlopeBranch.FINITE)
        if charge.im < 0:
            return cls(None, SlopeBranch.SHIFTED)
        if charge.re < 0:
            return cls(None, SlopeBranch.NEGATIVE_REAL)
        return cls(None, SlopeBranch.NONNEGATIVE_REAL)

    @classmethod
    def from_ratio(cls, charge: ChargeValue) -> "Slope":
        """-re/im for any nonzero im; the branch still records the sign of im."""
        if charge.im == 0:
            return cls.from_charge(charge)
        branch = SlopeBranch.FINITE if charge.im > 0 else SlopeBranch.SHIFTED
        return cls(-charge.re / charge.im, branch)


@dataclass(frozen=True)
class WallLocus:
    """Solution set of a slope-equality equation in the (beta, alpha²) plane."""
    kind: WallKind
    center_beta: Optional[Fraction] = None
    radius_sq: Optional[Fraction] = None
    beta0: Optional[Fraction] = None

    def contains(self, alpha_sq: Rational, beta: Rational) -> bool:
        a2, b = as_rational(alpha_sq), as_rational(beta)
        if self.kind is WallKind.CIRCLE:
            return (b - self.center_beta) ** 2 + a2 == self.radius_sq
        if self.kind is WallKind.VERTICAL_LINE:
            return b == self.beta0
        return self.kind is WallKind.EVERYWHERE

    def alpha_sq_at(self, beta: Rational) -> Optional[Fraction]:
        """alpha² of the circle above beta, or None outside its span."""
        if self.kind is not WallKind.CIRCLE:
            return None
        value = self.radius_sq - (as_rational(beta) - self.center_beta) ** 2
        return value if value > 0 else None


@dataclass(frozen=True)
class BoundVerdict:
    status: BoundStatus
    reason: BoundReason
    bound_value: Optional[Fraction] = None
    tested_value: Optional[Fraction] = None

    @property
    def eliminates_if_stable(self) -> bool:
        return self.status is BoundStatus.VIOLATE


@dataclass(frozen=True)
class EulerConstraint:
    """chi(partner, F) = value for LEFT, chi(F, partner) = value for RIGHT."""
    partner: ChernCharacter
    side: PairingSide
    value: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))

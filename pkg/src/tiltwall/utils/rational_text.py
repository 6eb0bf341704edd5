import re
from fractions import Fraction
from typing import Iterable, List, Optional

from tiltwall.domain.fano.value_objects import ChernCharacter

RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


class RationalParseError(ValueError):
    """Raised for text that is not an exact rational."""


class RationalText:
    """Utility for exact rational text: "p/q", or "p" when q = 1."""

    @staticmethod
    def parse(text: str) -> Fraction:
        """Parse an integer or a fraction; decimals and exponents are rejected."""
        stripped = text.strip()
        if not RATIONAL_PATTERN.match(stripped):
            raise RationalParseError(f"Not an exact rational: {text!r}")
        if stripped.endswith("/0"):
            raise RationalParseError(f"Zero denominator in {text!r}")
        return Fraction(stripped)

    @staticmethod
    def format(value: Optional[Fraction]) -> Optional[str]:
        if value is None:
            return None
        return str(Fraction(value))

    @staticmethod
    def format_all(values: Iterable[Fraction]) -> List[str]:
        return [RationalText.format(v) for v in values]

    @staticmethod
    def parse_character(text: str) -> ChernCharacter:
        """Parse "r,c1,c2[,c3]" in the (1, H, L, P) basis."""
        parts = text.split(",")
        if len(parts) not in (3, 4):
            raise RationalParseError(f"A character needs 3 or 4 comma-separated entries, got {text!r}")
        return ChernCharacter(*(RationalText.parse(p) for p in parts))

    @staticmethod
    def format_character(v: ChernCharacter) -> List[str]:
        return RationalText.format_all(v.components())

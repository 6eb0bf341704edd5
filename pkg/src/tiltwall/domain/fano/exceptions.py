class TiltwallError(Exception):
    """Base class for every error raised by the tilt-stability engine."""


class UnsupportedDegreeError(TiltwallError, ValueError):
    """The Fano degree lies outside the supported set."""

    def __init__(self, degree: int, allowed=(1, 2, 3, 4, 5)):
        self.degree = degree
        self.allowed = tuple(allowed)
        super().__init__(
            f"Unsupported degree {degree}; expected one of {', '.join(map(str, self.allowed))}"
        )


class LatticeViolationError(TiltwallError, ValueError):
    """A character asserted to be integral fails the lattice predicate."""


class MissingPointClassError(TiltwallError, ValueError):
    """An operation needs ch3 but received a level-2 truncation."""


class SingularSystemError(TiltwallError):
    """The Euler constraints do not determine a unique character."""


class InconsistentSystemError(TiltwallError):
    """The Euler constraints admit no solution."""


class DegenerateBoundError(TiltwallError):
    """A bound was requested where its defining inequality degenerates."""


class TiltDomainError(TiltwallError, ValueError):
    """Input lies outside the domain of a tilt operation."""


class UnboundedSearchError(TiltwallError):
    """An enumeration has no derived rank bound and no user cap."""

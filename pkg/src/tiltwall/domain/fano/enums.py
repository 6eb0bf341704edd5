from enum import Enum


class SlopeBranch(Enum):
    """How a slope value was obtained from its central charge."""
    FINITE = "finite"
    NEGATIVE_REAL = "negative-real"
    NONNEGATIVE_REAL = "nonnegative-real"
    SHIFTED = "shifted"


class WallKind(Enum):
    """Shapes of a numerical wall in the (beta, alpha) half-plane."""
    CIRCLE = "circle"
    VERTICAL_LINE = "vertical-line"
    EVERYWHERE = "everywhere"
    NOWHERE = "nowhere"


class BoundStatus(Enum):
    """Outcome of an exact inequality test."""
    PASS = "pass"
    VIOLATE = "violate"
    EQUALITY = "equality"
    NOT_APPLICABLE = "not-applicable"
    APPLIES = "applies"


class BoundReason(Enum):
    """Which inequality (or which window of it) produced a verdict."""
    BOGOMOLOV = "bogomolov"
    LI_DEGREE_FIVE = "li-degree-5"
    LI_DEGREE_FOUR = "li-degree-4"
    LI_DEGREE_THREE_CENTRAL = "li-degree-3-central"
    LI_DEGREE_THREE_SHOULDER = "li-degree-3-shoulder"
    LI_DEGREE_TWO = "li-degree-2"
    LI_OUTSIDE_WINDOW = "li-outside-window"
    LI_NO_BOUND = "li-no-bound"
    RANK_RIDER = "rank-rider"
    ZERO_RANK = "zero-rank"


class ClassificationTag(Enum):
    """Classification attached to wall candidates and destabilizer pairs."""
    PROPORTIONAL = "proportional"
    ZERO_PART = "zero-part"
    SIGN_CLASH = "sign-clash"
    DELTA_VIOLATION = "delta-violation"
    LATTICE_VIOLATION = "lattice-violation"
    LI_ELIMINATED = "li-eliminated"
    RIDER_ELIMINATED = "rider-eliminated"
    REQUIRES_CATEGORICAL = "requires-categorical"
    SURVIVES = "survives"


class BranchNoteKind(Enum):
    """Diagnostics for search branches that produce no candidate."""
    SIGN_CLASH = "sign-clash"
    INTEGRALITY_GAP = "integrality-gap"


class CertificateDerivation(Enum):
    """Where the rank window of an enumeration came from."""
    DELTA_INTERVAL = "delta-interval"
    SLOPE_MONOTONE = "slope-monotone"
    USER_CAP = "user-cap"


class PairingSide(Enum):
    """Position of the unknown character in an Euler constraint."""
    LEFT = "left"
    RIGHT = "right"


class Verdict(Enum):
    """Result of comparing a scenario run with its recorded outcome."""
    MATCH = "match"
    MISMATCH = "mismatch"

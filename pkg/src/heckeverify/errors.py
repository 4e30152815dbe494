"""Exception hierarchy for the verification pipeline."""


class HeckeVerifyError(Exception):
    """Base class for all library errors."""


class NotAUnit(HeckeVerifyError):
    """Laurent polynomial is not a single invertible term."""


class DimensionMismatch(HeckeVerifyError):
    """Incompatible matrix dimensions or tensor layouts."""


class ConstraintViolation(HeckeVerifyError):
    """Structural parameters violate a required algebraic constraint."""


class RelationFailure(HeckeVerifyError):
    """A defining algebra relation does not hold."""


class NotInvertible(HeckeVerifyError):
    """Matrix has no inverse under the quadratic-relation formula."""


class IndexOutOfRange(HeckeVerifyError):
    """Generator or element index outside the valid range."""


class CalibrationFailure(HeckeVerifyError):
    """No (or no unique) candidate satisfies the calibration identity."""


class ConditionFailure(HeckeVerifyError):
    """A side condition required by a transfer-matrix construction fails."""


class InternalMismatch(HeckeVerifyError):
    """Two independent constructions of the same object disagree."""


class MurphyMismatch(HeckeVerifyError):
    """Transfer-matrix edge coefficient is not proportional to the expected element."""


class SpanFailure(HeckeVerifyError):
    """Exact linear solve found no representation in the requested span."""


class ConfigError(HeckeVerifyError):
    """Invalid run configuration."""

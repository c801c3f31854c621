"""Exception types shared across the package."""


class HeckemodError(Exception):
    """Base class for all library-specific errors."""


class MismatchedField(HeckemodError, ValueError):
    """Two cyclotomic numbers from fields with different ell were combined."""


class ShapeError(HeckemodError, ValueError):
    """Base class for invalid shape data."""


class NotSkew(ShapeError):
    """A component's cells violate the skew-closure condition."""


class NotConnected(ShapeError):
    """A declared component is not edge-connected."""


class DegenerateShape(ShapeError):
    """Components in the same coordinate interlock in a way that admits no
    simultaneous placement (equivalently, some cross-component content gap
    is smaller than 2)."""


class EmptyShape(ShapeError):
    """Shapes must contain at least one box."""


class NotAPartition(ShapeError):
    """Row lengths are not a weakly decreasing sequence of positive integers."""


class NotStandard(HeckemodError, ValueError):
    """A label swap would break row/column monotonicity."""


class DimensionMismatch(HeckemodError, ValueError):
    """Operands disagree on dimension, ell, or number of strands."""


class NotScalar(HeckemodError, ValueError):
    """A matrix expected to be scalar is not."""


class ConditionFailed(HeckemodError, ValueError):
    """A weight fails the pairwise admissibility condition.

    Carries the first ConditionViolation found.
    """

    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class NoAddablePosition(HeckemodError, ValueError):
    """The reconstruction recursion found no legal spot for the next box."""

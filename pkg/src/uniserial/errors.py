"""Exception hierarchy shared by every module of the package."""


class UniserialError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatchError(UniserialError, TypeError):
    """Operands live over structurally different fields."""


class ImperfectFieldError(UniserialError):
    """The requested computation needs a perfect coefficient field.

    Raised, for instance, when a p-th root does not exist in F_q(t), or when
    Jordan-Chevalley and socle computations are asked to run over F_q(t),
    where the decomposition is not unique.
    """


class NotFiniteFieldError(UniserialError):
    """The operation is only defined over finite fields."""


class ShapeError(UniserialError, ValueError):
    """Matrix or vector dimensions do not agree."""


class InconsistentSystemError(UniserialError, ValueError):
    """A linear system has no solution."""


class NonCommutingError(UniserialError, ValueError):
    """Two generators of a supposedly commutative algebra do not commute."""

    def __init__(self, i, j):
        super().__init__(f"generators {i} and {j} do not commute")
        self.pair = (i, j)


class NotCyclicError(UniserialError, ValueError):
    """The operator has no cyclic vector."""


class NotInAlgebraError(UniserialError, ValueError):
    """A matrix is not a polynomial in the given cyclic operator."""

    def __init__(self, index):
        super().__init__(f"element {index} is not a polynomial in the cyclic generator")
        self.index = index


class NoRootError(UniserialError, ValueError):
    """The polynomial has no root in the requested field."""


class NotUniserialError(UniserialError, ValueError):
    """The module was required to be uniserial and is not."""


class FieldTooSmallError(UniserialError):
    """A linear-combination sweep exhausted a field too small for the guarantee."""


class GuardExceededError(UniserialError, ValueError):
    """A construction would exceed the configured size guard."""


class InvariantViolation(UniserialError, AssertionError):
    """An internal consistency check that the theory guarantees has failed."""

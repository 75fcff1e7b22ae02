"""Exception types shared across the package."""


class HeffterError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameters(HeffterError, ValueError):
    """Array parameters violate the defining constraints (mh = nk, bounds, t | 2nk)."""


class ShapeError(HeffterError, ValueError):
    """An operation requiring a particular array shape received something else."""


class ParseError(HeffterError, ValueError):
    """Array text could not be parsed, or a token is illegal for the declared parameters."""


class NotHeffterArray(HeffterError, ValueError):
    """The input array fails the zero-sum Heffter conditions required here."""


class VerificationFailed(HeffterError, ValueError):
    """An operation's precondition that the array certify cleanly was not met."""


class InvalidTransversal(HeffterError, ValueError):
    """A pinned cell set is not a transversal of the host array."""


class ConstructionExhausted(HeffterError, RuntimeError):
    """The randomized constructor ran out of attempts.

    Carries the seed so the failing run can be reproduced.
    """

    def __init__(self, message: str, seed: int, attempts: int):
        super().__init__(message)
        self.seed = seed
        self.attempts = attempts


class NonSimpleOrdering(HeffterError, ValueError):
    """An ordering has colliding partial sums where distinct ones are required."""


class CoverageError(HeffterError, ValueError):
    """Signed differences of a block family do not cover the group as required."""


class HostMismatch(HeffterError, ValueError):
    """Two decompositions live on different host graphs."""


class DegenerateCircuit(HeffterError, ValueError):
    """Translates of a path collide on an edge, so their union is not a circuit."""


class IncompatibleOrderings(HeffterError, ValueError):
    """The composed row/column orderings do not act as a single cycle."""


class ColoringError(HeffterError, ValueError):
    """A traced embedding put some edge on two faces of the same color."""


class NotApplicable(HeffterError, ValueError):
    """Closed-form shortcut invoked outside its hypotheses."""

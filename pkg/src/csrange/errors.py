"""Exception types shared across the package."""


class CSRangeError(Exception):
    """Base class for domain errors raised by this package."""


class ZeroDistanceError(CSRangeError, ValueError):
    """Two positions coincide where a positive separation is required."""


class InvalidExponentError(CSRangeError, ValueError):
    """Path-loss exponent out of range.

    The model needs alpha > 2: at alpha <= 2 the interference summed over an
    unbounded plane of senders diverges and no finite sensing range is safe.
    """


class InvalidThresholdError(CSRangeError, ValueError):
    """SINR threshold must be positive."""


class EmptyLinkSetError(CSRangeError, ValueError):
    """A link set must contain at least one link."""


class TooManyLinksError(CSRangeError, ValueError):
    """Topology exceeds the exhaustive-enumeration bound."""


class SamePolarityError(CSRangeError, ValueError):
    """Bisection endpoints share the same safety verdict, so no threshold is bracketed."""


class NotAViolationError(CSRangeError, RuntimeError):
    """A constructed counterexample failed to produce an SINR violation.

    Carries the SIR actually achieved by the would-be victim so callers can
    see how far from a violation the construction landed.
    """

    def __init__(self, message: str, data_sir: float | None = None, ack_sir: float | None = None):
        super().__init__(message)
        self.data_sir = data_sir
        self.ack_sir = ack_sir

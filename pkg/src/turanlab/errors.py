"""Exception hierarchy shared by every turanlab module."""


class TuranLabError(Exception):
    """Base class for all library errors."""


class CapacityError(TuranLabError):
    """A graph or pattern exceeds the configured size limit."""


class Graph6Error(TuranLabError, ValueError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SpecError(TuranLabError, ValueError):
    """A construction, pattern or parameter set violates its constraints."""


class HypothesisError(SpecError):
    """Parameters fail the hypotheses of the theorem being evaluated."""

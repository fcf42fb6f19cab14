"""Exception types shared across the package."""


class CraftbenchError(Exception):
    """Base class for all package-specific errors."""


class RetryExhausted(CraftbenchError):
    """World generation could not satisfy its invariants within the retry budget."""


class InvalidActionIndex(CraftbenchError):
    """Action index outside the 17-action categorical space."""


class SteppedAfterDone(CraftbenchError):
    """step() was called on an episode that already terminated."""


class RateOutOfRange(CraftbenchError):
    """A success rate outside [0, 100] was passed to the score."""


class EmptyLog(CraftbenchError):
    """A stats log with zero episodes cannot be summarized."""


class EmptyInput(CraftbenchError):
    """An aggregation was requested over zero run summaries."""


class IoFailure(CraftbenchError):
    """Reading or writing an artifact file failed."""

"""Exception types shared across the toolkit."""


class InvalidGraphError(ValueError):
    """Input violates a documented precondition (malformed graph or query)."""


class NoContactsError(InvalidGraphError):
    """Operation needs at least one contact (e.g. lifetime of an edgeless graph)."""


class GuardExceededError(RuntimeError):
    """Instance is larger than the exhaustive-search guard allows."""

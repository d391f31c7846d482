"""Exception types shared across the package."""


class CardmetricError(Exception):
    """Base class for domain errors raised by this package."""


class BackendMismatchError(CardmetricError):
    """An element does not belong to the group's backend."""


class InfiniteEnumerationError(CardmetricError):
    """Enumeration was requested on an infinite backend."""


class RadiusCapExceededError(CardmetricError):
    """A breadth-first search hit its radius cap before finding the target."""


class BoundExceededError(CardmetricError):
    """A brute-force enumeration would exceed its configured size bound."""


class TruncationError(CardmetricError):
    """An exact query was issued against a truncated digraph."""


class DecompositionError(CardmetricError):
    """Isometry decomposition precondition failed.

    ``pair`` holds the first (g, h) where the distance equation broke.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotationError(CardmetricError, ValueError):
    """Malformed textual input; ``position`` is the offending character offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position

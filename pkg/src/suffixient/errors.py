"""Exception types shared across the package."""


class SuffixientError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(SuffixientError, ValueError):
    """Letter code outside the configured alphabet."""


class BoundsError(SuffixientError, IndexError):
    """Coordinate outside the current text bounds."""


class SentinelError(SuffixientError, ValueError):
    """Sentinel protocol violated (missing, repeated, or occurring in the body)."""


class UsageError(SuffixientError, ValueError):
    """API misuse: mismatched structures, wrong call order, bad arguments."""


class HandleError(UsageError):
    """Handle does not belong to this structure or is otherwise invalid."""


class SizeError(SuffixientError, ValueError):
    """Requested enumeration exceeds the configured bound."""


class InvariantError(SuffixientError, RuntimeError):
    """A structural invariant was violated; indicates a bug upstream."""

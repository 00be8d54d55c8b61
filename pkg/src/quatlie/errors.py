"""Exception types shared across the package."""


class MalformedInputError(ValueError):
    """Input data does not have the promised shape (e.g. non-MJ blocks)."""


class DegenerateInputError(ValueError):
    """A basis argument is linearly dependent where independence is required."""


class NotClosedError(ValueError):
    """A bracket left the span it was supposed to stay in."""


class TruncationOverflowError(RuntimeError):
    """A raising operator tried to leave the truncated word space."""


class StructuralFailureError(RuntimeError):
    """A verified-by-construction identity failed; indicates a bug."""

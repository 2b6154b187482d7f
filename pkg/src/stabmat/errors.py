"""Exception hierarchy.

Every error raised by the library derives from :class:`StabmatError`. The
three intermediate classes map onto the CLI exit codes (parse = 1,
validation = 2, resource = 3).
"""


class StabmatError(Exception):
    """Base class for all library errors."""


class ParseError(StabmatError):
    """Malformed text input. ``line`` is 1-based, or None when not line-bound."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadPhaseToken(ParseError):
    pass


class LengthMismatch(ParseError):
    pass


class ValidationError(StabmatError):
    """A compact description violates one of its invariants."""


class DependentBasis(ValidationError):
    pass


class ZeroGamma(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class NonCommutingRows(ValidationError):
    def __init__(self, r, s):
        self.rows = (r, s)
        super().__init__(f"generators {r} and {s} anticommute")


class DependentRows(ValidationError):
    pass


class NotHermitian(ValidationError):
    def __init__(self, t, which="U"):
        self.index = t
        super().__init__(f"{which}_{t} is not Hermitian")


class BadCommutation(ValidationError):
    def __init__(self, t, s, detail=""):
        self.pair = (t, s)
        msg = f"bad commutation between entries {t} and {s}"
        super().__init__(f"{msg} ({detail})" if detail else msg)


class ContradictorySigns(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class InvariantViolation(StabmatError):
    """Raised by the debug walks when a cached invariant disagrees with a recomputation."""


class ResourceError(StabmatError):
    pass


class TooLarge(ResourceError):
    pass

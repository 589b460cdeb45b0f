"""Exception hierarchy shared by every chaoslut module."""


class ChaosLutError(Exception):
    """Base class for all library errors."""


class ValidationError(ChaosLutError, ValueError):
    """Bad parameter, key or image passed in by the caller."""


class OutOfRange(ValidationError):
    pass


class NonFinite(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class MalformedKey(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class EmptyImage(ValidationError):
    pass


class ImageTooSmall(ValidationError):
    pass


class SampleTooSmall(ValidationError):
    pass


class ZeroVariance(ValidationError):
    """Correlation is undefined for a constant sequence."""


class CipherError(ChaosLutError):
    """Failure inside the cipher itself (as opposed to bad input)."""


class DegenerateOrbit(CipherError):
    """The logistic orbit collapsed onto (or next to) a fixed point."""


class PgmError(ChaosLutError):
    """Unreadable PGM payload."""


class BadMagic(PgmError):
    pass


class BadHeader(PgmError):
    pass


class TruncatedData(PgmError):
    pass


class UnsupportedMaxval(PgmError):
    pass

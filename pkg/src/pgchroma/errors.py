"""Exception types shared across the package."""


class PgChromaError(Exception):
    """Base class for all library errors."""


class UnsupportedOrder(PgChromaError):
    """Field order q is not one of the supported prime powers."""


class DivisionByZero(PgChromaError):
    """Multiplicative inverse of zero requested."""


class ZeroVector(PgChromaError):
    """The all-zero vector does not define a projective point."""


class InvalidDimension(PgChromaError):
    """Subspace dimension out of range for the ambient space."""


class SamePoint(PgChromaError):
    """Two distinct points were required."""


class DimensionMismatch(PgChromaError):
    """Forbidden-subspace dimension exceeds the space dimension."""


class ParameterMismatch(PgChromaError):
    """Colorings being composed disagree on q or t."""


class ReservedColorUnused(PgChromaError):
    """The reserved color does not occur in the small factor."""


class MissingBase(PgChromaError):
    """A schedule step needs a base certificate that is not available."""


class ImproperSource(PgChromaError):
    """An operation requires a proper coloring but verification failed."""


class CertificateError(PgChromaError):
    """Base class for certificate file problems."""


class ParseError(CertificateError):
    """Malformed certificate file.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class ChecksumMismatch(CertificateError):
    """Header counts disagree with the certificate body."""


class TooLarge(PgChromaError):
    """Instance exceeds the hard limit of a brute-force routine."""

"""Exception types shared across the package."""


class PalinlaceError(Exception):
    """Base class for all input-validation and computation errors."""


class EmptyPolynomial(PalinlaceError):
    """All-zero coefficient input without an explicit zero request."""


class NotSelfInversive(PalinlaceError):
    """Operation requires a self-inversive (palindromic if real) polynomial."""


class NotTrim(PalinlaceError):
    """Operation requires a trim polynomial (no constant / top term)."""


class NotFull(PalinlaceError):
    """Operation requires a full polynomial (darga equals degree)."""


class DargaMismatch(PalinlaceError):
    """Evaluation order does not match the polynomial's darga."""


class NotApplicable(PalinlaceError):
    """Hypotheses of a bound or test do not hold for this input."""


class NotSupported(PalinlaceError):
    """Requested on the wrong numeric track (e.g. exact-only operation)."""


class InvalidParameter(PalinlaceError):
    """Family parameter outside its documented range."""


class TooLarge(PalinlaceError):
    """Input exceeds the exhaustive-search budget."""


class InternalInconsistency(PalinlaceError):
    """A theorem-guaranteed object could not be produced numerically."""


class OracleFailure(PalinlaceError):
    """The plumbing-grade numeric root solver failed to converge."""

"""Exception types shared across the package."""


class WordrepError(Exception):
    """Base class for all package-specific errors."""


class SpecError(WordrepError, ValueError):
    """A circulant description violates its invariants."""


class PreconditionError(WordrepError, ValueError):
    """An operation was called outside its stated precondition."""


class NoUniqueSolutionError(WordrepError, ValueError):
    """bx = a (mod m) has no unique solution because gcd(b, m) != 1."""


class NoInverseError(WordrepError, ValueError):
    """b has no multiplicative inverse modulo m."""


class NotNormalizableError(WordrepError):
    """Neither non-half jump is a unit mod 2n; the graph has no unit-jump form."""


class HomomorphismError(WordrepError):
    """An edge joins colors that are equal or unrelated in the color dag."""


class SchemeNotApplicableError(WordrepError):
    """The instance does not satisfy the scheme's hypothesis."""


class CertificateFailureError(WordrepError):
    """A constructed certificate failed its own verification.

    Carries the failing evidence (e.g. a shortcut witness or a list of
    monochromatic edges) so callers can surface it instead of hiding it.
    """

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class ConstructionBugError(WordrepError):
    """A word construction failed its representation check; fatal."""

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = violations


class NotFactorizableError(WordrepError):
    """No (p, q) pair satisfies the factorization conditions."""


class DisconnectedError(WordrepError):
    """The graph is disconnected; decompose into components first."""

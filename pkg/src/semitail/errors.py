"""Exception hierarchy for semitail.

Every error raised on purpose by this package derives from SemitailError,
so callers can catch the whole family with one clause.  Validation errors
additionally derive from ValueError.
"""


class SemitailError(Exception):
    """Base class for all semitail errors."""


class ParameterError(SemitailError, ValueError):
    """A sequence parameter triple (a, c, d) violates a constraint."""


class BaseTooSmall(ParameterError):
    """The base a is smaller than 2."""


class NonPositive(ParameterError):
    """A parameter that must be a positive integer is not."""


class FirstTermNonPositive(ParameterError):
    """d >= c*a, so the first sequence term c*a - d would not be positive."""


class NotCoprime(ParameterError):
    """d shares a factor with a or with c."""


class EmptyGenerators(SemitailError, ValueError):
    """An oracle monoid needs at least one generator."""


class DeskScaleExceeded(SemitailError):
    """A brute-force step would need more residue classes than the cap allows."""


class LengthMismatch(SemitailError, ValueError):
    """Two residual tuples of different length were compared."""


class OutOfRange(SemitailError, ValueError):
    """An integer lies outside the range representable by a residual tuple."""


class PreconditionFailed(SemitailError):
    """The hypotheses of a representation construction do not hold."""


class NotOfExpectedForm(SemitailError):
    """A coefficient sum is not of the form 1 + t*c*a^n."""


class CapExceeded(SemitailError):
    """A bounded search ran out of budget before finding its target."""


class EmbeddingDimensionOne(SemitailError):
    """The monoid is generated by its first element alone."""


class UnknownFamily(SemitailError, ValueError):
    """No sequence family is registered under the requested id."""

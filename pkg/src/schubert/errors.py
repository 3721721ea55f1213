"""Exception types raised across the package.

All of them derive from ValueError so callers that only care about bad
input can catch that.
"""


class DomainError(ValueError):
    """Argument lies outside the domain where the operation is defined."""


class ShapeError(ValueError):
    """Sizes or lengths of the operands do not fit together."""


class RankError(ValueError):
    """Matrix does not have full row rank."""


class SizeError(ValueError):
    """Input too large for an exhaustive computation."""


class TruncationError(ValueError):
    """Polynomials with different truncation bounds were combined."""

"""Exception hierarchy shared by every kronsub module."""


class KronsubError(Exception):
    """Base class for all library errors."""


class SingularMatrix(KronsubError):
    pass


class RankDeficient(KronsubError):
    pass


class ShapeMismatch(KronsubError, ValueError):
    pass


class InvalidShape(KronsubError, ValueError):
    pass


class NotColumnMinimalOnly(KronsubError):
    """The pencil carries row minimal indices or elementary divisors."""


class NotRowMinimalOnly(KronsubError):
    """The pencil carries column minimal indices or elementary divisors."""


class NoMonomorphism(KronsubError):
    pass


class NoEpimorphism(KronsubError):
    pass


class ConstructionFailed(KronsubError):
    """A morphism that provably exists was not found within the retry budget."""


class NotSubpencil(KronsubError):
    pass


class BudgetExceeded(KronsubError):
    pass


class ParseError(KronsubError, ValueError):
    """Malformed input file."""

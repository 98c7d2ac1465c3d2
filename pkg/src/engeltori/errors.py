"""Exception hierarchy shared by the library and the CLI.

The CLI maps ``ValidationError`` subclasses to exit code 1 and
``HypothesisViolated`` subclasses to exit code 2.
"""


class EngelToriError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(EngelToriError):
    """Input does not satisfy a structural precondition."""


class InvalidBraid(ValidationError):
    pass


class InvalidFront(ValidationError):
    pass


class MultiComponent(ValidationError):
    """The closure of a braid or front has more than one component."""


class NotAComplex(ValidationError):
    """Boundary maps are not composable or do not square to zero."""


class ShapeMismatch(ValidationError):
    pass


class TorsionCoordinate(ValidationError):
    pass


class BasisMismatch(ValidationError):
    pass


class UnknownId(ValidationError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class Cancelled(EngelToriError):
    """Raised when a caller-supplied cancellation check fires."""


class HypothesisViolated(EngelToriError):
    """A lemma was invoked outside the hypotheses under which it applies."""


class NotClosed3Manifold(HypothesisViolated):
    pass

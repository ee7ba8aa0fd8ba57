"""Exception types shared across the package."""


class SecresError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SecresError):
    """A matrix model violates a structural invariant.

    Subclasses name the violated invariant; the message carries the
    offending indices or values.
    """


class DegenerateUnperturbed(ValidationError):
    """Two diagonal unperturbed energies are exactly equal."""


class DiagonalInteraction(ValidationError):
    """An interaction entry sits on the diagonal (i == j)."""


class IndexOutOfRange(ValidationError):
    """A basis index lies outside 1..dimension."""


class DuplicateEntry(ValidationError):
    """An interaction pair or model-space index appears more than once."""


class EmptyPSpace(ValidationError):
    """The model-space index list is empty."""


class ModelFormatError(ValidationError):
    """A model file or dict is structurally malformed."""


class OrderMismatch(SecresError):
    """Two truncated series with different truncation orders were combined."""


class EmptyList(SecresError):
    """An operation that needs at least one element received none."""


class DegreeTooSmall(SecresError):
    """The polynomial degree is below the minimum the operation supports."""


class ZeroPolynomial(SecresError):
    """Root finding was asked for the identically-zero polynomial."""


class RootFindingFailure(SecresError):
    """The simultaneous root iteration failed to converge.

    Carries the best iterates and the residual estimate for diagnostics.
    """

    def __init__(self, message: str, roots=None, max_residual: float | None = None):
        super().__init__(message)
        self.roots = roots
        self.max_residual = max_residual

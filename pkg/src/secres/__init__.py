"""Secular-polynomial resummation of matrix perturbation series.

Pipeline: eigenvalue perturbation series for the model-space states of a
finite Hamiltonian -> truncated secular polynomial of the implicit
effective Hamiltonian -> discriminant in the coupling -> exceptional points
(eigenvalue-coalescence couplings) whose nearest member sets the series'
radius of convergence.
"""

from .charpoly import (
    CharPoly,
    LambdaPolynomial,
    characteristic_polynomial,
    charpoly_cofactor,
    charpoly_faddeev_leverrier,
    exact_eigenvalues_at,
)
from .discriminant import (
    EXACT_SOURCE,
    ExceptionalPointEstimate,
    discriminant,
    exceptional_points,
    nearest_exceptional_point,
    reconstruction_source,
)
from .errors import (
    DegenerateUnperturbed,
    DegreeTooSmall,
    DiagonalInteraction,
    DuplicateEntry,
    EmptyList,
    EmptyPSpace,
    IndexOutOfRange,
    ModelFormatError,
    OrderMismatch,
    RootFindingFailure,
    SecresError,
    ValidationError,
    ZeroPolynomial,
)
from .model import (
    MatrixModel,
    hamiltonian_at,
    interaction_matrix,
    load_model,
    validate,
)
from .roots import RootSet, all_roots, sort_roots
from .rspt import StateSeries, p_space_series, perturbation_series
from .secular import SeriesPolynomial, eigenvalues_at, reconstruct
from .series import TruncatedSeries, format_coefficients

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "DegenerateUnperturbed",
    "DegreeTooSmall",
    "DiagonalInteraction",
    "DuplicateEntry",
    "EmptyList",
    "EmptyPSpace",
    "EXACT_SOURCE",
    "ExceptionalPointEstimate",
    "IndexOutOfRange",
    "LambdaPolynomial",
    "MatrixModel",
    "ModelFormatError",
    "OrderMismatch",
    "RootFindingFailure",
    "RootSet",
    "SecresError",
    "SeriesPolynomial",
    "StateSeries",
    "TruncatedSeries",
    "ValidationError",
    "ZeroPolynomial",
    "all_roots",
    "characteristic_polynomial",
    "charpoly_cofactor",
    "charpoly_faddeev_leverrier",
    "discriminant",
    "eigenvalues_at",
    "exact_eigenvalues_at",
    "exceptional_points",
    "format_coefficients",
    "hamiltonian_at",
    "interaction_matrix",
    "load_model",
    "nearest_exceptional_point",
    "p_space_series",
    "perturbation_series",
    "reconstruct",
    "reconstruction_source",
    "sort_roots",
    "validate",
]

"""Order-K truncated secular polynomial of the implicit effective Hamiltonian.

Expanding prod_n (W - E_n(lambda)) over the model-space energy series, with
truncation applied inside every multiplication, yields a monic polynomial in
the energy variable W whose coefficients p_1..p_N are themselves truncated
series in the coupling.  Its roots resum the individual series; no effective
Hamiltonian matrix is ever constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import EmptyList, OrderMismatch, RootFindingFailure
from .roots import all_roots, sort_roots
from .rspt import StateSeries
from .series import TruncatedSeries


@dataclass(frozen=True)
class SeriesPolynomial:
    """Monic degree-N polynomial in W with truncated-series coefficients.

    coefficients holds p_1..p_N where p_j multiplies W^(N-j); the leading
    coefficient 1 is implicit.  All coefficient series share one truncation
    order.
    """

    degree: int
    order: int
    coefficients: tuple[TruncatedSeries, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        if len(self.coefficients) != self.degree:
            raise ValueError(
                f"expected {self.degree} coefficient series, got "
                f"{len(self.coefficients)}"
            )
        for series in self.coefficients:
            if series.order != self.order:
                raise OrderMismatch(
                    f"coefficient order {series.order} != polynomial order "
                    f"{self.order}"
                )

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "order": self.order,
            "coefficients": [list(s.coefficients) for s in self.coefficients],
        }


def reconstruct(
    series_list: Iterable[Union[StateSeries, TruncatedSeries]],
) -> SeriesPolynomial:
    """Expand prod (W - E_n) with truncation at every multiplication.

    Accepts the state series produced by the perturbation engine or bare
    truncated series.  The result is symmetric in the inputs, so the
    accumulation order is immaterial.
    """
    factors = [
        s.energy_series if isinstance(s, StateSeries) else s for s in series_list
    ]
    if not factors:
        raise EmptyList("reconstruct needs at least one energy series")
    order = factors[0].order
    for s in factors:
        if s.order != order:
            raise OrderMismatch(f"series orders differ: {order} vs {s.order}")

    # ascending powers of W; starts as the constant polynomial 1
    poly = [TruncatedSeries.constant(1.0, order)]
    zero = TruncatedSeries.zero(order)
    for s in factors:
        shifted = [zero] + poly                      # W * poly
        scaled = [c * s for c in poly] + [zero]      # E_n * poly
        poly = [a - b for a, b in zip(shifted, scaled)]

    n = len(factors)
    # p_j multiplies W^(N-j); drop the implicit leading 1
    p = tuple(poly[n - j] for j in range(1, n + 1))
    return SeriesPolynomial(degree=n, order=order, coefficients=p)


def eigenvalues_at(poly: SeriesPolynomial, lam: complex) -> list[complex]:
    """All N roots in W at one coupling value, in canonical order."""
    ascending = [poly.coefficients[poly.degree - 1 - i].evaluate(lam)
                 for i in range(poly.degree)]
    ascending.append(1.0 + 0.0j)
    result = all_roots(ascending)
    if not result.converged:
        raise RootFindingFailure(
            f"root iteration did not converge at lambda={lam!r} "
            f"(max residual {result.max_residual:.3e})",
            roots=result.roots,
            max_residual=result.max_residual,
        )
    return sort_roots(result.roots)

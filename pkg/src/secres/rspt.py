"""Rayleigh-Schrodinger eigenvalue series to arbitrary order.

For a nondegenerate unperturbed state n of H0 + lambda*V the expansion uses
intermediate normalization: the wavefunction correction vectors x^(k) keep a
unit component on state n at order zero and a vanishing one at every higher
order.  With e_0 = h0[n] the recursion is

    e_k      = (V x^(k-1))_n
    x^(k)_m  = [ (V x^(k-1))_m - sum_{j=1}^{k-1} e_j x^(k-j)_m ] / (e_0 - h0[m])

for m != n, and x^(k)_n = 0 for k >= 1.  The recursion always runs over the
full basis regardless of the model-space choice, because eigenvectors mix
model-space and complement-space states.

Near-degenerate unperturbed energies are deliberately NOT special-cased:
series with poor convergence are exactly the input the downstream secular
resummation is built to handle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange
from .model import MatrixModel, interaction_matrix
from .series import TruncatedSeries


@dataclass(frozen=True)
class StateSeries:
    """Energy expansion anchored at one basis state (1-based index)."""

    state_index: int
    energy_series: TruncatedSeries


def perturbation_series(
    model: MatrixModel, state_index: int, order: int
) -> StateSeries:
    """Order-K eigenvalue expansion for one unperturbed state.

    The model must already be validated (distinct diagonal energies).
    """
    if not (1 <= state_index <= model.dimension):
        raise IndexOutOfRange(
            f"state_index {state_index} outside 1..{model.dimension}"
        )
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")

    n = state_index - 1
    h0 = np.asarray(model.h0_diagonal)
    v = interaction_matrix(model)

    energies = np.zeros(order + 1)
    energies[0] = h0[n]

    # denominators e_0 - h0[m]; the n-th slot is never used (x^(k)_n = 0)
    denom = h0[n] - h0
    denom[n] = 1.0

    corrections = np.zeros((order + 1, model.dimension))
    corrections[0, n] = 1.0
    for k in range(1, order + 1):
        coupled = v @ corrections[k - 1]
        energies[k] = coupled[n]
        for j in range(1, k):
            coupled -= energies[j] * corrections[k - j]
        x_k = coupled / denom
        x_k[n] = 0.0
        corrections[k] = x_k

    return StateSeries(state_index, TruncatedSeries(order, tuple(energies)))


def p_space_series(model: MatrixModel, order: int) -> list[StateSeries]:
    """One energy series per model-space state, in model-space order."""
    return [perturbation_series(model, n, order) for n in model.p_space]

"""Discriminants in the coupling ring and exceptional-point location.

For a monic polynomial p of degree d in the energy variable, the
discriminant is (-1)^(d(d-1)/2) times the resultant of p and dp/dE,
computed as the determinant of the Sylvester matrix whose entries are
lambda polynomials.  Roots of the discriminant are couplings where two
eigenvalues coalesce; the one closest to the origin bounds the convergence
of the underlying perturbation series.

The discriminant of an order-K reconstruction is deliberately NOT
re-truncated at lambda^K: its small roots at full length are what converge
to the true coalescence points as K grows.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence, Union

from .charpoly import CharPoly, LambdaPolynomial
from .errors import DegreeTooSmall, EmptyList, RootFindingFailure
from .roots import all_roots
from .secular import SeriesPolynomial

EXACT_SOURCE = "exact"
# relative tolerance for grouping symmetry partners (+-lambda, conjugates)
MODULUS_TIE_TOL = 1e-12
POLISH_MAX_STEPS = 50
POLISH_STEP_TOL = 1e-15


def reconstruction_source(order: int) -> str:
    return f"order-{order}"


@dataclass(frozen=True)
class ExceptionalPointEstimate:
    """A coupling value where two eigenvalues coalesce.

    source is "exact" for the true characteristic polynomial or "order-K"
    for an order-K reconstruction; residual is |discriminant(lambda_value)|
    after polishing; multiplicity counts the symmetry partners sharing this
    modulus.
    """

    lambda_value: complex
    modulus: float
    source: str
    residual: float
    multiplicity: int = 1


def _promote(series) -> LambdaPolynomial:
    return LambdaPolynomial(tuple(series.coefficients))


def _det(matrix: list[list[LambdaPolynomial]]) -> LambdaPolynomial:
    """Cofactor determinant over the lambda-polynomial ring."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = LambdaPolynomial.zero()
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * _det(minor)
        total = total + (term.scale(-1.0) if col % 2 else term)
    return total


def discriminant(poly: Union[CharPoly, SeriesPolynomial]) -> LambdaPolynomial:
    """Discriminant with respect to the energy variable, as a lambda polynomial."""
    degree = poly.degree
    if degree < 2:
        raise DegreeTooSmall(
            f"discriminant needs energy degree >= 2, got {degree}"
        )
    if isinstance(poly, SeriesPolynomial):
        p = [_promote(s) for s in poly.coefficients]
        degree_cap = degree * (degree - 1) * max(poly.order, 1)
    else:
        p = list(poly.coefficients)
        degree_cap = degree * (degree - 1) * max(
            max(q.degree for q in p), 1
        )

    # descending coefficient rows of p (monic) and dp/dE
    a = [LambdaPolynomial.constant(1.0)] + p
    b = [a[i].scale(float(degree - i)) for i in range(degree)]

    size = 2 * degree - 1
    zero = LambdaPolynomial.zero()
    sylvester = []
    for shift in range(degree - 1):
        sylvester.append([zero] * shift + a + [zero] * (degree - 2 - shift))
    for shift in range(degree):
        sylvester.append([zero] * shift + b + [zero] * (degree - 1 - shift))
    assert all(len(row) == size for row in sylvester)

    resultant = _det(sylvester)
    sign = -1.0 if (degree * (degree - 1) // 2) % 2 else 1.0
    disc = resultant.scale(sign)
    if disc.degree > degree_cap:
        raise ValueError(
            f"discriminant degree {disc.degree} exceeds cap {degree_cap}"
        )
    return disc


def _polish_root(disc: LambdaPolynomial, root: complex) -> complex:
    """Newton refinement on the discriminant; keeps the start on failure."""
    derivative = disc.derivative()
    best = root
    best_residual = abs(disc.evaluate(root))
    z = root
    for _ in range(POLISH_MAX_STEPS):
        dp = derivative.evaluate(z)
        if dp == 0:
            break
        step = disc.evaluate(z) / dp
        z = z - step
        residual = abs(disc.evaluate(z))
        if residual < best_residual:
            best, best_residual = z, residual
        if abs(step) < POLISH_STEP_TOL * (1.0 + abs(z)):
            break
    return best


def exceptional_points(
    disc: LambdaPolynomial, source: str
) -> list[ExceptionalPointEstimate]:
    """All coalescence couplings from a discriminant polynomial.

    Roots are polished by Newton iteration, grouped into modulus classes
    (symmetry partners), and returned sorted by ascending modulus with ties
    broken by ascending principal argument.
    """
    if disc.degree < 1:
        raise DegreeTooSmall(
            f"discriminant must have lambda degree >= 1, got {disc.degree}"
        )
    result = all_roots(disc.coefficients)
    if not result.converged:
        raise RootFindingFailure(
            f"discriminant root iteration did not converge "
            f"(max residual {result.max_residual:.3e})",
            roots=result.roots,
            max_residual=result.max_residual,
        )
    polished = [_polish_root(disc, z) for z in result.roots]
    polished.sort(key=lambda z: (abs(z), cmath.phase(z)))

    # group symmetry partners by modulus
    classes: list[list[complex]] = []
    for z in polished:
        if classes and abs(abs(z) - abs(classes[-1][0])) <= MODULUS_TIE_TOL * max(
            1.0, abs(classes[-1][0])
        ):
            classes[-1].append(z)
        else:
            classes.append([z])

    points = []
    for group in classes:
        for z in sorted(group, key=cmath.phase):
            points.append(
                ExceptionalPointEstimate(
                    lambda_value=z,
                    modulus=abs(z),
                    source=source,
                    residual=abs(disc.evaluate(z)),
                    multiplicity=len(group),
                )
            )
    return points


def nearest_exceptional_point(
    points: Sequence[ExceptionalPointEstimate],
) -> ExceptionalPointEstimate:
    """Minimum-modulus estimate, represented canonically.

    Among symmetry partners sharing the smallest modulus (within the tie
    tolerance) the representative is the one with principal argument in
    [0, pi), i.e. the upper-half-plane or positive-real member.
    """
    if not points:
        raise EmptyList("no exceptional points to choose from")
    smallest = min(p.modulus for p in points)
    group = [
        p
        for p in points
        if p.modulus - smallest <= MODULUS_TIE_TOL * max(1.0, smallest)
    ]
    canonical = [p for p in group if 0.0 <= cmath.phase(p.lambda_value) < cmath.pi]
    pool = canonical if canonical else group
    return min(pool, key=lambda p: cmath.phase(p.lambda_value))

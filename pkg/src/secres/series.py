"""Power series in the coupling truncated at a fixed order K.

Every arithmetic operation keeps the truncation order: multiplication is a
Cauchy product with all terms of degree > K discarded at the moment they
would be formed, never post-hoc on an assembled polynomial.  Coefficients
are double-precision reals; complex numbers appear only at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite
from typing import Union

from .errors import OrderMismatch


def format_coefficients(coefficients, var: str = "x") -> str:
    """Render ``c0 + c1*x + c2*x^2 + ...`` with 17 significant digits.

    17 digits round-trip exactly to the underlying doubles.
    """
    parts = []
    for power, c in enumerate(coefficients):
        digits = f"{float(c) + 0.0:.17g}"  # +0.0 folds -0.0 into 0
        if power == 0:
            parts.append(digits)
        elif power == 1:
            parts.append(f"{digits}*{var}")
        else:
            parts.append(f"{digits}*{var}^{power}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TruncatedSeries:
    """Real coefficients c_0..c_K of a series truncated at order K."""

    order: int
    coefficients: tuple[float, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        if len(self.coefficients) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coefficients)}"
            )
        coeffs = tuple(float(c) for c in self.coefficients)
        for c in coeffs:
            if not isfinite(c):
                raise ValueError(f"non-finite coefficient {c!r}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0.0,) * (order + 1))

    @classmethod
    def constant(cls, value: float, order: int) -> "TruncatedSeries":
        return cls(order, (float(value),) + (0.0,) * order)

    @classmethod
    def monomial(cls, power: int, coefficient: float, order: int) -> "TruncatedSeries":
        if not (0 <= power <= order):
            raise ValueError(f"power {power} outside 0..{order}")
        coeffs = [0.0] * (order + 1)
        coeffs[power] = float(coefficient)
        return cls(order, tuple(coeffs))

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatch(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coefficients))

    def __mul__(self, other: Union["TruncatedSeries", float]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self.mul_truncated(other)
        return self.scale(float(other))

    __rmul__ = __mul__

    def scale(self, factor: float) -> "TruncatedSeries":
        return TruncatedSeries(
            self.order, tuple(factor * c for c in self.coefficients)
        )

    def mul_truncated(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product with every term of degree > K removed."""
        self._check_order(other)
        k = self.order
        out = [0.0] * (k + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0.0:
                continue
            for j in range(k + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return TruncatedSeries(k, tuple(out))

    def evaluate(self, lam: complex) -> complex:
        """Horner evaluation of the partial sum at a (complex) coupling."""
        acc = 0.0 + 0.0j if isinstance(lam, complex) else 0.0
        for c in reversed(self.coefficients):
            acc = acc * lam + c
        return acc

    def is_even(self, tol: float) -> bool:
        """True iff every odd-power coefficient has magnitude <= tol."""
        if tol <= 0:
            raise ValueError(f"tol must be positive, got {tol}")
        return all(abs(c) <= tol for c in self.coefficients[1::2])

    def __str__(self) -> str:
        return format_coefficients(self.coefficients)

"""Truncated formal power series and dense polynomials, exact coefficients.

Everything here is plain Fraction arithmetic; no floating point.  A
RationalSeries carries an explicit truncation order N and is exact modulo
z^(N+1); binary operations truncate to the smaller order so precision loss
is always visible in the result's order, never silent.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact number, got {type(x).__name__}")


class RationalSeries:
    """A power series known exactly through z^order.

    coefficients[k] is the coefficient of z^k, for k = 0..order.
    """

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients: Sequence, order: int | None = None):
        coeffs = [_frac(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coefficients = tuple(coeffs[: order + 1])

    @staticmethod
    def zero(order: int) -> "RationalSeries":
        return RationalSeries([], order)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient z^{k} beyond truncation order {self.order}")
        return self.coefficients[k]

    def truncate(self, order: int) -> "RationalSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series truncated at {self.order} to {order}")
        return RationalSeries(self.coefficients[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalSeries)
            and self.order == other.order
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coefficients))

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        order = min(self.order, other.order)
        return RationalSeries(
            [self.coefficients[k] + other.coefficients[k] for k in range(order + 1)],
            order,
        )

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        order = min(self.order, other.order)
        return RationalSeries(
            [self.coefficients[k] - other.coefficients[k] for k in range(order + 1)],
            order,
        )

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coefficients[j]
                if b:
                    out[i + j] += a * b
        return RationalSeries(out, order)

    def scale(self, factor) -> "RationalSeries":
        f = _frac(factor)
        return RationalSeries([f * c for c in self.coefficients], self.order)

    def shift(self, constant) -> "RationalSeries":
        """Add a constant to the z^0 coefficient."""
        coeffs = list(self.coefficients)
        coeffs[0] += _frac(constant)
        return RationalSeries(coeffs, self.order)

    def compose(self, inner: "RationalSeries") -> "RationalSeries":
        """self(inner(z)), truncated; inner must have zero constant term."""
        if inner.coefficients[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        order = min(self.order, inner.order)
        inner_t = inner.truncate(order)
        # Horner: (((c_N * g + c_{N-1}) * g + ...) * g + c_0)
        result = RationalSeries([self.coefficients[order]], order)
        for k in range(order - 1, -1, -1):
            result = (result * inner_t).shift(self.coefficients[k])
        return result

    def __repr__(self) -> str:
        return f"RationalSeries({[str(c) for c in self.coefficients]!r})"


class TPolynomial:
    """Dense polynomial in a formal parameter t with exact coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence = ()):
        coeffs = [_frac(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @staticmethod
    def zero() -> "TPolynomial":
        return TPolynomial([])

    @staticmethod
    def variable() -> "TPolynomial":
        return TPolynomial([0, 1])

    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def evaluate(self, point) -> Fraction:
        x = _frac(point)
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return TPolynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(size)]
        )

    def __sub__(self, other: "TPolynomial") -> "TPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return TPolynomial(
            [self.coefficient(k) - other.coefficient(k) for k in range(size)]
        )

    def __mul__(self, other: "TPolynomial") -> "TPolynomial":
        if not self.coefficients or not other.coefficients:
            return TPolynomial([])
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    out[i + j] += a * b
        return TPolynomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, TPolynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"TPolynomial({[str(c) for c in self.coefficients]!r})"

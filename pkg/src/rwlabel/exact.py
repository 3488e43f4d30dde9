"""Exact integer and rational kernels.

Python ints are already arbitrary precision and :class:`fractions.Fraction`
is always reduced with a positive denominator, so they serve directly as the
big-integer and big-rational types.  This module adds the combinatorial
functions on top and a small truncated power series class.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import IntegralityError, ParameterError

__all__ = [
    "factorial",
    "binomial",
    "multinomial",
    "catalan",
    "binomial_rational",
    "as_integer",
    "format_int",
    "format_rational",
    "parse_rational",
    "RationalSeries",
]


def _check_nonneg(name: str, value: int) -> None:
    if value < 0:
        raise ParameterError(f"{name} must be nonnegative, got {value}")


def factorial(n: int) -> int:
    _check_nonneg("n", n)
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, vanishing outside 0 <= k <= n."""
    _check_nonneg("n", n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(total: int, parts: Sequence[int]) -> int:
    """total! / prod(p! for p in parts); the parts must sum to ``total``."""
    _check_nonneg("total", total)
    for p in parts:
        _check_nonneg("part", p)
    if sum(parts) != total:
        raise ParameterError(
            f"multinomial parts sum to {sum(parts)}, expected {total}")
    result = 1
    remaining = total
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    return result


def catalan(n: int) -> int:
    _check_nonneg("n", n)
    return math.comb(2 * n, n) // (n + 1)


def binomial_rational(x, r: int) -> Fraction:
    """Generalized binomial x(x-1)...(x-r+1)/r! for rational ``x``.

    The falling-factorial product is used for every x, including negative
    integers, so the result is a polynomial in x of degree r.
    """
    _check_nonneg("r", r)
    x = Fraction(x)
    num = Fraction(1)
    for i in range(r):
        num *= x - i
    return num / math.factorial(r)


def as_integer(value, what: str = "value") -> int:
    """Return ``value`` as an int, raising IntegralityError if it is not one."""
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {value}")
    return value.numerator


def format_int(value: int) -> str:
    return str(int(value))


def format_rational(value) -> str:
    """Serialize as "p/q", or plain "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class RationalSeries:
    """Power series truncated after the x**order term, exact coefficients.

    Instances are immutable.  Binary operations require equal orders; use
    :meth:`truncate` to bring operands to a common order first.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ParameterError("series order must be nonnegative")
        cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls([], order)

    @classmethod
    def from_egf(cls, terms: Sequence[int], order: int) -> "RationalSeries":
        """Series with coefficients terms[i] / i!."""
        return cls((Fraction(terms[i], math.factorial(i))
                    for i in range(order + 1)), order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(format_rational(c) for c in self._coeffs)
        return f"RationalSeries([{terms}], order={self.order})"

    def _check_order(self, other: "RationalSeries") -> None:
        if self.order != other.order:
            raise ParameterError(
                f"series order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        self._check_order(other)
        return RationalSeries(
            (a + b for a, b in zip(self._coeffs, other._coeffs)), self.order)

    def __neg__(self) -> "RationalSeries":
        return self.scale(-1)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + (-other)

    def scale(self, c) -> "RationalSeries":
        c = Fraction(c)
        return RationalSeries((c * a for a in self._coeffs), self.order)

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            return self.scale(other)
        self._check_order(other)
        a, b = self._coeffs, other._coeffs
        out = []
        for k in range(self.order + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
        return RationalSeries(out, self.order)

    __rmul__ = __mul__

    def derivative(self) -> "RationalSeries":
        """d/dx; the result is known only up to order - 1."""
        if self.order == 0:
            raise ParameterError("cannot differentiate an order-0 series")
        return RationalSeries(
            (i * self._coeffs[i] for i in range(1, self.order + 1)),
            self.order - 1)

    def mul_x(self) -> "RationalSeries":
        """x * f at the same order (the top coefficient falls off)."""
        return RationalSeries((Fraction(0),) + self._coeffs[:-1], self.order)

    def truncate(self, order: int) -> "RationalSeries":
        if order > self.order:
            raise ParameterError(
                f"cannot raise truncation order from {self.order} to {order}")
        return RationalSeries(self._coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

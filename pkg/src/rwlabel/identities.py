"""Exact checks of the combinatorial identities behind the counts.

Each check returns an :class:`IdentityCheck` rather than asserting, so a
caller can display a failing claim next to the passing ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import ParameterError
from .exact import (RationalSeries, as_integer, binomial, binomial_rational,
                    factorial)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    params: Mapping[str, object] = field(default_factory=dict)
    lhs: Fraction = Fraction(0)
    rhs: Fraction = Fraction(0)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def hockey_stick_real(x, r: int, n: int) -> IdentityCheck:
    """sum_{k=0}^n C(k+x, r) against C(n+x+1, r+1) - C(x, r+1), x rational."""
    if r < 0 or n < 0:
        raise ParameterError("r and n must be nonnegative")
    x = Fraction(x)
    lhs = sum((binomial_rational(k + x, r) for k in range(n + 1)), Fraction(0))
    rhs = binomial_rational(n + x + 1, r + 1) - binomial_rational(x, r + 1)
    return IdentityCheck("hockey_stick_real", {"x": x, "r": r, "n": n}, lhs, rhs)


def kka_identity(m: int, n: int) -> IdentityCheck:
    """2^n sum_k C(k+m, k)/2^k == sum_k C(m+1+n, m+1+k), both k = 0..n."""
    if m < 0 or n < 0:
        raise ParameterError("m and n must be nonnegative")
    lhs = sum(binomial(k + m, k) * 2 ** (n - k) for k in range(n + 1))
    rhs = sum(binomial(m + 1 + n, m + 1 + k) for k in range(n + 1))
    return IdentityCheck("kka", {"m": m, "n": n}, Fraction(lhs), Fraction(rhs))


def a087547_lhs(n: int) -> int:
    """(n-1)! sum_{k<n} C(2n-1, 2k) / C(n-1, k), certified integral."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    s = sum(Fraction(binomial(2 * n - 1, 2 * k), binomial(n - 1, k)) for k in range(n))
    return as_integer(factorial(n - 1) * s, f"A087547 lhs at n={n}")


def a087547_rhs(n: int) -> int:
    """((n-1)!/2) sum_{k<n} C(2n, 2k+1) / C(n-1, k), certified integral."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    s = sum(Fraction(binomial(2 * n, 2 * k + 1), binomial(n - 1, k)) for k in range(n))
    return as_integer(Fraction(factorial(n - 1), 2) * s, f"A087547 rhs at n={n}")


def a087547_pair(n: int) -> IdentityCheck:
    return IdentityCheck("a087547", {"n": n},
                         Fraction(a087547_lhs(n)), Fraction(a087547_rhs(n)))


def a233449_terms(count: int) -> list[int]:
    """First ``count`` terms of a_n = sum_{k<=n} k! 2^(n-k)."""
    if count < 1:
        raise ParameterError(f"count must be positive, got {count}")
    terms = []
    a = 0
    for n in range(count):
        a = 2 * a + factorial(n)
        terms.append(a)
    return terms


def a233449_recurrence_holds(count: int) -> bool:
    """a_n == (n+2) a_{n-1} - 2n a_{n-2} for 2 <= n < count.

    The recurrence comes from reading off the x^n coefficient of the ODE
    (x-1) f'' + (4-2x) f' - 4 f = 0 with f = sum a_n x^n / n!.
    """
    a = a233449_terms(count)
    return all(a[n] == (n + 2) * a[n - 1] - 2 * n * a[n - 2] for n in range(2, count))


def a233449_egf(order: int) -> RationalSeries:
    return RationalSeries.from_egf(a233449_terms(order + 1), order)


def ode_residual(order: int) -> RationalSeries:
    """(x-1) f'' + 2(2-x) f' - 4 f for the truncated egf f, to order - 2."""
    if order < 3:
        raise ParameterError(f"order must be at least 3, got {order}")
    f = a233449_egf(order)
    out = order - 2
    d1 = f.derivative()
    d2 = d1.derivative()
    d1 = d1.truncate(out)
    f = f.truncate(out)
    return (d2.mul_x() - d2) + d1.scale(4) - d1.mul_x().scale(2) - f.scale(4)


def ode_initial_conditions() -> tuple[Fraction, Fraction]:
    """(f(0), f'(0)) of the egf."""
    f = a233449_egf(1)
    return f[0], f.derivative()[0]


def eulerian_claim_report(n: int) -> IdentityCheck:
    """sum_{k<n} (n-k)! 2^k against the Eulerian number <n, 1> = 2^n - n - 1.

    Reported, never asserted: the two differ for every n >= 1.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    lhs = sum(factorial(n - k) * 2 ** k for k in range(n))
    rhs = 2 ** n - n - 1
    return IdentityCheck("eulerian", {"n": n}, Fraction(lhs), Fraction(rhs))

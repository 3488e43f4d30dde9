"""Closed-form labeling counts for the graph families.

Everything is evaluated in exact integers.  Where an expression passes
through a rational intermediate (the triangular snake and
friendship closed forms) the final value is certified integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ParameterError
from .exact import as_integer, binomial, catalan, factorial, multinomial
from .graphs import Family, FamilySpec, make_family
from .oracle import DisruptedProfile, count_labelings_dp


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def cone_count(profile: DisruptedProfile) -> int:
    """Labelings of the cone over G from the disrupted profile of G."""
    values = profile.values if isinstance(profile, DisruptedProfile) else tuple(profile)
    n = len(values) - 1
    return sum(factorial(n - k) * values[k] for k in range(n + 1))


def path_disrupted(n: int, k: int) -> int:
    _require(n >= 1, f"path requires n >= 1, got n={n}")
    _require(0 <= k <= n, f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        return 1
    return (n - k + 1) * 2 ** (k - 1)


def cycle_disrupted(n: int, k: int) -> int:
    _require(n >= 3, f"cycle requires n >= 3, got n={n}")
    _require(0 <= k <= n, f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        return 1
    if k == n:
        return n * 2 ** (n - 2)
    return n * 2 ** (k - 1)


def path_count(n: int) -> int:
    return path_disrupted(n, n)


def cycle_count(n: int) -> int:
    return cycle_disrupted(n, n)


def complete_count(n: int) -> int:
    _require(n >= 1, f"complete graph requires n >= 1, got n={n}")
    return factorial(n)


def wheel_count(n: int) -> int:
    """Labelings of W_{n+1}, the cone over C_n."""
    _require(n >= 3, f"wheel requires n >= 3, got n={n}")
    # 2^{n-1} * sum k!/2^k, with the powers of two cleared
    tail = sum(factorial(k) * 2 ** (n - 1 - k) for k in range(n))
    return n * (factorial(n - 1) - 2 ** (n - 2) + tail)


def fan_count(n: int) -> int:
    """Labelings of F_{n+1}, the cone over P_n."""
    _require(n >= 1, f"fan requires n >= 1, got n={n}")
    return factorial(n) + sum(factorial(n - k) * 2 ** k for k in range(n))


def barbell_count(m: int, n: int) -> int:
    _require(m >= 1 and n >= 1, f"barbell requires m, n >= 1, got m={m}, n={n}")
    return (factorial(m - 1) * factorial(n - 1)
            * (binomial(m + n, n + 1) + binomial(m + n, m + 1)))


def barbell_equal_count(n: int) -> int:
    _require(n >= 1, f"barbell requires n >= 1, got n={n}")
    return 2 * factorial(n - 1) * factorial(n) * catalan(n)


def _bridged_path_bracket(m: int, n: int) -> int:
    return binomial(m + n, n + 1) + sum(binomial(m + n - 1, k + m) for k in range(n))


def lollipop_count(m: int, n: int) -> int:
    """K_m bridged to P_n."""
    _require(m >= 1 and n >= 0, f"lollipop requires m >= 1, n >= 0, got m={m}, n={n}")
    return factorial(m - 1) * _bridged_path_bracket(m, n)


def tadpole_count(m: int, n: int) -> int:
    """C_m bridged to P_n."""
    _require(m >= 3 and n >= 0, f"tadpole requires m >= 3, n >= 0, got m={m}, n={n}")
    return 2 ** (m - 2) * _bridged_path_bracket(m, n)


def one_point_union_count(n: int, m: int) -> int:
    """Labelings of m copies of C_n sharing one vertex."""
    _require(n >= 3 and m >= 1, f"one-point union requires n >= 3, m >= 1, got n={n}, m={m}")
    spokes = multinomial((m - 1) * (n - 1), [n - 1] * (m - 1))
    size = m * (n - 1)
    return (2 ** (n - 2)) ** m * spokes * (binomial(size, n - 1) + m * binomial(size, n - 2))


def friendship_count(m: int) -> int:
    """Friendship graph F_m (m triangles sharing a vertex), direct closed form."""
    _require(m >= 1, f"friendship requires m >= 1, got m={m}")
    return as_integer(Fraction((4 * m - 1) * factorial(2 * m), 2 * m - 1),
                      f"friendship count for m={m}")


@lru_cache(maxsize=None)
def snake_b(m: int, n: int) -> int:
    """Labelings of S_{m,n} that start at an end of the spine."""
    _require(m >= 3 and n >= 0, f"snake requires m >= 3, n >= 0, got m={m}, n={n}")
    if n == 0:
        return 1
    if n == 1:
        return 2 ** (m - 2)
    t = m - 1
    factor = 1 + sum(binomial(n * t + 1 - j, m - j) * 2 ** (t - j) for j in range(2, t + 1))
    return snake_b(m, n - 1) * factor


def snake_count(m: int, n: int) -> int:
    _require(m >= 3 and n >= 0, f"snake requires m >= 3, n >= 0, got m={m}, n={n}")
    t = m - 1
    b = [snake_b(m, i) for i in range(n + 1)]

    # walk starts inside a cycle; the nearer spine vertex gets label j
    inner_open = 0
    inner_closed = 0
    for k in range(n):
        ends = b[k] * b[n - 1 - k]
        for j in range(2, t + 1):
            for r in range(t - j):
                for s in range(k * t + 1):
                    inner_open += (binomial(r + s, s)
                                   * multinomial(n * t - s - j - r,
                                                 [k * t - s, t - j - r, (n - 1 - k) * t])
                                   * 2 ** (t - r - 2) * ends)
            inner_closed += 2 ** (j - 1) * ends * sum(
                binomial(t - j + s, s) * binomial((n - 1) * t - s, k * t - s)
                for s in range(k * t + 1))

    # walk starts on the spine
    on_spine = sum(binomial(n * t, k * t) * b[k] * b[n - k] for k in range(n + 1))
    return inner_open + inner_closed + on_spine


def snake3_count(n: int) -> int:
    """Triangular snake S_{3,n}, direct closed form."""
    _require(n >= 1, f"triangular snake requires n >= 1, got n={n}")
    first = sum(Fraction(binomial(2 * n - 1, 2 * k), binomial(n - 1, k)) for k in range(n))
    second = sum(Fraction(binomial(2 * n, 2 * k), binomial(n, k)) for k in range(n + 1))
    value = 2 ** n * factorial(n - 1) * (first + n * second)
    return as_integer(value, f"triangular snake count for n={n}")


def family_count(spec: FamilySpec) -> int:
    """Closed-form count for any family spec."""
    f, m, n = spec.family, spec.m, spec.n
    if f is Family.PATH:
        return path_count(n)
    if f is Family.CYCLE:
        return cycle_count(n)
    if f is Family.COMPLETE:
        return complete_count(n)
    if f is Family.WHEEL:
        return wheel_count(n)
    if f is Family.FAN:
        return fan_count(n)
    if f is Family.BARBELL:
        return barbell_count(m, n)
    if f is Family.LOLLIPOP:
        return lollipop_count(m, n)
    if f is Family.TADPOLE:
        return tadpole_count(m, n)
    if f is Family.ONE_POINT_UNION:
        return one_point_union_count(n, m)
    return snake_count(m, n)


@dataclass(frozen=True)
class CountReport:
    spec: FamilySpec
    formula_value: int
    oracle_value: int | None = None

    @property
    def agree(self) -> bool | None:
        if self.oracle_value is None:
            return None
        return self.formula_value == self.oracle_value


def count_report(spec: FamilySpec, with_oracle: bool = False, limit: int | None = None) -> CountReport:
    value = family_count(spec)
    oracle_value = None
    if with_oracle:
        g = make_family(spec)
        oracle_value = count_labelings_dp(g) if limit is None else count_labelings_dp(g, limit)
    return CountReport(spec, value, oracle_value)

"""Formula-versus-oracle sweeps over the graph families.

Every check yields a :class:`CheckResult`; nothing here raises on a
mismatch, callers decide what a failure means.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from . import formulas as fm
from .graphs import Family, FamilySpec, connected_graphs, make_cone, make_family
from .oracle import count_labelings_dp, count_labelings_from, disrupted_profile_dp


@dataclass(frozen=True)
class CheckResult:
    scope: str
    check: str
    point: str
    expected: int
    got: int

    @property
    def ok(self) -> bool:
        return self.expected == self.got


# Family points with 13 or 14 vertices, beyond the default sweep.
SPOT_CHECKS = (
    FamilySpec(Family.TADPOLE, m=8, n=5),
    FamilySpec(Family.LOLLIPOP, m=8, n=5),
    FamilySpec(Family.BARBELL, m=7, n=7),
    FamilySpec(Family.WHEEL, n=12),
    FamilySpec(Family.FAN, n=13),
    FamilySpec(Family.ONE_POINT_UNION, m=3, n=5),
    FamilySpec(Family.ONE_POINT_UNION, m=6, n=3),
    FamilySpec(Family.SNAKE, m=3, n=6),
    FamilySpec(Family.SNAKE, m=5, n=3),
    FamilySpec(Family.CYCLE, n=14),
)


def family_points(family: Family, max_vertices: int) -> Iterator[FamilySpec]:
    """Every in-domain spec of ``family`` with at most max_vertices vertices."""
    if family in (Family.PATH, Family.CYCLE, Family.COMPLETE, Family.WHEEL, Family.FAN):
        for n in range(1, max_vertices + 1):
            try:
                spec = FamilySpec(family, n=n)
            except ValueError:
                continue
            if spec.vertex_count <= max_vertices:
                yield spec
        return
    for m, n in itertools.product(range(max_vertices + 1), repeat=2):
        try:
            spec = FamilySpec(family, m=m, n=n)
        except ValueError:
            continue
        if spec.vertex_count <= max_vertices:
            yield spec


def _oracle(spec: FamilySpec) -> int:
    return count_labelings_dp(make_family(spec))


def _family_checks(scope: str, family: Family, max_vertices: int,
                   spots: bool) -> Iterator[CheckResult]:
    specs = list(family_points(family, max_vertices))
    if spots:
        specs += [s for s in SPOT_CHECKS if s.family is family and s.vertex_count > max_vertices]
    for spec in specs:
        yield CheckResult(scope, "formula == oracle", spec.label(),
                          _oracle(spec), fm.family_count(spec))


def _scope_theorem1(max_vertices, spots):
    for n in range(1, min(6, max_vertices - 1) + 1):
        for g in connected_graphs(n):
            edges = ",".join(f"{u}-{v}" for u, v in g.edges())
            yield CheckResult("theorem1", "cone_count == oracle(cone)", f"n={n} [{edges}]",
                              count_labelings_dp(make_cone(g)), fm.cone_count(disrupted_profile_dp(g)))


def _scope_wheel(max_vertices, spots):
    yield from _family_checks("wheel", Family.WHEEL, max_vertices, spots)
    yield from _family_checks("wheel", Family.CYCLE, max_vertices, spots)
    for n in range(3, max_vertices + 1):
        profile = disrupted_profile_dp(make_family(FamilySpec(Family.CYCLE, n=n)))
        for k in range(1, n + 1):
            yield CheckResult("wheel", "cycle_disrupted == profile", f"n={n}, k={k}",
                              profile[k], fm.cycle_disrupted(n, k))
        if n + 1 <= max_vertices:
            yield CheckResult("wheel", "wheel_count == cone_count(profile C_n)", f"n={n}",
                              fm.cone_count(profile), fm.wheel_count(n))


def _scope_fan(max_vertices, spots):
    yield from _family_checks("fan", Family.FAN, max_vertices, spots)
    yield from _family_checks("fan", Family.PATH, max_vertices, spots)
    for n in range(1, max_vertices + 1):
        profile = disrupted_profile_dp(make_family(FamilySpec(Family.PATH, n=n)))
        for k in range(1, n + 1):
            yield CheckResult("fan", "path_disrupted == profile", f"n={n}, k={k}",
                              profile[k], fm.path_disrupted(n, k))
        if n + 1 <= max_vertices:
            yield CheckResult("fan", "fan_count == cone_count(profile P_n)", f"n={n}",
                              fm.cone_count(profile), fm.fan_count(n))


def _scope_theorem5(max_vertices, spots):
    yield from _family_checks("theorem5", Family.BARBELL, max_vertices, spots)
    for n in range(1, max_vertices // 2 + 1):
        yield CheckResult("theorem5", "catalan form == barbell(n, n)", f"n={n}",
                          fm.barbell_count(n, n), fm.barbell_equal_count(n))


def _scope_theorem6(max_vertices, spots):
    yield from _family_checks("theorem6", Family.LOLLIPOP, max_vertices, spots)


def _scope_theorem7(max_vertices, spots):
    yield from _family_checks("theorem7", Family.TADPOLE, max_vertices, spots)


def _scope_theorem8(max_vertices, spots):
    yield from _family_checks("theorem8", Family.ONE_POINT_UNION, max_vertices, spots)
    for m in range(1, (max_vertices - 1) // 2 + 1):
        yield CheckResult("theorem8", "friendship form == oracle", f"m={m}",
                          _oracle(FamilySpec(Family.ONE_POINT_UNION, m=m, n=3)),
                          fm.friendship_count(m))


def _scope_theorem9(max_vertices, spots):
    yield from _family_checks("theorem9", Family.SNAKE, max_vertices, spots)
    for spec in family_points(Family.SNAKE, max_vertices):
        g = make_family(spec)
        yield CheckResult("theorem9", "snake_b == oracle from spine end", spec.label(),
                          count_labelings_from(g, g.role("path_end")), fm.snake_b(spec.m, spec.n))
    for n in range(1, (max_vertices - 1) // 2 + 1):
        yield CheckResult("theorem9", "snake3 form == oracle", f"n={n}",
                          _oracle(FamilySpec(Family.SNAKE, m=3, n=n)), fm.snake3_count(n))


def _scope_coincidences(max_vertices, spots):
    for n in range(31):
        yield CheckResult("coincidences", "tadpole(3, n) == lollipop(3, n)", f"n={n}",
                          fm.lollipop_count(3, n), fm.tadpole_count(3, n))
    for m in range(3, 31):
        yield CheckResult("coincidences", "snake(m, 1) == m 2^(m-2)", f"m={m}",
                          m * 2 ** (m - 2), fm.snake_count(m, 1))
    for n in range(3, 31):
        yield CheckResult("coincidences", "one_point_union(n, 1) == n 2^(n-2)", f"n={n}",
                          n * 2 ** (n - 2), fm.one_point_union_count(n, 1))
    for n in range(1, 16):
        yield CheckResult("coincidences", "snake(3, n) == snake3(n)", f"n={n}",
                          fm.snake3_count(n), fm.snake_count(3, n))
    for m in range(1, 31):
        yield CheckResult("coincidences", "friendship(m) == one_point_union(3, m)", f"m={m}",
                          fm.one_point_union_count(3, m), fm.friendship_count(m))
    for n in range(1, 31):
        yield CheckResult("coincidences", "barbell_equal(n) == barbell(n, n)", f"n={n}",
                          fm.barbell_count(n, n), fm.barbell_equal_count(n))
    for m, n in itertools.product(range(1, 31), repeat=2):
        if m < n:
            yield CheckResult("coincidences", "barbell(m, n) == barbell(n, m)", f"m={m}, n={n}",
                              fm.barbell_count(n, m), fm.barbell_count(m, n))
    yield CheckResult("coincidences", "snake(3, 2) == friendship(2)", "",
                      fm.friendship_count(2), fm.snake_count(3, 2))
    yield CheckResult("coincidences", "friendship(2) == 56", "", 56, fm.friendship_count(2))


SCOPES: dict[str, Callable[[int, bool], Iterator[CheckResult]]] = {
    "theorem1": _scope_theorem1,
    "wheel": _scope_wheel,
    "fan": _scope_fan,
    "theorem5": _scope_theorem5,
    "theorem6": _scope_theorem6,
    "theorem7": _scope_theorem7,
    "theorem8": _scope_theorem8,
    "theorem9": _scope_theorem9,
    "coincidences": _scope_coincidences,
}


def run(scope: str = "all", max_vertices: int = 12, spots: bool = False) -> list[CheckResult]:
    """Run one scope (or "all") and return every check in a fixed order."""
    if scope == "all":
        names = list(SCOPES)
    elif scope in SCOPES:
        names = [scope]
    else:
        raise KeyError(scope)
    results = []
    for name in names:
        results.extend(SCOPES[name](max_vertices, spots))
    return results

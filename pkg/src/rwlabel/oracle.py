"""Brute-force and dynamic-programming counts of random walk labelings.

Three independent counters:

* :func:`enumerate_labelings_walk` simulates the walk literally.  A state is
  the labeled prefix together with the walker's position; the walker moves
  to any neighbor and labels it on first arrival.
* :func:`count_labelings_perm` filters all n! permutations, keeping those
  whose every prefix induces a connected subgraph.
* :func:`count_labelings_dp` counts the same orderings by a subset dynamic
  program, which makes graphs with 20+ vertices tractable.

The walk search does not assume that achievable label orders are exactly
the connected-prefix orderings; the test suite checks that the three agree.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParameterError, SizeLimitError
from .graphs import Graph, iter_bits

WALK_LIMIT = 9
PERM_LIMIT = 10
DP_LIMIT = 24


def _check_size(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise SizeLimitError(f"{what} is capped at {limit} vertices, graph has {g.n}")


@dataclass(frozen=True)
class DisruptedProfile:
    """values[k] = number of distinct labelings stopped after k labels."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def n(self) -> int:
        return len(self.values) - 1

    @property
    def total(self) -> int:
        return self.values[-1]

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def walk_prefixes(g: Graph, limit: int = WALK_LIMIT) -> set[tuple[int, ...]]:
    """All label orders (of every length) the walk can produce on ``g``.

    A walk state is (label order, current vertex).  Steps onto labeled
    vertices keep the order fixed, so for each order the reachable current
    vertices are found by a search restricted to the labeled set; each
    unlabeled neighbor of one of them then extends the order.
    """
    _check_size(g, limit, "walk enumeration")
    n = g.n
    adj = g.adj
    prefixes: set[tuple[int, ...]] = set()
    stack = [((v,), 1 << v) for v in range(n)]
    while stack:
        prefix, mask = stack.pop()
        prefixes.add(prefix)
        if len(prefix) == n:
            continue
        here = 1 << prefix[-1]
        frontier = here
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~here
            here |= frontier
        step = 0
        for v in iter_bits(here):
            step |= adj[v]
        for w in iter_bits(step & ~mask):
            stack.append((prefix + (w,), mask | 1 << w))
    return prefixes


def enumerate_labelings_walk(g: Graph, limit: int = WALK_LIMIT) -> set[tuple[int, ...]]:
    """Complete label orders reachable by the walk process."""
    return {p for p in walk_prefixes(g, limit) if len(p) == g.n}


def is_connected_prefix_order(g: Graph, order: Iterable[int]) -> bool:
    labeled = 0
    for i, v in enumerate(order):
        if i and not g.adj[v] & labeled:
            return False
        labeled |= 1 << v
    return True


def count_labelings_perm(g: Graph, limit: int = PERM_LIMIT) -> int:
    """Count permutations of V whose every prefix induces a connected subgraph."""
    _check_size(g, limit, "permutation filter")
    adj = g.adj
    count = 0
    for perm in itertools.permutations(range(g.n)):
        labeled = 1 << perm[0]
        for v in perm[1:]:
            if not adj[v] & labeled:
                break
            labeled |= 1 << v
        else:
            count += 1
    return count


def _layers(g: Graph, starts: Iterable[int]) -> Iterator[dict[int, int]]:
    """Yield {subset mask: number of connected-prefix orderings of it}, by size.

    Only connected subsets appear.  Each ordering of a k-set extends by any
    vertex on its boundary, so counts are pushed forward one layer at a time
    and no connectivity test is ever needed.
    """
    adj = g.adj
    layer = {1 << v: 1 for v in starts}
    reach = {1 << v: adj[v] for v in starts}
    yield layer
    for _ in range(1, g.n):
        nxt: dict[int, int] = defaultdict(int)
        nxt_reach: dict[int, int] = {}
        for subset, count in layer.items():
            nb = reach[subset]
            boundary = nb & ~subset
            while boundary:
                low = boundary & -boundary
                boundary ^= low
                grown = subset | low
                nxt[grown] += count
                if grown not in nxt_reach:
                    nxt_reach[grown] = nb | adj[low.bit_length() - 1]
        layer, reach = nxt, nxt_reach
        yield layer


def count_labelings_dp(g: Graph, limit: int = DP_LIMIT) -> int:
    _check_size(g, limit, "subset DP")
    for layer in _layers(g, range(g.n)):
        pass
    return layer.get(g.full_mask, 0)


def disrupted_profile_dp(g: Graph, limit: int = DP_LIMIT) -> DisruptedProfile:
    """Profile [L_0, ..., L_n] with L_0 = 1 by convention."""
    _check_size(g, limit, "subset DP")
    values = [1] + [sum(layer.values()) for layer in _layers(g, range(g.n))]
    return DisruptedProfile(tuple(values))


def count_labelings_from(g: Graph, v: int, limit: int = DP_LIMIT) -> int:
    """Number of complete labelings that give ``v`` the label 1."""
    _check_size(g, limit, "subset DP")
    if not 0 <= v < g.n:
        raise ParameterError(f"vertex {v} out of range 0..{g.n - 1}")
    for layer in _layers(g, [v]):
        pass
    return layer.get(g.full_mask, 0)

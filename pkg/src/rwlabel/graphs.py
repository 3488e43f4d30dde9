"""Small undirected graphs stored as neighbor bitmasks, and the graph families.

Vertex numbering is fixed per family:

* ``Path(n)``: vertices 0..n-1 left to right.
* ``Cycle(n)``: vertices 0..n-1 around the cycle.
* ``Complete(n)``: vertices 0..n-1.
* ``Wheel(n)``: the cycle on 0..n-1, hub ``n`` (W_{n+1}, the cone over C_n).
* ``Fan(n)``: the path on 0..n-1, hub ``n`` (F_{n+1}, the cone over P_n).
* ``Barbell(m, n)``: K_m on 0..m-1, K_n on m..m+n-1, bridge (m-1, m).
* ``Lollipop(m, n)``: K_m on 0..m-1, path m..m+n-1, bridge (m-1, m).
* ``Tadpole(m, n)``: C_m on 0..m-1, path m..m+n-1, bridge (m-1, m).
* ``OnePointUnion(m, n)``: ``m`` copies of C_n glued at hub 0; copy ``i``
  walks 0, 1+i(n-1), ..., (i+1)(n-1), back to 0.
* ``Snake(m, n)``: spine path 0..n first, then for every spine edge
  (i, i+1) the m-2 inner vertices of its cycle, in order from i to i+1.

Role tags name the structurally distinguished vertices ("hub",
"bridge_left", "bridge_right", "path_end") so callers never hard-code
indices.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DisconnectedGraphError, ParameterError, SizeLimitError

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def component_of(adj: Sequence[int], start: int, within: int) -> int:
    """Flood fill from ``start`` restricted to the vertex mask ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adj[v]
        frontier = reach & within & ~seen
        seen |= frontier
    return seen


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    return component_of(adj, start, mask) == mask


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor set of ``v`` as a bitmask.  Construction
    validates symmetry, absence of loops and connectivity.
    """

    n: int
    adj: tuple
    roles: Mapping[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise SizeLimitError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        adj = tuple(int(a) for a in self.adj)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "roles", dict(self.roles))
        if len(adj) != n:
            raise ParameterError(f"expected {n} neighbor sets, got {len(adj)}")
        full = (1 << n) - 1
        for u, nb in enumerate(adj):
            if nb & ~full:
                raise ParameterError(f"vertex {u} has a neighbor out of range")
            if nb >> u & 1:
                raise ParameterError(f"self-loop at vertex {u}")
            for v in iter_bits(nb):
                if not adj[v] >> u & 1:
                    raise ParameterError(f"asymmetric adjacency between {u} and {v}")
        for role, v in self.roles.items():
            if not 0 <= v < n:
                raise ParameterError(f"role {role!r} points at missing vertex {v}")
        if not is_connected_mask(adj, full):
            raise DisconnectedGraphError("graph is not connected")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def role(self, name: str) -> int:
        return self.roles[name]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        roles = {k: perm[v] for k, v in self.roles.items()}
        return Graph(self.n, tuple(adj), roles)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]],
                   roles: Mapping[str, int] | None = None) -> Graph:
    """Build a graph from an edge list; duplicates are merged."""
    if not 1 <= n <= MAX_VERTICES:
        raise SizeLimitError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"edge ({u}, {v}) has an endpoint out of range 0..{n - 1}")
        if u == v:
            raise ParameterError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), roles or {})


def export_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Inverse of :func:`export_edge_list`."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 1:
        raise ParameterError("edge list must start with the vertex count")
    try:
        n = int(rows[0][0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise ParameterError(f"malformed edge list: {exc}") from None
    return from_edge_list(n, edges)


def make_cone(g: Graph) -> Graph:
    """Add a hub adjacent to every vertex of ``g``; the hub gets index g.n."""
    if g.n >= MAX_VERTICES:
        raise SizeLimitError(f"cone of a {g.n}-vertex graph exceeds {MAX_VERTICES} vertices")
    hub = g.n
    adj = [a | 1 << hub for a in g.adj]
    adj.append(g.full_mask)
    roles = {k: v for k, v in g.roles.items() if k != "hub"}
    roles["hub"] = hub
    return Graph(g.n + 1, tuple(adj), roles)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test; only meant for a handful of vertices."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    g_edges = g.edges()
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in g_edges):
            return True
    return False


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on n vertices (one per edge subset)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if is_connected_mask(adj, (1 << n) - 1):
            yield Graph(n, tuple(adj))


# --- families -------------------------------------------------------------

class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    WHEEL = "wheel"
    FAN = "fan"
    BARBELL = "barbell"
    LOLLIPOP = "lollipop"
    TADPOLE = "tadpole"
    ONE_POINT_UNION = "one-point-union"
    SNAKE = "snake"


TWO_PARAMETER = {Family.BARBELL, Family.LOLLIPOP, Family.TADPOLE,
                 Family.ONE_POINT_UNION, Family.SNAKE}

# (min m, min n); None where the family takes only n.
_DOMAINS = {
    Family.PATH: (None, 1),
    Family.CYCLE: (None, 3),
    Family.COMPLETE: (None, 1),
    Family.WHEEL: (None, 3),
    Family.FAN: (None, 1),
    Family.BARBELL: (1, 1),
    Family.LOLLIPOP: (1, 0),
    Family.TADPOLE: (3, 0),
    Family.ONE_POINT_UNION: (1, 3),
    Family.SNAKE: (3, 0),
}


@dataclass(frozen=True)
class FamilySpec:
    """A graph family with its size parameters.

    ``OnePointUnion`` uses ``m`` for the number of cycles and ``n`` for the
    cycle length; the other two-parameter families follow the usual
    (m, n) order, e.g. ``Lollipop(m, n)`` is K_m bridged to P_n.
    """

    family: Family
    m: int | None = None
    n: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        self.validate()

    def validate(self) -> None:
        min_m, min_n = _DOMAINS[self.family]
        name = self.family.value
        if min_m is None:
            if self.m is not None:
                raise ParameterError(f"{name} takes only n")
        else:
            if self.m is None:
                raise ParameterError(f"{name} requires m")
            if self.m < min_m:
                raise ParameterError(f"{name} requires m >= {min_m}, got m={self.m}")
        if self.n is None:
            raise ParameterError(f"{name} requires n")
        if self.n < min_n:
            raise ParameterError(f"{name} requires n >= {min_n}, got n={self.n}")

    @property
    def vertex_count(self) -> int:
        f, m, n = self.family, self.m, self.n
        if f in (Family.PATH, Family.CYCLE, Family.COMPLETE):
            return n
        if f in (Family.WHEEL, Family.FAN):
            return n + 1
        if f in (Family.BARBELL, Family.LOLLIPOP, Family.TADPOLE):
            return m + n
        if f is Family.ONE_POINT_UNION:
            return m * (n - 1) + 1
        return n * (m - 1) + 1

    @property
    def edge_count(self) -> int:
        f, m, n = self.family, self.m, self.n
        if f is Family.PATH:
            return n - 1
        if f is Family.CYCLE:
            return n
        if f is Family.COMPLETE:
            return n * (n - 1) // 2
        if f is Family.WHEEL:
            return 2 * n
        if f is Family.FAN:
            return 2 * n - 1
        if f is Family.BARBELL:
            return m * (m - 1) // 2 + n * (n - 1) // 2 + 1
        if f is Family.LOLLIPOP:
            return m * (m - 1) // 2 + n
        if f is Family.TADPOLE:
            return m + n
        if f is Family.ONE_POINT_UNION:
            return m * n
        return n * m

    def label(self) -> str:
        if self.m is None:
            return f"{self.family.value}(n={self.n})"
        return f"{self.family.value}(m={self.m}, n={self.n})"


def _path_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return list(zip(vertices, vertices[1:]))


def _clique_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return list(itertools.combinations(vertices, 2))


def _cycle_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return _path_edges(vertices) + [(vertices[-1], vertices[0])]


def make_family(spec: FamilySpec) -> Graph:
    spec.validate()
    f, m, n = spec.family, spec.m, spec.n
    roles: dict[str, int] = {}

    if f is Family.PATH:
        edges = _path_edges(range(n))
        roles["path_end"] = n - 1
    elif f is Family.CYCLE:
        edges = _cycle_edges(range(n))
    elif f is Family.COMPLETE:
        edges = _clique_edges(range(n))
    elif f is Family.WHEEL:
        return make_cone(make_family(FamilySpec(Family.CYCLE, n=n)))
    elif f is Family.FAN:
        return make_cone(make_family(FamilySpec(Family.PATH, n=n)))
    elif f in (Family.BARBELL, Family.LOLLIPOP, Family.TADPOLE):
        left = range(m)
        if f is Family.TADPOLE:
            edges = _cycle_edges(left)
        else:
            edges = _clique_edges(left)
        right = range(m, m + n)
        edges += _clique_edges(right) if f is Family.BARBELL else _path_edges(right)
        roles["bridge_left"] = m - 1
        if n:
            edges.append((m - 1, m))
            roles["bridge_right"] = m
            if f is not Family.BARBELL:
                roles["path_end"] = m + n - 1
    elif f is Family.ONE_POINT_UNION:
        edges = []
        for i in range(m):
            edges += _cycle_edges([0] + list(range(1 + i * (n - 1), 1 + (i + 1) * (n - 1))))
        roles["hub"] = 0
    else:  # snake
        inner = m - 2
        edges = []
        for i in range(n):
            start = n + 1 + i * inner
            # closing the arc back to i supplies the spine edge (i, i+1)
            edges += _cycle_edges([i] + list(range(start, start + inner)) + [i + 1])
        roles["path_end"] = 0
    return from_edge_list(spec.vertex_count, edges, roles)

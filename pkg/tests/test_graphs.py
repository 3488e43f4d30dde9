import itertools

import pytest

from rwlabel.errors import DisconnectedGraphError, ParameterError, SizeLimitError
from rwlabel.graphs import (Family, FamilySpec, Graph, connected_graphs,
                            export_edge_list, from_edge_list, is_isomorphic,
                            make_cone, make_family, parse_edge_list)


def spec(family, m=None, n=None):
    return FamilySpec(Family(family), m=m, n=n)


def complete(n):
    return make_family(spec("complete", n=n))


def test_wheel_3_is_k4():
    g = make_family(spec("wheel", n=3))
    assert (g.n, g.num_edges) == (4, 6)
    assert is_isomorphic(g, complete(4))


def test_barbell_2_2_is_p4():
    g = make_family(spec("barbell", 2, 2))
    assert (g.n, g.num_edges) == (4, 3)
    assert is_isomorphic(g, make_family(spec("path", n=4)))


def test_snake_3_2_is_friendship_2():
    snake = make_family(spec("snake", 3, 2))
    friendship = make_family(spec("one-point-union", 2, 3))
    assert (snake.n, snake.num_edges) == (5, 6)
    assert is_isomorphic(snake, friendship)


def test_cones():
    w9 = make_cone(make_family(spec("cycle", n=8)))
    assert (w9.n, w9.num_edges) == (9, 16)
    assert w9.role("hub") == 8
    f6 = make_cone(make_family(spec("path", n=5)))
    assert (f6.n, f6.num_edges) == (6, 9)
    assert make_cone(complete(1)) == complete(2)


def test_cone_matches_family_builder():
    assert make_cone(make_family(spec("cycle", n=8))) == make_family(spec("wheel", n=8))
    assert make_cone(make_family(spec("path", n=5))) == make_family(spec("fan", n=5))


def test_cone_size_cap():
    big = make_family(spec("path", n=64))
    with pytest.raises(SizeLimitError):
        make_cone(big)


def test_cone_hub_degree():
    for n in range(1, 7):
        for g in connected_graphs(n) if n <= 4 else [make_family(spec("path", n=n))]:
            cone = make_cone(g)
            assert cone.degree(cone.role("hub")) == g.n
    for n in range(5, 21):
        cone = make_cone(make_family(spec("cycle", n=n)))
        assert cone.degree(cone.role("hub")) == n


def test_edge_list_construction():
    assert from_edge_list(2, [(0, 1)]) == complete(2)
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4 == make_family(spec("cycle", n=4))
    assert from_edge_list(3, [(0, 1), (1, 0), (1, 2)]).num_edges == 2
    with pytest.raises(DisconnectedGraphError):
        from_edge_list(3, [(0, 1)])
    with pytest.raises(ParameterError):
        from_edge_list(3, [(0, 3), (1, 2)])
    with pytest.raises(ParameterError):
        from_edge_list(2, [(0, 0), (0, 1)])
    with pytest.raises(SizeLimitError):
        from_edge_list(65, [(i, i + 1) for i in range(64)])


def test_graph_invariants_enforced():
    with pytest.raises(ParameterError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ParameterError):
        Graph(1, (0b1,))


def test_export():
    assert export_edge_list(complete(2)) == "2\n0 1\n"
    assert export_edge_list(make_family(spec("cycle", n=3))) == "3\n0 1\n0 2\n1 2\n"
    assert export_edge_list(complete(1)) == "1\n"


def test_export_round_trip():
    for g in connected_graphs(4):
        text = export_edge_list(g)
        assert parse_edge_list(text) == g
        assert export_edge_list(parse_edge_list(text)) == text
    messy = from_edge_list(4, [(3, 2), (1, 0), (2, 1), (0, 1)])
    assert export_edge_list(messy) == "4\n0 1\n1 2\n2 3\n"


def in_domain_specs(max_vertices):
    for family in Family:
        for m, n in itertools.product([None] + list(range(max_vertices + 1)), range(max_vertices + 1)):
            try:
                s = FamilySpec(family, m=m, n=n)
            except ParameterError:
                continue
            if s.vertex_count <= max_vertices:
                yield s


def test_family_counts_match_documentation():
    seen = set()
    for s in in_domain_specs(20):
        g = make_family(s)
        assert g.n == s.vertex_count, s
        assert g.num_edges == s.edge_count, s
        for u, v in g.edges():
            assert g.has_edge(v, u)
        seen.add(s.family)
    assert seen == set(Family)


def test_documented_counts_for_named_families():
    w = spec("wheel", n=7)
    assert (w.vertex_count, w.edge_count) == (8, 14)
    b = spec("barbell", 4, 5)
    assert (b.vertex_count, b.edge_count) == (9, 6 + 10 + 1)
    s = spec("snake", 5, 3)
    assert (s.vertex_count, s.edge_count) == (13, 15)


def test_role_tags():
    g = make_family(spec("barbell", 3, 4))
    assert g.has_edge(g.role("bridge_left"), g.role("bridge_right"))
    lolli = make_family(spec("lollipop", 4, 3))
    assert lolli.degree(lolli.role("path_end")) == 1
    assert make_family(spec("one-point-union", 3, 4)).degree(0) == 6
    snake = make_family(spec("snake", 4, 3))
    assert snake.degree(snake.role("path_end")) == 2


@pytest.mark.parametrize("family, bad", [
    ("cycle", dict(n=2)),
    ("wheel", dict(n=2)),
    ("fan", dict(n=0)),
    ("barbell", dict(m=0, n=2)),
    ("lollipop", dict(m=0, n=2)),
    ("lollipop", dict(m=2, n=-1)),
    ("tadpole", dict(m=2, n=1)),
    ("one-point-union", dict(m=0, n=3)),
    ("one-point-union", dict(m=2, n=2)),
    ("snake", dict(m=2, n=1)),
    ("path", dict(m=1, n=3)),
    ("barbell", dict(n=3)),
])
def test_domain_violations(family, bad):
    with pytest.raises(ParameterError):
        FamilySpec(Family(family), **bad)


def test_degenerate_parameters():
    assert make_family(spec("snake", 5, 0)).n == 1
    assert is_isomorphic(make_family(spec("lollipop", 4, 0)), complete(4))


def test_coincident_families():
    for m in range(3, 9):
        cycle = make_family(spec("cycle", n=m))
        assert is_isomorphic(make_family(spec("snake", m, 1)), cycle)
        assert is_isomorphic(make_family(spec("one-point-union", 1, m)), cycle)
        assert is_isomorphic(make_family(spec("tadpole", m, 0)), cycle)
    for m in range(1, 9):
        assert is_isomorphic(make_family(spec("lollipop", m, 0)), complete(m))
    # above 8 vertices compare invariant counts only
    for m in range(9, 20):
        for other in (spec("snake", m, 1), spec("one-point-union", 1, m), spec("tadpole", m, 0)):
            g = make_family(other)
            assert g.n == m and g.num_edges == m
            assert all(g.degree(v) == 2 for v in range(m))
        g = make_family(spec("lollipop", m, 0))
        assert g.num_edges == m * (m - 1) // 2

import pytest
from hypothesis import given, strategies as st

from coxcartan import (
    EmptyWindow,
    PresentationError,
    UnknownVertex,
    check_local_boundedness,
    emit_presentation,
    hasse_quiver,
    make_family,
    neighbors,
    parse_presentation,
)


def test_parse_finite_quiver_a3():
    p = parse_presentation("kind quiver\narrow 0 1\narrow 1 2\n")
    assert p.kind == "quiver"
    assert p.vertices() == [0, 1, 2]
    assert p.out_arcs(0) == [(1, 1)]
    assert p.out_arcs(2) == []


def test_parse_family_line():
    p = parse_presentation("family a-infinity\n")
    assert p.family == "a-infinity"
    assert p.out_arcs(0) == [(1, 1)]


def test_parse_cycle_rejected():
    with pytest.raises(PresentationError, match="cycle"):
        parse_presentation("kind quiver\narrow 0 1\narrow 1 0\n")


def test_parse_poset_cycle_rejected():
    with pytest.raises(PresentationError):
        parse_presentation("kind poset\ncover a b\ncover b a\n")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(PresentationError, match="line 2"):
        parse_presentation("kind quiver\narrow 0\n")


def test_comments_and_blank_lines():
    p = parse_presentation("# a comment\nkind quiver\n\narrow 0 1  # trailing\n")
    assert p.vertices() == [0, 1]


def test_neighbors_d_infinity():
    d = make_family("d-infinity")
    assert neighbors(d, 1, "out") == [(-1, 1), (0, 1), (2, 1)]
    assert neighbors(d, 1, "in") == []


def test_neighbors_a_infinity_source():
    a = make_family("a-infinity")
    assert neighbors(a, 0, "in") == []


def test_neighbors_kronecker_multiplicity():
    k = parse_presentation("kind quiver\narrow 0 1\narrow 0 1\n")
    assert neighbors(k, 1, "in") == [(0, 2)]


def test_neighbors_unknown_vertex():
    a = make_family("a-infinity")
    with pytest.raises(UnknownVertex):
        neighbors(a, -3, "out")


def test_hasse_chain():
    p = parse_presentation("kind poset\ncover a b\ncover b c\n")
    q = hasse_quiver(p)
    assert q.kind == "quiver"
    assert q.arrow_list == [("a", "b"), ("b", "c")]


def test_hasse_diamond():
    p = parse_presentation("kind poset\ncover a b\ncover a c\ncover b d\ncover c d\n")
    q = hasse_quiver(p)
    assert sorted(q.arrow_list) == [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]


def test_hasse_drops_redundant_relation():
    # a<b<c declared together with the implied a<c: covers are recomputed
    p = parse_presentation("kind poset\ncover a b\ncover b c\ncover a c\n")
    q = hasse_quiver(p)
    assert sorted(q.arrow_list) == [("a", "b"), ("b", "c")]


def test_hasse_of_garland_family_is_lazy():
    g = make_family("garland", 1)
    q = hasse_quiver(g)
    j0 = ("j", 0)
    assert q.out_arcs(j0) == [(("g", 0, 1, 0), 1), (("g", 0, 1, 1), 1)]


def test_windows():
    a = make_family("a-infinity")
    assert list(a.window("0..7")) == list(range(8))
    d = make_family("d-infinity")
    assert list(d.window("-1..3")) == [-1, 0, 1, 2, 3]
    z = make_family("z-a-infinity")
    assert list(z.window("-2..2")) == [-2, -1, 0, 1, 2]


def test_window_errors():
    a = make_family("a-infinity")
    with pytest.raises(UnknownVertex):
        a.window([0, 1, -5])
    with pytest.raises(EmptyWindow):
        a.window([])


def test_window_sorted_and_deduplicated():
    z = make_family("z-a-infinity")
    assert list(z.window([3, -1, 3, 0])) == [-1, 0, 3]


def test_garland_window_range_is_junction_to_junction():
    g = make_family("garland", 2)
    w = list(g.window("0..1"))
    assert [g.display(v) for v in w] == ["j0", "g0.1t", "g0.1b", "g0.2t", "g0.2b", "j1"]


def test_local_boundedness_families():
    for fam, win in (("a-infinity", "0..5"), ("d-infinity", "-1..4")):
        p = make_family(fam)
        rep = check_local_boundedness(p, p.window(win))
        assert rep["left_bounded"] and rep["right_bounded"] and rep["certified"]


def test_local_boundedness_witnesses():
    d = make_family("d-infinity")
    rep = check_local_boundedness(d, d.window("-1..2"))
    assert rep["witnesses"][1] == (0, 3)
    assert rep["witnesses"][-1] == (1, 0)


def test_emit_parse_round_trip_finite():
    text = "kind quiver\nvertex 0\nvertex 1\nvertex 2\narrow 0 1\narrow 0 1\narrow 1 2\n"
    p = parse_presentation(text)
    again = parse_presentation(emit_presentation(p))
    assert again.vertices() == p.vertices()
    assert again.arrow_list == p.arrow_list


def test_emit_parse_round_trip_poset():
    p = parse_presentation("kind poset\ncover a b\ncover a c\ncover b d\ncover c d\n")
    again = parse_presentation(emit_presentation(p))
    assert again.vertices() == p.vertices()
    assert {(u, w) for u in again.vertices() for w, _ in again.out_arcs(u)} == {
        (u, w) for u in p.vertices() for w, _ in p.out_arcs(u)
    }


@given(
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=n - 1),
                st.integers(min_value=0, max_value=n - 1),
            ).filter(lambda e: e[0] < e[1]),
            max_size=10,
        ).map(lambda edges: (n, edges))
    )
)
def test_round_trip_random_quivers(data):
    n, edges = data
    lines = ["kind quiver"] + [f"vertex {i}" for i in range(n)]
    lines += [f"arrow {u} {v}" for u, v in edges]
    p = parse_presentation("\n".join(lines))
    again = parse_presentation(emit_presentation(p))
    assert again.vertices() == p.vertices()
    assert again.arrow_list == p.arrow_list


@given(st.integers(min_value=1, max_value=8))
def test_hasse_chain_arrow_count(n):
    lines = ["kind poset"] + [f"cover v{i} v{i+1}" for i in range(n - 1)]
    if n == 1:
        lines.append("vertex v0")
    p = parse_presentation("\n".join(lines))
    assert len(hasse_quiver(p).arrow_list) == n - 1


def test_opposite_flips_arcs_and_order():
    d = make_family("d-infinity")
    op = d.opposite()
    assert op.in_arcs(1) == [(-1, 1), (0, 1), (2, 1)]
    assert op.out_arcs(1) == []
    assert op.opposite() is d


def test_garland_order_and_intervals():
    g = make_family("garland", 1)
    j0, j1 = ("j", 0), ("j", 1)
    t, b = ("g", 0, 1, 0), ("g", 0, 1, 1)
    assert g.leq(j0, j1)
    assert not g.leq(t, b) and not g.leq(b, t)
    assert g.interval(j0, j1) == [j0, t, b, j1]
    assert g.interval(j1, j0) == []


def test_garland_degrees_match_block_picture():
    g = make_family("garland", 2)
    rep = check_local_boundedness(g, g.window("0..1"))
    # junctions fan out to the two chain heads; interior levels cross fully
    assert rep["witnesses"][("j", 0)] == (2, 2)
    assert rep["witnesses"][("g", 0, 1, 0)] == (1, 2)
    assert rep["witnesses"][("g", 0, 2, 1)] == (2, 1)


def test_garland_parse_tokens():
    g = make_family("garland", 2)
    assert g.parse_token("j-3") == ("j", -3)
    assert g.parse_token("g2.1b") == ("g", 2, 1, 1)
    with pytest.raises(UnknownVertex):
        g.parse_token("g2.9t")

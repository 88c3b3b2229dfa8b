from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arboeq.discharging import icosahedron
from arboeq.errors import ParseError
from arboeq.generators import gen_planar_triangulation
from arboeq.graph import (
    Graph,
    degeneracy_order,
    delete_vertices,
    dump_graph,
    is_claw_free,
    load_graph,
    triangles,
)

from conftest import petersen, star


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(range(n), chosen)


def test_load_path():
    g = load_graph("3 2\n0 1\n1 2\n")
    assert [g.degree(v) for v in g] == [1, 2, 1]


def test_load_complete():
    text = "4 6\n" + "".join(f"{u} {v}\n" for u, v in combinations(range(4), 2))
    g = load_graph(text)
    assert g.min_degree == g.max_degree == 3


def test_load_comments_and_roundtrip():
    g = load_graph("# a path\n3 2\n# edge\n0 1\n1 2\n")
    assert load_graph(dump_graph(g)) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n0 0\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 1 2\n", 2),
    ],
)
def test_load_errors_name_line(text, line):
    with pytest.raises(ParseError) as exc:
        load_graph(text)
    assert exc.value.line == line


def test_self_loop_message():
    with pytest.raises(ParseError, match="self-loop"):
        load_graph("2 1\n0 0\n")


def test_edge_count_mismatch():
    with pytest.raises(ParseError):
        load_graph("3 2\n0 1\n")


def brute_degeneracy(g):
    best = None
    for order in permutations(g.vertices):
        pos = {v: i for i, v in enumerate(order)}
        width = max(sum(1 for w in g.neighbors(v) if pos[w] > pos[v]) for v in order)
        best = width if best is None else min(best, width)
    return best


def test_degeneracy_k4_and_path():
    assert degeneracy_order(Graph.complete(4)).width == 3
    assert degeneracy_order(Graph.path(3)).width == 1


def test_degeneracy_stacked_triangulation():
    g, _ = gen_planar_triangulation(7, seed=0)
    assert brute_degeneracy(g) == 3
    assert degeneracy_order(g).width == 3


def test_degeneracy_order_is_permutation_and_ties_lowest_id():
    g = Graph.cycle(5)
    order = degeneracy_order(g)
    assert sorted(order.order) == list(range(5))
    assert order.order[0] == 0


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_degeneracy_matches_brute_force(g):
    if g.n == 0:
        return
    assert degeneracy_order(g).width == brute_degeneracy(g)


def brute_claw_free(g):
    for v in g:
        for a, b, c in combinations(sorted(g.neighbors(v)), 3):
            if not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c):
                return False
    return True


def test_claw_examples():
    assert not is_claw_free(star(3))
    assert is_claw_free(Graph.complete(3))
    assert not brute_claw_free(petersen())
    assert not is_claw_free(petersen())


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_claw_free_agrees_with_brute_force(g):
    assert is_claw_free(g) == brute_claw_free(g)


def test_triangles():
    assert triangles(Graph.cycle(4)) == set()
    assert len(triangles(Graph.complete(4))) == 4
    ico = icosahedron().graph
    brute = {t for t in combinations(ico.vertices, 3)
             if all(ico.has_edge(a, b) for a, b in combinations(t, 2))}
    assert len(brute) == 20
    assert triangles(ico) == brute


def test_delete_vertices():
    assert delete_vertices(Graph.complete(4), {3}) == Graph.complete(3)
    g = Graph.path(4)
    assert delete_vertices(g, set()) == g
    h = delete_vertices(g, {1, 2})
    assert h.vertices == (0, 3) and h.m == 0
    with pytest.raises(KeyError):
        delete_vertices(g, {9})


def test_delete_keeps_ids():
    h = Graph.path(5).delete_vertices({0})
    assert h.vertices == (1, 2, 3, 4)


@given(graphs(max_n=9), st.data())
def test_handshake_and_composed_deletion(g, data):
    assert sum(g.degree(v) for v in g) == 2 * g.m
    verts = list(g.vertices)
    a = set(data.draw(st.lists(st.sampled_from(verts), unique=True) if verts else st.just([])))
    rest = [v for v in verts if v not in a]
    b = set(data.draw(st.lists(st.sampled_from(rest), unique=True) if rest else st.just([])))
    assert delete_vertices(delete_vertices(g, a), b) == delete_vertices(g, a | b)


@pytest.mark.parametrize("seed", range(10))
def test_planar_generator_is_5_degenerate(seed):
    g, _ = gen_planar_triangulation(60, seed, p=0.2 * (seed % 2))
    assert degeneracy_order(g).width <= 5

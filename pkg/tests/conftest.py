from itertools import combinations

import pytest

from arboeq.graph import Graph

ACCEPTANCE = {}


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(range(10), outer + spokes + inner)


def star(leaves):
    return Graph.from_edges(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def naive_is_forest(g, members):
    """A vertex set induces a forest iff every nonempty subset spans fewer edges than vertices."""
    members = sorted(members)
    for r in range(1, len(members) + 1):
        for sub in combinations(members, r):
            edges = sum(1 for a, b in combinations(sub, 2) if g.has_edge(a, b))
            if edges > r - 1:
                return False
    return True


def naive_verdict_ok(g, lists, coloring):
    cap = -(-g.n // lists.k)
    if any(coloring[v] not in lists[v] for v in g):
        return False
    for c in set(coloring.values()):
        members = [v for v in g if coloring[v] == c]
        if len(members) > cap or not naive_is_forest(g, members):
            return False
    return True


@pytest.fixture
def k4():
    return Graph.complete(4)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")


def random_lemma2_instance(rng, max_n=12, max_k=4):
    """Random (g, S, lists, base) with S meeting the position bounds and base verified on g - S."""
    from arboeq.oracle import oracle_feasible
    from arboeq.reduction import OrderedReductionSet, validate_S
    from arboeq.verify import ListAssignment

    while True:
        n = rng.randint(1, max_n)
        k = rng.randint(1, min(max_k, n))
        density = rng.random() * 0.7
        edges = [e for e in combinations(range(n), 2) if rng.random() < density]
        g = Graph.from_edges(range(n), edges)
        members = rng.sample(range(n), k)
        outside = {x: len(g.neighbors(x) - set(members)) for x in members}
        rng.shuffle(members)
        members.sort(key=outside.get)
        s = OrderedReductionSet(tuple(members))
        if not validate_S(g, s)[0]:
            continue
        universe = rng.randint(k, 2 * k + 1)
        lists = ListAssignment(k, {v: rng.sample(range(universe), k) for v in g})
        rest = g.delete_vertices(members)
        res = oracle_feasible(rest, lists, k)
        if not res.feasible:
            continue
        return g, s, lists, res.witness

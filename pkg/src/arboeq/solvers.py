"""Constructive solvers for complete, 2-degenerate, claw-free 3-degenerate and planar graphs."""

from dataclasses import dataclass
from itertools import combinations

from .errors import ExtensionInfeasible, IrreducibleGraph, PreconditionError, UnsupportedClass
from .graph import Graph, degeneracy, find_claw, triangles_at
from .reduction import (
    build_S,
    extend_pendant,
    lemma2_extend,
    saturation_greedy,
    solve_base,
    validate_S,
)
from .verify import ceil_cap

# Position codes in ReducibleConfig: positive values count from the front,
# K means position k and K1 means position k - 1.
K = 0
K1 = -1

PLANAR_FILL = 5


@dataclass(frozen=True)
class ReducibleConfig:
    kind: str
    labeled: tuple  # ((position code, vertex), ...)
    fill_degree: int = PLANAR_FILL

    @property
    def labeled_vertices(self):
        return dict(self.labeled)

    def specials(self, k):
        return [(v, p if p > 0 else k + p) for p, v in self.labeled]

    def __str__(self):
        names = {K: "k", K1: "k-1"}
        parts = [f"{names.get(p, p)}:{v}" for p, v in self.labeled]
        return f"{self.kind} " + " ".join(parts)


@dataclass(frozen=True)
class Step:
    """One recursion level: what was removed and why."""

    kind: str
    removed: tuple
    n: int


@dataclass(frozen=True)
class GraphClass:
    name: str
    n: int
    max_degree: int
    degeneracy: int
    claw_free: bool


def half_ceil(d):
    return (d + 2) // 2  # ceil((d + 1) / 2)


def min_k(name, g):
    """Smallest k covered by the theorem for the given class."""
    if name == "complete":
        return max(-(-g.n // 2), 1)
    floor = {"2deg": 2, "clawfree3": 3, "planar": 5}[name]
    return max(half_ceil(g.max_degree), floor)


def detect_class(g, planar=False):
    dg = degeneracy(g)
    claw_free = find_claw(g) is None
    if g.is_complete():
        name = "complete"
    elif dg <= 2:
        name = "2deg"
    elif dg <= 3 and claw_free:
        name = "clawfree3"
    elif planar:
        name = "planar"
    else:
        name = "unknown"
    return GraphClass(name, g.n, g.max_degree, dg, claw_free)


def _check_lists(g, lists, k):
    if lists.k != k:
        raise PreconditionError(f"lists have size {lists.k}, expected k={k}")
    missing = [v for v in g if v not in lists]
    if missing:
        raise PreconditionError(f"no list for vertices {missing}")


def _check_k(name, g, k, force):
    need = min_k(name, g)
    if k < need and not force:
        raise PreconditionError(f"k={k} is below the minimum {need} for class {name}")


def _run_reductions(g, lists, k, choose, trace=None):
    """Shrink g with `choose` until it is small, then color back up.

    choose(g) returns ("pendant", v, label) or ("set", S, label).
    """
    stack = []
    while True:
        if g.n <= k or g.m == 0:
            coloring = solve_base(g, lists, k)
            if trace is not None:
                trace.append(Step("base", g.vertices, g.n))
            break
        isolated = [v for v in g if g.degree(v) == 0]
        if isolated:
            stack.append(("isolated", g, isolated))
            if trace is not None:
                trace.append(Step("isolated", tuple(isolated), g.n))
            g = g.delete_vertices(isolated)
            continue
        action, what, label = choose(g)
        if action == "pendant":
            stack.append(("pendant", g, what))
            if trace is not None:
                trace.append(Step(label, (what,), g.n))
            g = g.delete_vertices([what])
        else:
            stack.append(("set", g, what))
            if trace is not None:
                trace.append(Step(label, what.positions, g.n))
            g = g.delete_vertices(what.positions)

    for action, parent, what in reversed(stack):
        if action == "isolated":
            coloring = saturation_greedy(what, lists, k, ceil_cap(parent.n, k), coloring)
        elif action == "pendant":
            coloring = extend_pendant(parent, what, coloring, lists, k)
        else:
            coloring = lemma2_extend(parent, what, coloring, lists, k)
    return coloring


def _checked_set(g, specials, fill, k):
    s = build_S(g, specials, fill, k)
    ok, bad = validate_S(g, s)
    if not ok:
        raise AssertionError(f"reduction set {s.positions} violates the bound at index {bad}")
    return s


def solve_complete(n, lists, k, force=False):
    g = Graph.complete(n)
    _check_lists(g, lists, k)
    if k < -(-n // 2) and not force:
        raise PreconditionError(f"k={k} is below ceil(n/2)={-(-n // 2)}")
    coloring = {}
    uses = {}
    for v in range(n):
        if v < k:
            ok = lambda c: c not in uses
        else:
            ok = lambda c: uses.get(c, 0) <= 1
        choice = next((c for c in sorted(lists[v]) if ok(c)), None)
        if choice is None:
            raise ExtensionInfeasible(v, v + 1)
        coloring[v] = choice
        uses[choice] = uses.get(choice, 0) + 1
    return coloring


def solve_2degenerate(g, lists, k, force=False, trace=None):
    _check_lists(g, lists, k)
    if degeneracy(g) > 2:
        raise PreconditionError("graph is not 2-degenerate")
    _check_k("2deg", g, k, force)

    def choose(h):
        u = next(v for v in h if 1 <= h.degree(v) <= 2)
        v = min(h.neighbors(u))
        return "set", _checked_set(h, [(u, 1), (v, k)], 2, k), "2deg"

    return _run_reductions(g, lists, k, choose, trace)


def solve_clawfree_3deg(g, lists, k, force=False, trace=None):
    _check_lists(g, lists, k)
    if degeneracy(g) > 3:
        raise PreconditionError("graph is not 3-degenerate")
    claw = find_claw(g)
    if claw is not None:
        raise PreconditionError(f"graph has a claw centered at {claw[0]}: {claw[1:]}")
    _check_k("clawfree3", g, k, force)

    def choose(h):
        u = min((v for v in h if h.degree(v) >= 1), key=lambda v: (h.degree(v), v))
        nbrs = sorted(h.neighbors(u))
        if len(nbrs) <= 2:
            return "set", _checked_set(h, [(u, 1), (nbrs[0], k)], 3, k), "clawfree3-low"
        pair = next(((y, z) for y, z in combinations(nbrs, 2) if h.has_edge(y, z)), None)
        if pair is None:
            raise AssertionError(f"no adjacent neighbor pair at 3-vertex {u}")
        y, z = pair
        return "set", _checked_set(h, [(u, 1), (y, k - 1), (z, k)], 3, k), "clawfree3"

    return _run_reductions(g, lists, k, choose, trace)


def find_reducible_config(g):
    """First match among C1..C10, lowest ids first within each kind."""
    for finder in _FINDERS:
        cfg = finder(g)
        if cfg is not None:
            return cfg
    raise IrreducibleGraph("no reducible configuration found (input is not planar, or finder bug)")


def _sorted_by_degree(g, pred):
    return [v for v in g if pred(g.degree(v))]


def _c1(g):
    for v in g:
        if g.degree(v) <= 1:
            return ReducibleConfig("C1", ((1, v),))


def _c2(g):
    low = _sorted_by_degree(g, lambda d: d <= 3)
    for u in low:
        if g.degree(u) != 2:
            continue
        for v in low:
            if v == u:
                continue
            w = min(g.neighbors(u) - {v})
            return ReducibleConfig("C2", ((1, u), (2, v), (K, w)))


def _c3(g):
    for u in _sorted_by_degree(g, lambda d: d == 3):
        for v in sorted(g.neighbors(u)):
            if g.degree(v) <= 4:
                w = min(g.neighbors(u) - {v})
                return ReducibleConfig("C3", ((1, u), (2, v), (K, w)))


def _c4(g):
    for u in _sorted_by_degree(g, lambda d: d == 3):
        nbrs = sorted(g.neighbors(u))
        for v in nbrs:
            for w in nbrs:
                if v == w or g.degree(v) > 5 or g.degree(w) > 5:
                    continue
                rest = g.neighbors(v) - {u, w}
                if rest:
                    x = min(rest)
                    return ReducibleConfig("C4", ((1, u), (2, v), (3, w), (K, x)))


def _c5(g):
    threes = _sorted_by_degree(g, lambda d: d == 3)
    for u in threes:
        for v in sorted(g.neighbors(u)):
            if g.degree(v) == 3:
                w = min(g.neighbors(u) - {v})
                return ReducibleConfig("C5a", ((1, u), (2, v), (K, w)))
    top = g.max_degree
    for u in threes:
        for v in threes:
            if v == u or g.has_edge(u, v):
                continue
            for w in sorted(g.neighbors(u)):
                if g.degree(w) <= top - 1:
                    t = min(g.neighbors(u) - {w})
                    return ReducibleConfig("C5b", ((1, u), (2, v), (K1, w), (K, t)))


def _c6(g):
    on_triangle = [v for v in g if g.degree(v) <= 3 and triangles_at(g, v)]
    for u in on_triangle:
        for v, w in triangles_at(g, u):
            for x in on_triangle:
                if x not in (u, v, w):
                    return ReducibleConfig("C6", ((1, u), (2, x), (K1, v), (K, w)))


def _c7(g):
    for u in _sorted_by_degree(g, lambda d: d <= 4):
        for a, b in triangles_at(g, u):
            for v, w in ((a, b), (b, a)):
                if g.degree(v) > 5:
                    continue
                if g.degree(u) == 4:
                    t = min(g.neighbors(u) - {v, w})
                    return ReducibleConfig("C7", ((1, u), (2, v), (K1, w), (K, t)))
                return ReducibleConfig("C7", ((1, u), (2, v), (K, w)))


def _c8(g):
    if g.min_degree > 3:
        return None
    x = min(g, key=lambda v: (g.degree(v), v))
    for u in _sorted_by_degree(g, lambda d: d == 4):
        for a, b in triangles_at(g, u):
            if g.degree(a) < 4 or g.degree(b) < 4:
                continue
            for v, w in ((a, b), (b, a)):
                if g.degree(v) > 7:
                    continue
                rest = g.neighbors(u) - {v, w, x}
                t = min(rest)
                return ReducibleConfig("C8", ((1, u), (2, x), (3, v), (K1, w), (K, t)))


def _c9(g):
    for u in _sorted_by_degree(g, lambda d: d == 5):
        for v in sorted(g.neighbors(u)):
            if not 5 <= g.degree(v) <= 6:
                continue
            common = sorted(g.neighbors(u) & g.neighbors(v))
            for w in common:
                if not 5 <= g.degree(w) <= 7:
                    continue
                for x in common:
                    if x == w:
                        continue
                    t = min(g.neighbors(u) - {x, v, w})
                    return ReducibleConfig("C9", ((1, u), (2, v), (3, w), (K1, x), (K, t)))


def _c10(g):
    for u in _sorted_by_degree(g, lambda d: d == 6):
        for v in sorted(g.neighbors(u)):
            if g.degree(v) != 4:
                continue
            common = sorted(g.neighbors(u) & g.neighbors(v))
            for w in common:
                for x in common:
                    if x != w:
                        return ReducibleConfig("C10", ((1, v), (2, u), (K1, w), (K, x)))


_FINDERS = (_c1, _c2, _c3, _c4, _c5, _c6, _c7, _c8, _c9, _c10)


def solve_planar(g, lists, k, force=False, trace=None):
    """Planarity is the caller's promise; only m <= 3n - 6 is checked."""
    _check_lists(g, lists, k)
    if g.n >= 3 and g.m > 3 * g.n - 6:
        raise PreconditionError(f"m={g.m} exceeds 3n-6={3 * g.n - 6}; graph cannot be planar")
    _check_k("planar", g, k, force)

    def choose(h):
        cfg = find_reducible_config(h)
        if cfg.kind == "C1":
            return "pendant", cfg.labeled_vertices[1], "C1"
        return "set", _checked_set(h, cfg.specials(k), cfg.fill_degree, k), cfg.kind

    return _run_reductions(g, lists, k, choose, trace)


def solve_auto(g, lists, k, planar=False, force=False, cls=None, trace=None):
    """Dispatch on the detected (or forced) class.  Returns (class name, coloring)."""
    name = cls or detect_class(g, planar).name
    if name == "complete":
        if not g.is_complete() or g.vertices != tuple(range(g.n)):
            raise PreconditionError("class 'complete' needs K_n on vertices 0..n-1")
        return name, solve_complete(g.n, lists, k, force)
    if name == "2deg":
        return name, solve_2degenerate(g, lists, k, force, trace)
    if name == "clawfree3":
        return name, solve_clawfree_3deg(g, lists, k, force, trace)
    if name == "planar":
        return name, solve_planar(g, lists, k, force, trace)
    raise UnsupportedClass(
        "unsupported class: graph is not complete, 2-degenerate, claw-free 3-degenerate, "
        "or declared planar"
    )

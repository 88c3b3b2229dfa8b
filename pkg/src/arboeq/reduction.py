"""Ordered reduction sets and the extension steps used by every solver.

A reduction removes an ordered set S = (x_1, ..., x_k) such that x_i has at
most 2i - 1 neighbors outside S.  Any equitable tree-coloring of G - S then
extends to G by coloring x_k, ..., x_1 in turn.
"""

from dataclasses import dataclass

from .errors import ExtensionInfeasible, FillError, PreconditionError
from .verify import ceil_cap, class_sizes, verify_equitable_arboreal


@dataclass(frozen=True)
class OrderedReductionSet:
    positions: tuple

    def __post_init__(self):
        if len(set(self.positions)) != len(self.positions):
            raise ValueError(f"repeated vertex in reduction set {self.positions}")

    @property
    def k(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def __len__(self):
        return len(self.positions)

    def at(self, i):
        """Vertex at 1-based position i."""
        return self.positions[i - 1]


def validate_S(g, s):
    """Return (True, None) or (False, i) for the smallest violating 1-based index."""
    members = set(s.positions)
    missing = members - set(g.vertices)
    if missing:
        raise PreconditionError(f"reduction set vertices not in graph: {sorted(missing)}")
    for i, x in enumerate(s.positions, start=1):
        if len(g.neighbors(x) - members) > 2 * i - 1:
            return False, i
    return True, None


def build_S(g, specials, fill_degree, k):
    """Place the specials, then fill free positions from k down to 1.

    Each fill vertex is the lowest-id vertex of degree <= fill_degree in g
    minus every vertex chosen so far (specials included).
    """
    slots = [None] * k
    for v, pos in specials:
        if not 1 <= pos <= k:
            raise PreconditionError(f"special position {pos} outside 1..{k}")
        if slots[pos - 1] is not None:
            raise PreconditionError(f"position {pos} assigned twice")
        if v not in g:
            raise PreconditionError(f"special vertex {v} not in graph")
        slots[pos - 1] = v
    chosen = {v for v in slots if v is not None}
    if len(chosen) != len(specials):
        raise PreconditionError("special vertices are not distinct")

    # degrees in g - chosen, maintained incrementally
    deg = {v: len(g.neighbors(v) - chosen) for v in g if v not in chosen}
    for pos in range(k, 0, -1):
        if slots[pos - 1] is not None:
            continue
        pick = next((v for v in sorted(deg) if deg[v] <= fill_degree), None)
        if pick is None:
            raise FillError(pos, fill_degree)
        slots[pos - 1] = pick
        del deg[pick]
        for w in g.neighbors(pick):
            if w in deg:
                deg[w] -= 1
    return OrderedReductionSet(tuple(slots))


def lemma2_extend(g, s, base, lists, k, check=True):
    """Extend a coloring of g - S to g, coloring x_k first and x_1 last.

    x_i gets the smallest color of its list that no later position uses
    and that appears at most once among its already-colored neighbors.
    """
    if s.k != k:
        raise PreconditionError(f"reduction set has {s.k} positions, expected {k}")
    ok, bad = validate_S(g, s)
    if not ok:
        raise PreconditionError(f"reduction set violates the position bound at index {bad}")
    members = set(s.positions)
    rest = g.delete_vertices(members)
    if set(base) != set(rest.vertices):
        raise PreconditionError("base coloring must cover exactly g - S")
    if check and rest.n:
        verdict = verify_equitable_arboreal(rest, lists, base)
        if not verdict.ok:
            raise PreconditionError(f"base coloring fails verification: {verdict.violations[0]}")

    coloring = dict(base)
    taken = set()
    for i in range(k, 0, -1):
        x = s.at(i)
        if len(lists[x]) != k:
            raise PreconditionError(f"list of vertex {x} does not have size {k}")
        seen = {}
        for w in g.neighbors(x):
            if w in coloring:
                c = coloring[w]
                seen[c] = seen.get(c, 0) + 1
        choice = next(
            (c for c in sorted(lists[x]) if c not in taken and seen.get(c, 0) <= 1), None
        )
        if choice is None:
            raise ExtensionInfeasible(x, i)
        coloring[x] = choice
        taken.add(choice)
    return coloring


def extend_pendant(g, v, base, lists, k):
    """Color a vertex of degree <= 1 on top of a coloring of g - v."""
    if g.degree(v) > 1:
        raise PreconditionError(f"vertex {v} has degree {g.degree(v)} > 1")
    n = g.n
    coloring = dict(base)
    if n == 1:
        coloring[v] = min(lists[v])
        return coloring
    prev_cap = ceil_cap(n - 1, k)
    sizes = class_sizes(base)
    saturated = {c for c, cnt in sizes.items() if cnt == prev_cap}
    assert len(saturated) * prev_cap <= n - 1
    free = sorted(lists[v] - saturated)
    if len(saturated) < k:
        coloring[v] = free[0]
    else:
        # only when n = 1 (mod k): the cap grows by one and every color fits
        coloring[v] = min(lists[v])
    return coloring


def saturation_greedy(vertices, lists, k, cap, coloring=None):
    """Color vertices in id order with their least-used list color (smallest on ties).

    Fails only if every color in the list already fills the cap.
    """
    coloring = dict(coloring or {})
    sizes = class_sizes(coloring)
    for v in sorted(vertices):
        choice = min(lists[v], key=lambda c: (sizes[c], c))
        if sizes[choice] >= cap:
            raise ExtensionInfeasible(v, None)
        coloring[v] = choice
        sizes[choice] += 1
    return coloring


def solve_base(g, lists, k):
    if g.n <= k:
        coloring = {}
        used = set()
        for v in g:
            c = min(lists[v] - used)
            coloring[v] = c
            used.add(c)
        return coloring
    if g.m == 0:
        return saturation_greedy(g.vertices, lists, k, ceil_cap(g.n, k))
    raise PreconditionError("solve_base needs |V| <= k or an edgeless graph")

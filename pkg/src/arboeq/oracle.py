"""Exhaustive search for equitable list tree-colorings on small graphs."""

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import BudgetExceeded, PreconditionError
from .verify import ListAssignment, ceil_cap

DEFAULT_LIMIT = 12
DEFAULT_BUDGET = 2_000_000


@dataclass
class OracleResult:
    feasible: bool
    witness: dict = None
    nodes_explored: int = 0


def _joins_component(g, coloring, v, color):
    """True if coloring v with `color` would close a cycle in that class."""
    same = [w for w in g.neighbors(v) if coloring.get(w) == color]
    if len(same) < 2:
        return False
    seen = set()
    for start in same:
        if start in seen:
            return True
        # flood the class component of `start` (v itself is still uncolored)
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen and coloring.get(y) == color:
                    seen.add(y)
                    stack.append(y)
    return False


def oracle_feasible(g, lists, k, limit=DEFAULT_LIMIT):
    if g.n > limit:
        raise BudgetExceeded(f"oracle limited to {limit} vertices, graph has {g.n}")
    if lists.k != k:
        raise PreconditionError(f"lists have size {lists.k}, expected k={k}")
    if g.n == 0:
        return OracleResult(True, {}, 0)
    cap = ceil_cap(g.n, k)
    order = sorted(g, key=lambda v: (-g.degree(v), v))
    options = [sorted(lists[v]) for v in order]
    coloring = {}
    counts = {}
    explored = 0

    def search(i):
        nonlocal explored
        explored += 1
        if i == len(order):
            return True
        v = order[i]
        for c in options[i]:
            if counts.get(c, 0) >= cap or _joins_component(g, coloring, v, c):
                continue
            coloring[v] = c
            counts[c] = counts.get(c, 0) + 1
            if search(i + 1):
                return True
            counts[c] -= 1
            del coloring[v]
        return False

    if search(0):
        return OracleResult(True, dict(sorted(coloring.items())), explored)
    return OracleResult(False, None, explored)


def oracle_equitable_point_arboricity(g, k_max, limit=DEFAULT_LIMIT):
    """Smallest k <= k_max feasible with identical lists {1..k}; None means "> k_max"."""
    for k in range(1, k_max + 1):
        lists = ListAssignment.uniform(g.vertices, range(1, k + 1))
        if oracle_feasible(g, lists, k, limit).feasible:
            return k
    return None


def feasible_k_profile(g, k_max, limit=DEFAULT_LIMIT):
    """Feasibility bit for identical lists {1..k}, k = 1..k_max."""
    out = {}
    for k in range(1, k_max + 1):
        lists = ListAssignment.uniform(g.vertices, range(1, k + 1))
        out[k] = oracle_feasible(g, lists, k, limit).feasible
    return out


def is_upward_closed(profile):
    seen = False
    for k in sorted(profile):
        if profile[k]:
            seen = True
        elif seen:
            return False
    return True


def oracle_list_sweep(g, k, universe, budget=DEFAULT_BUDGET, limit=DEFAULT_LIMIT):
    """First k-list assignment over {1..universe} with no valid coloring, else None.

    None only means no counterexample exists within this universe.
    """
    if universe < k:
        raise PreconditionError(f"universe {universe} smaller than k={k}")
    total = comb(universe, k) ** g.n
    if total > budget:
        raise BudgetExceeded(f"{total} list assignments exceed budget {budget}")
    subsets = [frozenset(s) for s in combinations(range(1, universe + 1), k)]
    verts = g.vertices
    for choice in product(subsets, repeat=len(verts)):
        lists = ListAssignment(k, dict(zip(verts, choice)))
        if not oracle_feasible(g, lists, k, limit).feasible:
            return lists
    return None

"""List assignments, colorings, and the equitable tree-coloring checker."""

from collections import Counter
from dataclasses import dataclass, field

from .errors import IncompleteColoring, ParseError
from .graph import _data_lines, _ints


class ListAssignment:
    """Uniform k-lists: every vertex gets exactly k distinct colors."""

    def __init__(self, k, lists):
        if k < 1:
            raise ValueError("list size k must be positive")
        self.k = k
        self.lists = {}
        for v, colors in lists.items():
            colors = frozenset(colors)
            if len(colors) != k:
                raise ValueError(f"list of vertex {v} has {len(colors)} colors, expected {k}")
            if any(c < 0 for c in colors):
                raise ValueError(f"negative color in list of vertex {v}")
            self.lists[v] = colors

    @classmethod
    def uniform(cls, vertices, colors):
        colors = frozenset(colors)
        return cls(len(colors), {v: colors for v in vertices})

    def __getitem__(self, v):
        return self.lists[v]

    def __contains__(self, v):
        return v in self.lists

    def __eq__(self, other):
        if not isinstance(other, ListAssignment):
            return NotImplemented
        return self.k == other.k and self.lists == other.lists

    def __repr__(self):
        return f"ListAssignment(k={self.k}, n={len(self.lists)})"

    def covers(self, g):
        return all(v in self.lists for v in g)

    def restrict(self, vertices):
        return ListAssignment(self.k, {v: self.lists[v] for v in vertices})


def ceil_cap(n, k):
    if n < 1 or k < 1:
        raise ValueError("ceil_cap needs n >= 1 and k >= 1")
    return -(-n // k)


def class_sizes(coloring):
    return Counter(coloring.values())


@dataclass(frozen=True)
class Violation:
    """One failed condition.  kind is 'off-list', 'cycle' or 'oversized'."""

    kind: str
    vertex: int = None
    color: int = None
    count: int = None
    cap: int = None
    cycle: tuple = None

    def __str__(self):
        if self.kind == "off-list":
            return f"off-list: vertex {self.vertex} has color {self.color} not in its list"
        if self.kind == "cycle":
            walk = " ".join(map(str, self.cycle))
            return f"cycle: color {self.color} induces cycle {walk}"
        return f"oversized: color {self.color} used {self.count} times > cap {self.cap}"


@dataclass
class Verdict:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def find_cycle(g, vertices):
    """Return a cycle (closed walk, first vertex repeated at the end) in g[vertices], or None."""
    vertices = set(vertices)
    parent = {}
    for root in sorted(vertices):
        if root in parent:
            continue
        parent[root] = None
        stack = [root]
        while stack:
            x = stack.pop()
            for y in sorted(g.neighbors(x)):
                if y not in vertices or y == parent[x]:
                    continue
                if y in parent:
                    # non-tree edge x-y closes a cycle through their common ancestor
                    return _cycle_from_tree(parent, x, y)
                parent[y] = x
                stack.append(y)
    return None


def _cycle_from_tree(parent, x, y):
    anc_x = [x]
    while parent[anc_x[-1]] is not None:
        anc_x.append(parent[anc_x[-1]])
    pos = {v: i for i, v in enumerate(anc_x)}
    anc_y = [y]
    while anc_y[-1] not in pos:
        anc_y.append(parent[anc_y[-1]])
    meet = anc_y[-1]
    walk = anc_x[: pos[meet] + 1] + list(reversed(anc_y[:-1]))
    walk.append(walk[0])
    return tuple(walk)


def class_induces_forest(g, coloring, color):
    """(True, None) if the color class is acyclic, else (False, cycle)."""
    members = [v for v, c in coloring.items() if c == color and v in g]
    cyc = find_cycle(g, members)
    return cyc is None, cyc


def verify_equitable_arboreal(g, lists, coloring):
    missing = [v for v in g if v not in coloring]
    if missing:
        raise IncompleteColoring(missing)
    verdict = Verdict()
    if g.n == 0:
        return verdict
    for v in g:
        if coloring[v] not in lists[v]:
            verdict.violations.append(Violation("off-list", vertex=v, color=coloring[v]))
    restricted = {v: coloring[v] for v in g}
    sizes = class_sizes(restricted)
    for color in sorted(sizes):
        ok, cyc = class_induces_forest(g, restricted, color)
        if not ok:
            verdict.violations.append(Violation("cycle", color=color, cycle=cyc))
    cap = ceil_cap(g.n, lists.k)
    for color in sorted(sizes):
        if sizes[color] > cap:
            verdict.violations.append(Violation("oversized", color=color, count=sizes[color], cap=cap))
    return verdict


def load_lists(text):
    lists = {}
    k = None
    for lineno, line in _data_lines(text):
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError("expected 'v: c1 c2 ... ck'", lineno)
        (v,) = _ints(head, lineno, 1)
        colors = _ints(tail, lineno)
        if len(set(colors)) != len(colors):
            raise ParseError(f"repeated color in list of vertex {v}", lineno)
        if k is None:
            k = len(colors)
        elif len(colors) != k:
            raise ParseError(f"list has {len(colors)} colors, expected {k}", lineno)
        if v in lists:
            raise ParseError(f"vertex {v} listed twice", lineno)
        lists[v] = colors
    if k is None:
        raise ParseError("no lists given")
    try:
        return ListAssignment(k, lists)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def dump_lists(lists):
    return "".join(
        f"{v}: {' '.join(map(str, sorted(cs)))}\n" for v, cs in sorted(lists.lists.items())
    )


def load_coloring(text):
    coloring = {}
    for lineno, line in _data_lines(text):
        v, c = _ints(line, lineno, 2)
        if v in coloring:
            raise ParseError(f"vertex {v} colored twice", lineno)
        coloring[v] = c
    return coloring


def dump_coloring(coloring):
    return "".join(f"{v} {c}\n" for v, c in sorted(coloring.items()))

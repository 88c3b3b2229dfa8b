"""Immutable simple graphs and the structural queries the solvers rely on."""

import heapq
from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError


class Graph:
    """Undirected simple graph on non-negative integer vertex ids.

    Instances are never mutated after construction.  Deleting vertices
    returns a new graph that keeps the original ids, so colorings of a
    subgraph can be merged back into colorings of the parent.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, adjacency):
        adj = {}
        for v, nbrs in adjacency.items():
            adj[v] = frozenset(nbrs)
        self._adj = dict(sorted(adj.items()))
        self._m = sum(len(n) for n in self._adj.values()) // 2

    @classmethod
    def from_edges(cls, vertices, edges):
        adj = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    @classmethod
    def complete(cls, n):
        return cls.from_edges(range(n), combinations(range(n), 2))

    @classmethod
    def path(cls, n):
        return cls.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n):
        return cls.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def empty(cls, n):
        return cls.from_edges(range(n), [])

    @property
    def vertices(self):
        return tuple(self._adj)

    @property
    def n(self):
        return len(self._adj)

    @property
    def m(self):
        return self._m

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(self._adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash(tuple((v, tuple(sorted(n))) for v, n in self._adj.items()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj.get(u, ())

    def edges(self):
        return [(u, v) for u, nbrs in self._adj.items() for v in sorted(nbrs) if u < v]

    def degrees(self):
        return {v: len(n) for v, n in self._adj.items()}

    @property
    def min_degree(self):
        return min((len(n) for n in self._adj.values()), default=0)

    @property
    def max_degree(self):
        return max((len(n) for n in self._adj.values()), default=0)

    def is_complete(self):
        return self._m == self.n * (self.n - 1) // 2

    def delete_vertices(self, s):
        s = set(s)
        unknown = s - self._adj.keys()
        if unknown:
            raise KeyError(f"unknown vertices: {sorted(unknown)}")
        return Graph({v: nbrs - s for v, nbrs in self._adj.items() if v not in s})

    def induced(self, keep):
        keep = set(keep)
        return self.delete_vertices(self._adj.keys() - keep)

    def components(self):
        seen = set()
        comps = []
        for root in self._adj:
            if root in seen:
                continue
            seen.add(root)
            comp = [root]
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return len(self.components()) <= 1


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple
    width: int


def degeneracy_order(g):
    """Repeatedly remove a minimum-degree vertex, lowest id first on ties.

    The width (largest degree seen at removal time) is the degeneracy.
    """
    deg = g.degrees()
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed = set()
    order = []
    width = 0
    while heap:
        d, v = heapq.heappop(heap)
        if v in removed or d != deg[v]:
            continue
        removed.add(v)
        order.append(v)
        width = max(width, d)
        for w in g.neighbors(v):
            if w not in removed:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return VertexOrdering(tuple(order), width)


def degeneracy(g):
    return degeneracy_order(g).width


def is_claw_free(g):
    return find_claw(g) is None


def find_claw(g):
    """Return (center, a, b, c) for some induced K_{1,3}, or None."""
    for v in g:
        nbrs = sorted(g.neighbors(v))
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return (v, a, b, c)
    return None


def triangles(g):
    out = set()
    for u, v in g.edges():
        for w in g.neighbors(u) & g.neighbors(v):
            if w > v:
                out.add((u, v, w))
    return out


def triangles_at(g, v):
    """Sorted list of the (a, b) pairs with {v, a, b} a triangle and a < b."""
    nbrs = g.neighbors(v)
    return sorted((a, b) for a in nbrs for b in g.neighbors(a) & nbrs if a < b)


def delete_vertices(g, s):
    return g.delete_vertices(s)


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(line, lineno, count=None):
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", lineno) from None
    if count is not None and len(vals) != count:
        raise ParseError(f"expected {count} integers, got {len(vals)}", lineno)
    return vals


def load_graph(text):
    """Parse the "n m" header + m edge lines format."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    edges = []
    seen = set()
    for lineno, line in lines:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given")
    return Graph.from_edges(range(n), edges)


def dump_graph(g):
    """Inverse of load_graph; requires dense 0-based vertex ids."""
    if g.vertices != tuple(range(g.n)):
        raise ValueError("edge-list format needs vertex ids 0..n-1")
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"

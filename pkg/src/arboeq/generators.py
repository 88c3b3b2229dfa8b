"""Seeded instance generators for each supported graph class."""

import random

from .discharging import rotation_from_faces, trace_faces
from .graph import Graph, degeneracy, find_claw, triangles
from .verify import ListAssignment


def gen_2degenerate(n, seed):
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        r = rng.random()
        want = 2 if r < 0.7 else (1 if r < 0.95 else 0)
        for u in rng.sample(range(v), min(want, v)):
            edges.append((u, v))
    g = Graph.from_edges(range(n), edges)
    assert degeneracy(g) <= 2
    return g


def _claw_at(adj, center):
    nbrs = sorted(adj[center])
    for i, a in enumerate(nbrs):
        for j in range(i + 1, len(nbrs)):
            b = nbrs[j]
            if b in adj[a]:
                continue
            for c in nbrs[j + 1:]:
                if c not in adj[a] and c not in adj[b]:
                    return True
    return False


def gen_clawfree_3deg(n, seed):
    """Grow from a triangle by attaching new vertices to an edge or a triangle.

    Candidates are tried in seeded random order and the first one that keeps
    the graph claw-free is accepted.  The new vertex has degree <= 3, so the
    degeneracy never exceeds 3.  When no attachment is claw-free the growth
    continues from a fresh triangle (or a smaller clique near the end).
    """
    if n < 3:
        raise ValueError("gen_clawfree_3deg needs n >= 3")
    rng = random.Random(seed)
    adj = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    z = 3
    while z < n:
        g = Graph(adj)
        candidates = g.edges() + sorted(triangles(g))
        rng.shuffle(candidates)
        for attach in candidates:
            adj[z] = set(attach)
            for a in attach:
                adj[a].add(z)
            if not any(_claw_at(adj, a) for a in attach):
                break
            for a in attach:
                adj[a].discard(z)
            del adj[z]
        else:
            clique = range(z, min(z + 3, n))
            for v in clique:
                adj[v] = set(clique) - {v}
            z = clique[-1]
        z += 1
    g = Graph(adj)
    assert find_claw(g) is None and degeneracy(g) <= 3
    return g


TETRA_FACES = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def gen_planar_triangulation(n, seed, p=0.0):
    """Stacked triangulation, optionally thinned by deleting non-bridge edges.

    Returns (graph, rotation).
    """
    if n < 4:
        raise ValueError("gen_planar_triangulation needs n >= 4")
    rng = random.Random(seed)
    faces = list(TETRA_FACES)
    for v in range(4, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.append((b, c, v))
        faces.append((c, a, v))
    rotation = {v: list(rot) for v, rot in rotation_from_faces(faces).items()}
    if p > 0:
        adj = {v: set(rot) for v, rot in rotation.items()}
        for u, v in sorted((u, v) for u in adj for v in adj[u] if u < v):
            if rng.random() >= p:
                continue
            adj[u].discard(v)
            adj[v].discard(u)
            if _reaches(adj, u, v):
                rotation[u].remove(v)
                rotation[v].remove(u)
            else:
                adj[u].add(v)
                adj[v].add(u)
    rotation = {v: tuple(rot) for v, rot in rotation.items()}
    g = Graph({v: rot for v, rot in rotation.items()})
    trace_faces(g, rotation)
    return g, rotation


def _reaches(adj, s, t):
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        if x == t:
            return True
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def gen_lists(g, k, universe, seed):
    if universe < k:
        raise ValueError(f"universe {universe} smaller than k={k}")
    rng = random.Random(seed)
    pool = range(1, universe + 1)
    return ListAssignment(k, {v: sorted(rng.sample(pool, k)) for v in g})

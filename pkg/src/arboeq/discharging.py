"""Rotation systems, face tracing and the charge-redistribution audit.

Charges are Fractions throughout; every total is compared exactly.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IrreducibleGraph, InvalidEmbedding, ParseError
from .graph import Graph, _data_lines, _ints
from .solvers import find_reducible_config

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
THREE_SEVENTHS = Fraction(3, 7)


@dataclass
class PlaneGraph:
    graph: Graph
    rotation: dict  # vertex -> tuple of neighbors in clockwise order
    faces: list = field(default_factory=list)  # closed walks, start vertex not repeated

    def face_degree(self, i):
        return len(self.faces[i])

    def face_vertices(self, i):
        return set(self.faces[i])


def _successor_maps(rotation):
    succ = {}
    for v, rot in rotation.items():
        d = len(rot)
        succ[v] = {rot[i]: rot[(i + 1) % d] for i in range(d)}
    return succ


def trace_faces(graph, rotation):
    """Trace faces of the embedding: dart (u, v) is followed by (v, w), w next after u at v."""
    for v in graph:
        rot = tuple(rotation.get(v, ()))
        if len(rot) != len(set(rot)) or set(rot) != set(graph.neighbors(v)):
            raise InvalidEmbedding(f"rotation at vertex {v} is not a permutation of its neighbors")
    extra = set(rotation) - set(graph.vertices)
    if extra:
        raise InvalidEmbedding(f"rotation given for unknown vertices {sorted(extra)}")
    if not graph.is_connected():
        raise InvalidEmbedding("graph must be connected")
    rotation = {v: tuple(rotation[v]) for v in graph}
    succ = _successor_maps(rotation)
    seen = set()
    faces = []
    for u in graph:
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, succ[b][a]
            faces.append(tuple(walk))
    if graph.n == 1:
        faces = [()]  # a lone vertex bounds one face with no darts
    if graph.n - graph.m + len(faces) != 2:
        raise InvalidEmbedding(
            f"Euler check failed: n - m + f = {graph.n} - {graph.m} + {len(faces)} != 2"
        )
    return PlaneGraph(graph, rotation, faces)


def rotation_from_faces(faces):
    """Build a rotation system from face cycles, orienting them consistently first."""
    faces = [tuple(f) for f in faces]
    edge_faces = defaultdict(list)
    for i, f in enumerate(faces):
        for j in range(len(f)):
            a, b = f[j], f[(j + 1) % len(f)]
            edge_faces[frozenset((a, b))].append(i)
    oriented = {0: faces[0]}
    queue = [0]
    while queue:
        i = queue.pop()
        f = oriented[i]
        for j in range(len(f)):
            a, b = f[j], f[(j + 1) % len(f)]
            for other in edge_faces[frozenset((a, b))]:
                if other in oriented:
                    continue
                g = faces[other]
                darts = {(g[t], g[(t + 1) % len(g)]) for t in range(len(g))}
                oriented[other] = g if (b, a) in darts else tuple(reversed(g))
                queue.append(other)
    succ = defaultdict(dict)
    for f in oriented.values():
        d = len(f)
        for j in range(d):
            a, b, c = f[j], f[(j + 1) % d], f[(j + 2) % d]
            if a in succ[b]:
                raise InvalidEmbedding("faces do not form a consistent sphere")
            succ[b][a] = c
    rotation = {}
    for v, nxt in succ.items():
        start = min(nxt)
        rot = [start]
        while nxt[rot[-1]] != start:
            rot.append(nxt[rot[-1]])
            if len(rot) > len(nxt):
                raise InvalidEmbedding(f"rotation at {v} is not a single cycle")
        if len(rot) != len(nxt):
            raise InvalidEmbedding(f"rotation at {v} is not a single cycle")
        rotation[v] = tuple(rot)
    return dict(sorted(rotation.items()))


def load_rotation(text):
    rotation = {}
    for lineno, line in _data_lines(text):
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError("expected 'v: n1 n2 ... nd'", lineno)
        (v,) = _ints(head, lineno, 1)
        if v in rotation:
            raise ParseError(f"vertex {v} listed twice", lineno)
        rotation[v] = tuple(_ints(tail, lineno))
    return rotation


def dump_rotation(rotation):
    return "".join(f"{v}: {' '.join(map(str, rot))}\n" for v, rot in sorted(rotation.items()))


def plane_graph_from_rotation(rotation):
    edges = {(min(u, v), max(u, v)) for u, rot in rotation.items() for v in rot}
    g = Graph.from_edges(rotation.keys(), edges)
    return trace_faces(g, rotation)


def tetrahedron():
    return plane_graph_from_rotation(rotation_from_faces([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]))


def cube():
    faces = [
        (0, 1, 2, 3), (4, 5, 6, 7), (0, 1, 5, 4),
        (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7),
    ]
    return plane_graph_from_rotation(rotation_from_faces(faces))


def icosahedron():
    # 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append((0, up[i], up[j]))
        faces.append((up[i], lo[i], up[j]))
        faces.append((up[j], lo[i], lo[j]))
        faces.append((11, lo[j], lo[i]))
    return plane_graph_from_rotation(rotation_from_faces(faces))


NAMED = {"tetrahedron": tetrahedron, "cube": cube, "icosahedron": icosahedron}


def vkey(v):
    return ("v", v)


def fkey(i):
    return ("f", i)


def element_name(key):
    return f"{key[0]}{key[1]}"


@dataclass
class ChargeLedger:
    initial: dict
    transfers: list = field(default_factory=list)  # (source, target, amount, rule)
    final: dict = field(default_factory=dict)
    gamma: dict = field(default_factory=dict)
    n5: dict = field(default_factory=dict)
    n3: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)

    def move(self, source, target, amount, rule):
        self.transfers.append((source, target, amount, rule))
        self.final[source] -= amount
        self.final[target] += amount

    def total_initial(self):
        return sum(self.initial.values(), Fraction(0))

    def total_final(self):
        return sum(self.final.values(), Fraction(0))

    def balance_ok(self):
        inflow = defaultdict(Fraction)
        outflow = defaultdict(Fraction)
        for s, t, amt, _ in self.transfers:
            outflow[s] += amt
            inflow[t] += amt
        return all(
            self.final[x] == self.initial[x] + inflow[x] - outflow[x] for x in self.initial
        )


def initial_charges(pg):
    g = pg.graph
    initial = {vkey(v): Fraction(g.degree(v) - 4) for v in g}
    for i in range(len(pg.faces)):
        initial[fkey(i)] = Fraction(pg.face_degree(i) - 4)
    ledger = ChargeLedger(initial, final=dict(initial))
    total = ledger.total_initial()
    if total != -8:
        raise InvalidEmbedding(f"initial charges sum to {total}, expected -8")
    return ledger


def apply_discharging(pg):
    g = pg.graph
    deg = g.degrees()
    delta, top = g.min_degree, g.max_degree
    ledger = initial_charges(pg)

    for v in g:
        ledger.n3[vkey(v)] = sum(1 for w in g.neighbors(v) if deg[w] == 3)

    # R1
    for v in g:
        if deg[v] == 3 and all(deg[w] == top for w in g.neighbors(v)):
            for w in sorted(g.neighbors(v)):
                ledger.move(vkey(w), vkey(v), THIRD, "R1")

    three_faces = [i for i in range(len(pg.faces)) if pg.face_degree(i) == 3]
    considerable = [i for i in three_faces if all(deg[x] >= 4 for x in pg.faces[i])]

    # R2
    for i in considerable:
        f = fkey(i)
        corners = sorted(pg.faces[i])
        half_sent = set()
        for u in corners:
            if delta <= 3 and deg[u] == 6:
                ledger.move(vkey(u), f, THIRD, "R2.1")
            elif delta <= 3 and deg[u] == 7:
                ledger.move(vkey(u), f, THREE_SEVENTHS, "R2.2")
            elif deg[u] >= 8:
                ledger.move(vkey(u), f, HALF, "R2.3")
                half_sent.add(u)
        if delta == 4:
            for u in corners:
                if deg[u] != 4:
                    continue
                for w in corners:
                    # a corner pays at most 1/2 to a face under R2.3/R2.4 together
                    if w != u and w not in half_sent:
                        ledger.move(vkey(w), f, HALF, "R2.4")
                        half_sent.add(w)

    # R3
    if delta >= 4:
        for i in three_faces:
            if not all(deg[x] >= 5 for x in pg.faces[i]):
                continue
            f = fkey(i)
            for u in sorted(pg.faces[i]):
                if deg[u] == 6:
                    ledger.move(vkey(u), f, THIRD, "R3.1")
                elif deg[u] == 7:
                    ledger.move(vkey(u), f, THREE_SEVENTHS, "R3.2")

    # R4: deficits measured after R2 and R3, before any R4 transfer
    deficits = {}
    for i in range(len(pg.faces)):
        if all(deg[x] >= 4 for x in pg.faces[i]) and ledger.final[fkey(i)] < 0:
            deficits[i] = -ledger.final[fkey(i)]
    for i, gamma in deficits.items():
        f = fkey(i)
        fives = sorted(x for x in set(pg.faces[i]) if deg[x] == 5)
        ledger.gamma[f] = gamma
        ledger.n5[f] = len(fives)
        if not fives:
            ledger.findings.append(f"R4 skipped: {element_name(f)} has deficit {gamma} and no 5-vertex")
            continue
        share = gamma / len(fives)
        for u in fives:
            ledger.move(vkey(u), f, share, "R4")

    for key in sorted(ledger.final):
        if ledger.final[key] < 0:
            ledger.findings.append(f"negative final charge: {element_name(key)} = {ledger.final[key]}")
    total = ledger.total_final()
    if total != -8:
        raise AssertionError(f"charge not conserved: final total {total}")
    return ledger


@dataclass
class DischargingReport:
    ledger: ChargeLedger
    negative: list
    config: object
    n: int
    m: int
    faces: int

    def to_text(self):
        led = self.ledger
        lines = [
            f"n {self.n}",
            f"m {self.m}",
            f"faces {self.faces}",
            f"total_initial {led.total_initial()}",
            f"total_final {led.total_final()}",
        ]
        for key in sorted(led.initial):
            lines.append(f"charge {element_name(key)} initial {led.initial[key]} final {led.final[key]}")
        for s, t, amt, rule in led.transfers:
            lines.append(f"transfer {rule} {element_name(s)} -> {element_name(t)} {amt}")
        lines.append("negative " + " ".join(element_name(x) for x in self.negative))
        lines.append(f"config {self.config if self.config is not None else 'none'}")
        for finding in led.findings:
            lines.append(f"finding {finding}")
        return "\n".join(lines) + "\n"


def discharging_report(pg):
    ledger = apply_discharging(pg)
    negative = [key for key in sorted(ledger.final) if ledger.final[key] < 0]
    try:
        config = find_reducible_config(pg.graph)
    except IrreducibleGraph:
        config = None
        ledger.findings.append("no reducible configuration found")
    g = pg.graph
    return DischargingReport(ledger, negative, config, g.n, g.m, len(pg.faces))

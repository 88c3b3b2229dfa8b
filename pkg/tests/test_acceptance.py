"""Acceptance criteria 1-9.  Each test records a PASS/FAIL line printed in the summary."""

import random
import time
from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest

from arboeq.discharging import NAMED, apply_discharging, fkey, icosahedron, trace_faces, vkey
from arboeq.errors import ArboeqError
from arboeq.generators import gen_2degenerate, gen_clawfree_3deg, gen_lists, gen_planar_triangulation
from arboeq.graph import Graph, degeneracy, is_claw_free
from arboeq.oracle import oracle_equitable_point_arboricity, oracle_feasible, oracle_list_sweep
from arboeq.reduction import lemma2_extend
from arboeq.solvers import (
    detect_class,
    min_k,
    solve_2degenerate,
    solve_auto,
    solve_clawfree_3deg,
    solve_complete,
    solve_planar,
)
from arboeq.verify import ListAssignment, verify_equitable_arboreal

import conftest
from conftest import random_lemma2_instance


def record(number, ok, detail):
    conftest.ACCEPTANCE[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


def check(number, budget, body):
    start = time.perf_counter()
    failures, detail = body()
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < budget
    record(number, ok, f"{detail}; {elapsed:.2f}s (budget {budget}s)")
    assert not failures, failures[:5]
    assert elapsed < budget


def test_criterion_1_complete_graphs():
    def body():
        failures = []
        runs = 0
        for n in range(2, 10):
            g = Graph.complete(n)
            k = -(-n // 2)
            for seed in range(200):
                lists = gen_lists(g, k, 2 * k, seed)
                coloring = solve_complete(n, lists, k)
                runs += 1
                if not verify_equitable_arboreal(g, lists, coloring).ok:
                    failures.append((n, seed, "verify"))
                if max(Counter(coloring.values()).values()) > 2:
                    failures.append((n, seed, "class size"))
        return failures, f"{runs} K_n instances verified"

    check(1, 1.0, body)


def test_criterion_2_sharpness():
    def body():
        failures = []
        for n in range(3, 8):
            g = Graph.complete(n)
            want = -(-n // 2)
            got = oracle_equitable_point_arboricity(g, n)
            below = want - 1
            below_ok = not oracle_feasible(
                g, ListAssignment.uniform(g.vertices, range(1, below + 1)), below
            ).feasible
            if got != want or not below_ok:
                failures.append((n, got, want))
        return failures, "arboricity of K_3..K_7 equals ceil(n/2)"

    check(2, 10.0, body)


def test_criterion_3_two_degenerate():
    def body():
        failures = []
        sizes = []
        for i in range(100):
            n = max(2, 200 - 2 * i)
            g = gen_2degenerate(n, i)
            assert degeneracy(g) <= 2
            base = min_k("2deg", g)
            for k in (base, base + 1):
                lists = gen_lists(g, k, 2 * k, 1000 * i + k)
                coloring = solve_2degenerate(g, lists, k)
                if not verify_equitable_arboreal(g, lists, coloring).ok:
                    failures.append((i, k))
            sizes.append(n)
        return failures, f"100 graphs, n {min(sizes)}..{max(sizes)}, k and k+1"

    check(3, 30.0, body)


def test_criterion_4_clawfree():
    def body():
        failures = []
        for i in range(100):
            n = 3 + (97 * i) // 99
            g = gen_clawfree_3deg(n, i)
            assert is_claw_free(g) and degeneracy(g) <= 3
            k = min_k("clawfree3", g)
            lists = gen_lists(g, k, 2 * k, i)
            coloring = solve_clawfree_3deg(g, lists, k)
            if not verify_equitable_arboreal(g, lists, coloring).ok:
                failures.append((i, k))
        return failures, "100 graphs, n 3..100"

    check(4, 60.0, body)


def test_criterion_5_planar():
    def body():
        failures = []
        steps = Counter()
        for i in range(100):
            n = max(4, 300 - 3 * i)
            p = 0.0 if i % 2 == 0 else 0.3
            g, _ = gen_planar_triangulation(n, i, p)
            k = min_k("planar", g)
            lists = gen_lists(g, k, 2 * k, i)
            trace = []
            coloring = solve_planar(g, lists, k, trace=trace)
            if not verify_equitable_arboreal(g, lists, coloring).ok:
                failures.append((i, "verify"))
            for step in trace:
                # every reduction step below the base case came from a matched configuration
                if step.kind not in ("base", "isolated") and not step.kind.startswith("C"):
                    failures.append((i, step.kind))
                steps[step.kind] += 1
            if trace[-1].kind != "base":
                failures.append((i, "no base"))
        kinds = " ".join(f"{kind}:{steps[kind]}" for kind in sorted(steps))
        return failures, f"100 graphs (50 thinned), n 4..300; steps {kinds}"

    check(5, 120.0, body)


def test_criterion_6_lemma_kernel():
    def body():
        failures = []
        rng = random.Random(20261015)
        for t in range(1000):
            g, s, lists, base = random_lemma2_instance(rng)
            try:
                out = lemma2_extend(g, s, base, lists, s.k)
            except ArboeqError as exc:
                failures.append((t, str(exc)))
                continue
            if not verify_equitable_arboreal(g, lists, out).ok:
                failures.append((t, "verify"))
            for x in s:
                if sum(1 for w in g.neighbors(x) if out[w] == out[x]) > 1:
                    failures.append((t, "same-colored neighbors", x))
        return failures, "1000 random (g, S, L) instances"

    check(6, 60.0, body)


def test_criterion_7_discharging():
    def body():
        failures = []
        graphs = [make() for make in NAMED.values()]
        for i in range(100):
            g, rot = gen_planar_triangulation(4 + i, i, p=(i % 4) * 0.15)
            graphs.append(trace_faces(g, rot))
        for pg in graphs:
            led = apply_discharging(pg)
            if led.total_initial() != -8 or led.total_final() != -8 or not led.balance_ok():
                failures.append(pg.graph.n)
        ico = icosahedron()
        led = apply_discharging(ico)
        if any(led.final[fkey(i)] != 0 for i in range(len(ico.faces))):
            failures.append("icosahedron faces")
        if any(led.final[vkey(v)] != Fraction(-2, 3) for v in ico.graph):
            failures.append("icosahedron vertices")
        return failures, f"{len(graphs)} plane graphs conserve -8 exactly"

    check(7, 10.0, body)


def _instances_for(cls, rng):
    if cls == "complete":
        return Graph.complete(rng.randint(2, 10))
    if cls == "2deg":
        return gen_2degenerate(rng.randint(2, 10), rng.randrange(10**6))
    if cls == "clawfree3":
        return gen_clawfree_3deg(rng.randint(3, 10), rng.randrange(10**6))
    return gen_planar_triangulation(rng.randint(4, 10), rng.randrange(10**6), rng.choice([0.0, 0.3]))[0]


def test_criterion_8_oracle_cross_validation():
    def body():
        failures = []
        rng = random.Random(8)
        for cls in ("complete", "2deg", "clawfree3", "planar"):
            for t in range(50):
                g = _instances_for(cls, rng)
                k = min_k(cls, g) + rng.choice([0, 0, 1])
                lists = gen_lists(g, k, rng.randint(k, 2 * k), rng.randrange(10**6))
                try:
                    _, coloring = solve_auto(g, lists, k, planar=cls == "planar", cls=cls)
                    solver_ok = verify_equitable_arboreal(g, lists, coloring).ok
                except ArboeqError:
                    solver_ok = False
                res = oracle_feasible(g, lists, k)
                if solver_ok != res.feasible:
                    failures.append((cls, t, solver_ok, res.feasible))
                if res.feasible and not verify_equitable_arboreal(g, lists, res.witness).ok:
                    failures.append((cls, t, "witness"))
        return failures, "200 instances, solver and oracle agree"

    check(8, 60.0, body)


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(range(n), [e for b, e in enumerate(pairs) if mask >> b & 1])


def sweep_k(g):
    name = detect_class(g, planar=True).name
    if name == "complete":
        floor = -(-g.n // 2)
    else:
        floor = {"2deg": 2, "clawfree3": 3, "planar": 5}[name]
    return max((g.max_degree + 2) // 2, min(floor, 3))


def test_criterion_9_list_sweep():
    def body():
        failures = []
        count = 0
        for n in range(1, 5):
            for g in all_graphs(n):
                k = sweep_k(g)
                bad = oracle_list_sweep(g, k, k + 2)
                count += 1
                if bad is not None:
                    failures.append((g.edges(), k))
        return failures, f"{count} labeled graphs on 1..4 vertices: none within universe k+2"

    check(9, 300.0, body)

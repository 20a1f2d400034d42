"""Compare the compiled containment kernel against the pure-Python one.

Runs identical find_forest workloads through both backends, checks that
the results agree call for call, and prints a timing table.  The
workloads mirror how the library actually uses the kernel:

* swap-scan: feasibility probes while toggling edges of a near-extremal
  graph, the inner loop of hill_climb_search
* random: mixed-density random graphs with several forest shapes
* family: structured dense graphs where the search has to backtrack

Usage: python3 benchmarks/bench_backends.py [--seed N] [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from spectral_turan import Broom, FKernel, GraphBuilder, SplitS, build_family
from spectral_turan._kernels import pure

try:
    from spectral_turan._kernels import _core
except ImportError:
    _core = None


def random_adj(rng: random.Random, n: int, p: float) -> tuple[int, ...]:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return tuple(adj)


def swap_scan_cases(rng: random.Random) -> list[tuple]:
    g = build_family(FKernel(26, 2))
    b = GraphBuilder.from_graph(g)
    parts = (3, 3)
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if b.has_edge(u, v)]
    gaps = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not b.has_edge(u, v)]
    cases = []
    for u, v in rng.sample(edges, min(40, len(edges))):
        b.remove_edge(u, v)
        for x, y in rng.sample(gaps, min(25, len(gaps))):
            b.add_edge(x, y)
            cases.append((b.n, tuple(b.adj), parts, 10**9))
            b.remove_edge(x, y)
        b.add_edge(u, v)
    return cases


def random_cases(rng: random.Random) -> list[tuple]:
    specs = [(3, 3), (3, 3, 3), (5, 3), (2, 2, 2, 2)]
    cases = []
    for _ in range(1000):
        n = rng.randint(8, 22)
        adj = random_adj(rng, n, rng.choice([0.15, 0.3, 0.5]))
        cases.append((n, adj, rng.choice(specs), 10**9))
    return cases


def family_cases(rng: random.Random) -> list[tuple]:
    # infeasible shapes in dense symmetric graphs explode, so cap the
    # budget; both backends spend it at identical points
    graphs = [
        build_family(SplitS(40, 3)),
        build_family(SplitS(56, 4)),
        build_family(Broom(30, 5)),
        build_family(FKernel(48, 3)),
    ]
    cases = []
    for g in graphs:
        for parts in [(3, 3, 3), (3, 3, 3, 3), (7, 5), (9,)]:
            cases.append((g.n, g.adj, parts, 10**5))
    return cases


def run(backend, cases: list[tuple], repeat: int) -> tuple[float, list]:
    results = [backend.find_forest(*c) for c in cases]
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for c in cases:
            backend.find_forest(*c)
        best = min(best, time.perf_counter() - t0)
    return best, results


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3, help="timing repetitions, best is kept")
    args = ap.parse_args()

    if _core is None:
        print("compiled backend not built; nothing to compare")
        return 1

    rng = random.Random(args.seed)
    workloads = [
        ("swap-scan", swap_scan_cases(rng)),
        ("random", random_cases(rng)),
        ("family", family_cases(rng)),
    ]

    print(f"{'workload':<12} {'calls':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, cases in workloads:
        t_pure, r_pure = run(pure, cases, args.repeat)
        t_core, r_core = run(_core, cases, args.repeat)
        if r_pure != r_core:
            print(f"{name}: BACKEND MISMATCH")
            return 1
        print(f"{name:<12} {len(cases):>6} {t_pure:>10.4f} {t_core:>13.4f} {t_pure / t_core:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

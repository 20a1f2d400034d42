"""Isomorph-free graph generation, exhaustive extremal search over it, and
seeded stochastic hill climbing for orders beyond the enumeration cap.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

import numpy as np

from . import _kernels
from .errors import BudgetExhaustedError, InfeasibleParameterError, SizeCapError
from .forests import DEFAULT_BUDGET, LinearForestSpec, is_forest_free
from .graph6 import encode_graph6
from .graphs import Graph, GraphBuilder, bipartition, components
from .spectral import DEFAULT_TOL, adjacency_matrix, spectral_radius

ENUM_CAP = 10

# spectral-objective comparison tolerances: improvements must clear _RHO_TOL,
# plateau moves stay within _RHO_PLATEAU
_RHO_TOL = 1e-9
_RHO_PLATEAU = 1e-12
_PLATEAU_CAP = 25

# candidate evaluations get this many power iterations before falling back to
# the per-component solver
_FAST_CAP = 20000


class Objective(Enum):
    EDGES = "edges"
    SPECTRAL_RADIUS = "rho"


class GraphClass(Enum):
    ALL = "all"
    BIPARTITE = "bipartite"
    CONNECTED = "connected"


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    spec: LinearForestSpec
    objective: Objective
    graph_class: GraphClass
    optimum: int | float
    witnesses: tuple[str, ...]
    visited: int
    exhaustive: bool


@dataclass(frozen=True)
class SearchReport(ExtremalReport):
    seed: int = 0
    restarts: int = 0
    steps: int = 0
    best_trajectory: tuple[int | float, ...] = ()


def canonical_form(g: Graph) -> bytes:
    """graph6 encoding of the canonical relabeling: equal byte strings iff
    the graphs are isomorphic. The body realizes the lexicographically
    minimal upper-triangle bit string over all vertex orderings."""
    key = _kernels.canon_bits(g.n, g.adj)
    return encode_graph6(_graph_from_key(g.n, key))


def _graph_from_key(n: int, key: int) -> Graph:
    b = GraphBuilder(n)
    t = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            t -= 1
            if (key >> t) & 1:
                b.add_edge(i, j)
    return b.build()


def _level_keys(n: int, prune: Callable[[Graph], bool] | None) -> list[int]:
    """Canonical keys of all isomorphism classes at order n, grown one vertex
    at a time with global per-level deduplication. prune, when given, must be
    a hereditary keep-predicate (true on every induced subgraph of anything
    it accepts); it is applied at every level to cut the tree.
    """
    if n < 1:
        raise ValueError("enumeration needs n >= 1")
    if n > ENUM_CAP:
        raise SizeCapError(f"enumeration is capped at n <= {ENUM_CAP}")
    keys = [0]
    for m in range(2, n + 1):
        nxt: set[int] = set()
        for key in keys:
            parent = _graph_from_key(m - 1, key)
            for mask in range(1 << (m - 1)):
                adj = list(parent.adj)
                adj.append(mask)
                rest = mask
                while rest:
                    low = rest & -rest
                    adj[low.bit_length() - 1] |= 1 << (m - 1)
                    rest ^= low
                child = Graph(m, tuple(adj))
                if prune is not None and not prune(child):
                    continue
                nxt.add(_kernels.canon_bits(m, adj))
        keys = sorted(nxt)
    return keys


def enumerate_graphs(
    n: int, predicate: Callable[[Graph], bool] | None = None
) -> Iterator[Graph]:
    """One representative per isomorphism class of order n, in a fixed
    deterministic order, optionally filtered. The predicate is a plain final
    filter; it need not be hereditary."""
    for key in _level_keys(n, None):
        g = _graph_from_key(n, key)
        if predicate is None or predicate(g):
            yield g


def enumerate_bipartite(
    n: int, predicate: Callable[[Graph], bool] | None = None
) -> Iterator[Graph]:
    """One representative per isomorphism class of bipartite graphs of order
    n. Bipartiteness is hereditary, so it prunes the generation tree."""
    for key in _level_keys(n, lambda g: bipartition(g) is not None):
        g = _graph_from_key(n, key)
        if predicate is None or predicate(g):
            yield g


def _in_class(g: Graph, graph_class: GraphClass) -> bool:
    if graph_class is GraphClass.BIPARTITE:
        return bipartition(g) is not None
    if graph_class is GraphClass.CONNECTED:
        return g.is_connected()
    return True


def _objective_value(g: Graph, objective: Objective, start=None) -> int | float:
    if objective is Objective.EDGES:
        return g.edge_count()
    return spectral_radius(g, start=start).value


def exhaustive_extremal(
    n: int,
    spec: LinearForestSpec,
    objective: Objective,
    graph_class: GraphClass = GraphClass.ALL,
) -> ExtremalReport:
    """Exact optimum over every isomorphism class in the graph class that
    avoids the forest, with all optimizers listed.

    Freeness and bipartiteness are hereditary, so both prune the generation
    tree; connectivity is not and is filtered at the end.
    """
    def prune(g: Graph) -> bool:
        if graph_class is GraphClass.BIPARTITE and bipartition(g) is None:
            return False
        return is_forest_free(g, spec)

    candidates = [
        _graph_from_key(n, key) for key in _level_keys(n, prune)
    ]
    if graph_class is GraphClass.CONNECTED:
        candidates = [g for g in candidates if g.is_connected()]
    if not candidates:
        # only the connected class can be empty: the edgeless graph is
        # free and bipartite, but P2/P3 specs rule out every connected seed
        raise InfeasibleParameterError(
            f"no {graph_class.value} {spec}-free graph of order {n} exists"
        )
    values = [_objective_value(g, objective) for g in candidates]
    if objective is Objective.EDGES:
        optimum = max(values)
        winners = [g for g, v in zip(candidates, values) if v == optimum]
    else:
        optimum = max(values)
        winners = [
            g for g, v in zip(candidates, values) if v >= optimum - _RHO_TOL
        ]
    witnesses = tuple(
        sorted(canonical_form(g).decode("ascii") for g in winners)
    )
    return ExtremalReport(
        n=n,
        spec=spec,
        objective=objective,
        graph_class=graph_class,
        optimum=optimum,
        witnesses=witnesses,
        visited=len(candidates),
        exhaustive=True,
    )


def _feasible(b: GraphBuilder, spec: LinearForestSpec, graph_class: GraphClass) -> bool:
    # the class predicates only read .n/.adj, which builders share with
    # Graph, so the hot loop skips immutable-Graph validation entirely
    if graph_class is GraphClass.BIPARTITE:
        if bipartition(b) is None:
            return False
    elif graph_class is GraphClass.CONNECTED:
        if b.n > 1 and len(components(b)) != 1:
            return False
    status, _, _ = _kernels.find_forest(b.n, b.adj, spec.parts, DEFAULT_BUDGET)
    if status == _kernels.BUDGET_EXHAUSTED:
        raise BudgetExhaustedError(DEFAULT_BUDGET)
    return status == _kernels.NOT_FOUND


def _all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _greedy_fill(
    b: GraphBuilder,
    order: list[tuple[int, int]],
    spec: LinearForestSpec,
    graph_class: GraphClass,
) -> None:
    for u, v in order:
        if b.has_edge(u, v):
            continue
        b.add_edge(u, v)
        if not _feasible(b, spec, graph_class):
            b.remove_edge(u, v)


def _tree_from_prufer(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        u = heapq.heappop(leaves)
        edges.append((min(u, v), max(u, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def _connected_start(b: GraphBuilder, spec: LinearForestSpec, rng: random.Random) -> None:
    """Seed the builder with a connected spec-free graph.

    Edge additions never disconnect a graph, so only the seed needs care: a
    uniform random labeled tree when it happens to be free, else a star,
    which avoids every forest with two paths or one path of order >= 4.
    The remaining specs (a single P2 or P3) admit no connected host beyond
    one or two vertices at all.
    """
    n = b.n
    if n <= 1:
        return
    tree = _tree_from_prufer([rng.randrange(n) for _ in range(n - 2)], n)
    for u, v in tree:
        b.add_edge(u, v)
    if _feasible(b, spec, GraphClass.CONNECTED):
        return
    for u, v in tree:
        b.remove_edge(u, v)
    hub = rng.randrange(n)
    for v in range(n):
        if v != hub:
            b.add_edge(min(hub, v), max(hub, v))
    if _feasible(b, spec, GraphClass.CONNECTED):
        return
    raise InfeasibleParameterError(
        f"no connected {spec}-free graph of order {n} exists"
    )


def _dense_plus_identity(g: Graph) -> np.ndarray:
    m = adjacency_matrix(g)
    m[np.diag_indices(g.n)] = 1.0
    return m


def _rho_fast(m: np.ndarray, start, tol: float) -> float | None:
    """Value-only power iteration on a dense A+I matrix, across components at
    once. A strictly positive start overlaps every component's top
    eigenvector, so the iterate converges to the global spectral radius; the
    warm vector (nonnegative, possibly zero off its own component) is mixed
    with a constant to keep that property. Returns None when the residual
    target is not met within the cap, e.g. two non-isomorphic components tied
    to within the tolerance window; callers then rerun the per-component
    solver."""
    if start is None:
        v = np.ones(m.shape[0])
    else:
        v = start + 1e-2
    z = m @ v
    for _ in range(_FAST_CAP):
        w = z / np.linalg.norm(z)
        z = m @ w
        lam = float(w @ z)
        if float(np.max(np.abs(z - lam * w))) <= tol:
            return lam - 1.0
    return None


def _candidate_rho(m, b, start_vec):
    val = _rho_fast(m, start_vec, DEFAULT_TOL)
    if val is None:
        val = spectral_radius(b.build(), start=start_vec).value
    return val


def _best_addition(b, spec, graph_class, objective, start_vec, m):
    """Best feasibility-preserving edge addition, or None. For the edge
    objective every addition gains one edge, so the tie rule (lowest
    canonical edge index, i.e. lexicographically first pair) decides; for the
    spectral objective each candidate is eigensolved and ties within 1e-9
    fall back to the same pair order."""
    best_pair = None
    best_val = None
    for u, v in _all_pairs(b.n):
        if b.has_edge(u, v):
            continue
        b.add_edge(u, v)
        ok = _feasible(b, spec, graph_class)
        if ok and objective is Objective.EDGES:
            b.remove_edge(u, v)
            return u, v
        if ok:
            m[u, v] = m[v, u] = 1.0
            val = _candidate_rho(m, b, start_vec)
            m[u, v] = m[v, u] = 0.0
            if best_val is None or val > best_val + _RHO_TOL:
                best_val, best_pair = val, (u, v)
        b.remove_edge(u, v)
    return best_pair


def _find_swap(b, spec, graph_class, objective, cur_val, tabu, start_vec, m):
    """First improving (remove, add) edge swap in lexicographic order, else
    the first plateau swap, skipping the immediate reversal of the previous
    swap. Swaps preserve the edge count, so for the edge objective every
    feasible swap is a plateau move."""
    plateau = None
    spectral = objective is Objective.SPECTRAL_RADIUS
    edges = b.build().edges()
    for rem in edges:
        b.remove_edge(*rem)
        if spectral:
            m[rem[0], rem[1]] = m[rem[1], rem[0]] = 0.0
        for add in _all_pairs(b.n):
            if b.has_edge(*add) or add == rem:
                continue
            if tabu is not None and (rem, add) == tabu:
                continue
            b.add_edge(*add)
            if _feasible(b, spec, graph_class):
                if not spectral:
                    # nothing can improve an edge-count swap: the first
                    # feasible swap is the lexicographic plateau move
                    plateau = (rem, add)
                    b.remove_edge(*add)
                    break
                m[add[0], add[1]] = m[add[1], add[0]] = 1.0
                val = _candidate_rho(m, b, start_vec)
                m[add[0], add[1]] = m[add[1], add[0]] = 0.0
                if val > cur_val + _RHO_TOL:
                    b.remove_edge(*add)
                    b.add_edge(*rem)
                    m[rem[0], rem[1]] = m[rem[1], rem[0]] = 1.0
                    return (rem, add), True
                if plateau is None and abs(val - cur_val) <= _RHO_PLATEAU:
                    plateau = (rem, add)
            b.remove_edge(*add)
        b.add_edge(*rem)
        if spectral:
            m[rem[0], rem[1]] = m[rem[1], rem[0]] = 1.0
        elif plateau is not None:
            break
    if plateau is not None:
        return plateau, False
    return None


def hill_climb_search(
    n: int,
    spec: LinearForestSpec,
    objective: Objective,
    graph_class: GraphClass = GraphClass.ALL,
    seed: int = 0,
    restarts: int = 50,
    step_budget: int = 10**5,
) -> SearchReport:
    """Seeded stochastic lower-bound search. Deterministic for a given seed:
    restart r draws from random.Random(f"{seed}:{r}") (Mersenne Twister, see
    README). Even restarts grow greedily around a random hub, odd restarts
    grow from a uniformly shuffled pair order; both are followed by
    best-addition moves, then first-improving edge swaps with bounded
    plateau walking and an immediate-reversal tabu. steps counts applied
    improvement-loop moves. The reported optimum is a lower bound, never a
    claim of exhaustiveness; visited counts the distinct near-optimal
    isomorphism classes that were tracked as witness candidates.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    best: int | float | None = None
    pool: dict[str, int | float] = {}
    trajectory: list[int | float] = []
    total_steps = 0

    def consider(g: Graph, val) -> None:
        nonlocal best
        if best is None:
            best = val
        elif val > best:
            best = val
        if objective is Objective.EDGES:
            near = val == best
        else:
            near = val >= best - _RHO_TOL
        if near:
            key = canonical_form(g).decode("ascii")
            prev = pool.get(key)
            if prev is None or val > prev:
                pool[key] = val

    for r in range(restarts):
        rng = random.Random(f"{seed}:{r}")
        b = GraphBuilder(n)
        pairs = _all_pairs(n)
        if graph_class is GraphClass.CONNECTED:
            # a tree seed keeps every later state connected; fill from there
            _connected_start(b, spec, rng)
            rng.shuffle(pairs)
            _greedy_fill(b, pairs, spec, graph_class)
        elif r % 2 == 0:
            hub = rng.randrange(n)
            star = [(min(hub, v), max(hub, v)) for v in range(n) if v != hub]
            rng.shuffle(star)
            rest = [p for p in pairs if hub not in p]
            rng.shuffle(rest)
            _greedy_fill(b, star + rest, spec, graph_class)
        else:
            rng.shuffle(pairs)
            _greedy_fill(b, pairs, spec, graph_class)

        steps = 0
        plateaus = 0
        tabu = None
        cur = b.build()
        vec = None
        mat = None
        if objective is Objective.SPECTRAL_RADIUS:
            res = spectral_radius(cur)
            cur_val, vec = res.value, res.vector
            mat = _dense_plus_identity(cur)
        else:
            cur_val = cur.edge_count()
        restart_best = cur_val
        consider(cur, cur_val)
        while steps < step_budget:
            add = _best_addition(b, spec, graph_class, objective, vec, mat)
            if add is not None:
                b.add_edge(*add)
                tabu = None
            else:
                swap = _find_swap(
                    b, spec, graph_class, objective, cur_val, tabu, vec, mat
                )
                if swap is None:
                    break
                (rem, new_edge), improving = swap
                b.remove_edge(*rem)
                b.add_edge(*new_edge)
                tabu = (new_edge, rem)
                if improving:
                    plateaus = 0
                else:
                    plateaus += 1
            cur = b.build()
            if objective is Objective.SPECTRAL_RADIUS:
                res = spectral_radius(cur, start=vec)
                cur_val, vec = res.value, res.vector
                mat = _dense_plus_identity(cur)
            else:
                cur_val = cur.edge_count()
            steps += 1
            restart_best = max(restart_best, cur_val)
            consider(cur, cur_val)
            if plateaus > _PLATEAU_CAP:
                break
        trajectory.append(restart_best)
        total_steps += steps

    assert best is not None
    if objective is Objective.EDGES:
        witnesses = tuple(sorted(k for k, v in pool.items() if v == best))
    else:
        witnesses = tuple(
            sorted(k for k, v in pool.items() if v >= best - _RHO_TOL)
        )
    return SearchReport(
        n=n,
        spec=spec,
        objective=objective,
        graph_class=graph_class,
        optimum=best,
        witnesses=witnesses,
        visited=len(pool),
        exhaustive=False,
        seed=seed,
        restarts=restarts,
        steps=total_steps,
        best_trajectory=tuple(trajectory),
    )

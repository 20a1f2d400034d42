"""Immutable simple graphs over per-vertex bitsets, plus the named families.

Vertices are 0..n-1. adj[i] is an arbitrary-precision int whose bit j says
whether {i, j} is an edge, so the representation handles any order up to the
hard cap without word bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FamilyParameterError, SizeCapError

MAX_VERTICES = 4096


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. Validated on every construction."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "adj", tuple(self.adj))
        n, adj = self.n, self.adj
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if n > MAX_VERTICES:
            raise SizeCapError(f"n={n} exceeds the hard cap of {MAX_VERTICES} vertices")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for n={n}")
        for i, m in enumerate(adj):
            if m < 0 or m >> n:
                raise ValueError(f"adjacency row {i} has bits outside 0..{n - 1}")
            if (m >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            rest = m >> (i + 1)
            while rest:
                j = i + 1 + (rest & -rest).bit_length() - 1
                if not (adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric edge ({i},{j})")
                rest &= rest - 1

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        b = GraphBuilder(n)
        for u, v in edges:
            b.add_edge(u, v)
        return b.build()

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def max_degree(self) -> int:
        return max(self.degrees()) if self.n else 0

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.adj[v]
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            rest = self.adj[i] >> (i + 1)
            while rest:
                j = i + 1 + (rest & -rest).bit_length() - 1
                out.append((i, j))
                rest &= rest - 1
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1


class GraphBuilder:
    """Mutable adjacency scratchpad: the only mutation path in the package.

    enumerate/search mutate builders privately and publish immutable Graphs.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"n must be in 0..{MAX_VERTICES}")
        self.n = n
        self.adj = [0] * n

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphBuilder":
        b = cls(g.n)
        b.adj = list(g.adj)
        return b

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u},{v}) out of bounds for n={self.n}")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def build(self) -> Graph:
        return Graph(self.n, tuple(self.adj))


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class EmptyGraph:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int


@dataclass(frozen=True)
class Broom:
    """Spider with s legs of two edges and n-2s-1 pendant edges at the center."""

    n: int
    s: int


@dataclass(frozen=True)
class SplitS:
    """Clique on h vertices joined to n-h isolated vertices."""

    n: int
    h: int


@dataclass(frozen=True)
class SplitSPlus:
    """SplitS(n, h) plus one edge inside the independent side."""

    n: int
    h: int


@dataclass(frozen=True)
class FKernel:
    """Clique on k-1 vertices joined to a near-perfect matching on the rest."""

    n: int
    k: int


@dataclass(frozen=True)
class TuranGraph:
    """Complete r-partite graph with near-equal part sizes."""

    n: int
    r: int


FamilyDescriptor = (
    Complete
    | EmptyGraph
    | Path
    | Star
    | CompleteBipartite
    | Broom
    | SplitS
    | SplitSPlus
    | FKernel
    | TuranGraph
)


def _require(cond: bool, desc: FamilyDescriptor, bound: str) -> None:
    if not cond:
        raise FamilyParameterError(f"{desc!r} violates {bound}")


def build_family(desc: FamilyDescriptor) -> Graph:
    """Construct a named family member with its documented fixed labeling.

    Clique/dominating vertices always get the lowest indices, so tests and
    canonical comparisons are deterministic.
    """
    match desc:
        case Complete(n=n):
            _require(n >= 0, desc, "n >= 0")
            b = GraphBuilder(n)
            for u in range(n):
                for v in range(u + 1, n):
                    b.add_edge(u, v)
            return b.build()
        case EmptyGraph(n=n):
            _require(n >= 0, desc, "n >= 0")
            return GraphBuilder(n).build()
        case Path(n=n):
            _require(n >= 0, desc, "n >= 0")
            b = GraphBuilder(n)
            for u in range(n - 1):
                b.add_edge(u, u + 1)
            return b.build()
        case Star(n=n):
            _require(n >= 1, desc, "n >= 1")
            b = GraphBuilder(n)
            for v in range(1, n):
                b.add_edge(0, v)
            return b.build()
        case CompleteBipartite(a=a, b=bb):
            _require(a >= 0 and bb >= 0, desc, "a, b >= 0")
            g = GraphBuilder(a + bb)
            for u in range(a):
                for v in range(a, a + bb):
                    g.add_edge(u, v)
            return g.build()
        case Broom(n=n, s=s):
            _require(n >= 1, desc, "n >= 1")
            _require(0 <= s <= (n - 1) // 2, desc, "0 <= s <= floor((n-1)/2)")
            b = GraphBuilder(n)
            for i in range(s):
                mid, tip = 1 + 2 * i, 2 + 2 * i
                b.add_edge(0, mid)
                b.add_edge(mid, tip)
            for leaf in range(1 + 2 * s, n):
                b.add_edge(0, leaf)
            return b.build()
        case SplitS(n=n, h=h):
            _require(0 < h < n, desc, "0 < h < n")
            b = GraphBuilder(n)
            for u in range(h):
                for v in range(u + 1, n):
                    b.add_edge(u, v)
            return b.build()
        case SplitSPlus(n=n, h=h):
            _require(0 < h <= n - 2, desc, "0 < h <= n-2")
            g = build_family(SplitS(n, h))
            b = GraphBuilder.from_graph(g)
            b.add_edge(h, h + 1)
            return b.build()
        case FKernel(n=n, k=k):
            _require(1 <= k < n, desc, "1 <= k < n")
            b = GraphBuilder(n)
            for u in range(k - 1):
                for v in range(u + 1, n):
                    b.add_edge(u, v)
            m = n - k + 1
            for i in range(m // 2):
                b.add_edge(k - 1 + 2 * i, k + 2 * i)
            return b.build()
        case TuranGraph(n=n, r=r):
            _require(1 <= r <= n, desc, "1 <= r <= n")
            q, rem = divmod(n, r)
            sizes = [q + 1] * rem + [q] * (r - rem)
            bounds = [0]
            for s in sizes:
                bounds.append(bounds[-1] + s)
            b = GraphBuilder(n)
            for u in range(n):
                for v in range(u + 1, n):
                    pu = next(i for i in range(r) if bounds[i] <= u < bounds[i + 1])
                    pv = next(i for i in range(r) if bounds[i] <= v < bounds[i + 1])
                    if pu != pv:
                        b.add_edge(u, v)
            return b.build()
    raise TypeError(f"not a family descriptor: {desc!r}")


# ---------------------------------------------------------------------------
# Graph operations
# ---------------------------------------------------------------------------


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted up by g.n."""
    adj = list(g.adj) + [m << g.n for m in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    gn, hn = g.n, h.n
    hmask_for_g = ((1 << hn) - 1) << gn
    gmask = (1 << gn) - 1
    adj = [m | hmask_for_g for m in g.adj]
    adj += [(m << gn) | gmask for m in h.adj]
    return Graph(gn + hn, tuple(adj))


def k_copies(k: int, g: Graph) -> Graph:
    """k disjoint copies of g."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = g
    for _ in range(k - 1):
        out = union(out, g)
    return out


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, by lowest contained vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A 2-coloring (A, B) if g is bipartite, else None.

    Deterministic: in every connected component the lowest-index vertex is
    colored A. Isolated vertices land in A.
    """
    color = [-1] * g.n
    for v in range(g.n):
        if color[v] != -1:
            continue
        color[v] = 0
        queue = [v]
        while queue:
            u = queue.pop()
            for w in Graph.neighbors(g, u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    a = tuple(v for v in range(g.n) if color[v] == 0)
    b = tuple(v for v in range(g.n) if color[v] == 1)
    return a, b

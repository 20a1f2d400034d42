"""Linear-forest specifications and subgraph containment.

A linear forest is a disjoint union of paths P_{a_1} u ... u P_{a_k}. A graph
is free of the forest when no vertex-disjoint placement of all k paths exists;
containment here is subgraph containment, not induced.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import BudgetExhaustedError
from .graphs import Graph

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class LinearForestSpec:
    """Multiset of path orders, stored sorted descending, every order >= 2."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if not parts:
            raise ValueError("a linear forest needs at least one path")
        if any(a < 2 for a in parts):
            raise ValueError(f"every path order must be >= 2, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "LinearForestSpec":
        """Parse a comma-separated order list such as "3,3" or "5, 3, 2"."""
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse forest spec {text!r}") from None
        return cls(parts)

    @classmethod
    def kp3(cls, k: int) -> "LinearForestSpec":
        """k vertex-disjoint triples, the k*P_3 forest."""
        if k < 1:
            raise ValueError("k must be at least 1")
        return cls((3,) * k)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def total_vertices(self) -> int:
        return sum(self.parts)

    @property
    def h_parameter(self) -> int:
        """sum of floor(a_i/2) minus 1, the clique order of the extremal
        split families."""
        return sum(a // 2 for a in self.parts) - 1

    @property
    def all_odd(self) -> bool:
        return all(a % 2 == 1 for a in self.parts)

    @property
    def all_threes(self) -> bool:
        return all(a == 3 for a in self.parts)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.parts)


@dataclass(frozen=True)
class ForestEmbedding:
    """Witness placement: one vertex sequence per path, pairwise disjoint."""

    paths: tuple[tuple[int, ...], ...]

    def validates_in(self, g: Graph, spec: LinearForestSpec) -> bool:
        if tuple(sorted((len(p) for p in self.paths), reverse=True)) != spec.parts:
            return False
        seen: set[int] = set()
        for path in self.paths:
            for v in path:
                if v in seen or not 0 <= v < g.n:
                    return False
                seen.add(v)
            for u, v in zip(path, path[1:]):
                if not g.has_edge(u, v):
                    return False
        return True


def contains_linear_forest(
    g: Graph, f: LinearForestSpec, budget: int = DEFAULT_BUDGET
) -> bool:
    """True iff g contains vertex-disjoint paths of orders f.parts.

    Raises BudgetExhaustedError when the backtracking node budget runs out:
    an unknown, never a wrong answer.
    """
    status, _, _ = _kernels.find_forest(g.n, g.adj, f.parts, budget)
    if status == _kernels.BUDGET_EXHAUSTED:
        raise BudgetExhaustedError(budget)
    return status == _kernels.FOUND


def embed_linear_forest(
    g: Graph, f: LinearForestSpec, budget: int = DEFAULT_BUDGET
) -> ForestEmbedding | None:
    """A validated embedding when one exists, else None."""
    status, _, paths = _kernels.find_forest(g.n, g.adj, f.parts, budget)
    if status == _kernels.BUDGET_EXHAUSTED:
        raise BudgetExhaustedError(budget)
    if status != _kernels.FOUND:
        return None
    return ForestEmbedding(tuple(tuple(p) for p in paths))


def is_forest_free(
    g: Graph, f: LinearForestSpec, budget: int = DEFAULT_BUDGET
) -> bool:
    return not contains_linear_forest(g, f, budget)

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as stlib

from oracles import brute_contains
from spectral_turan import (
    BudgetExhaustedError,
    Complete,
    EmptyGraph,
    Graph,
    LinearForestSpec,
    Path,
    SplitS,
    Star,
    build_family,
    contains_linear_forest,
    embed_linear_forest,
    is_forest_free,
    union,
)


def all_specs(max_total: int) -> list[tuple[int, ...]]:
    """Every multiset of path orders >= 2 with total at most max_total."""
    out = []

    def grow(prefix, largest, left):
        for a in range(2, min(largest, left) + 1):
            out.append(prefix + (a,))
            grow(prefix + (a,), a, left - a)

    grow((), max_total, max_total)
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


class TestSpec:
    def test_parse_and_normalize(self):
        s = LinearForestSpec.parse(" 3 ,5, 3 ")
        assert s.parts == (5, 3, 3)
        assert str(s) == "5,3,3"
        assert LinearForestSpec.kp3(4).parts == (3, 3, 3, 3)

    def test_derived_attributes(self):
        s = LinearForestSpec.parse("5,3")
        assert (s.k, s.total_vertices, s.h_parameter) == (2, 8, 2)
        assert s.all_odd and not s.all_threes
        assert LinearForestSpec.kp3(2).all_threes
        assert not LinearForestSpec.parse("4,2").all_odd

    @pytest.mark.parametrize("bad", [(), (1,), (3, 0), (3, -2)])
    def test_rejects_bad_parts(self, bad):
        with pytest.raises(ValueError):
            LinearForestSpec(parts=bad)

    @pytest.mark.parametrize("text", ["", "3;3", "a", "3,"])
    def test_rejects_bad_text(self, text):
        with pytest.raises(ValueError):
            LinearForestSpec.parse(text)


class TestContainment:
    def test_agrees_with_oracle_on_random_graphs(self, rng):
        specs = [LinearForestSpec(parts=p) for p in all_specs(8)]
        for _ in range(120):
            n = rng.randint(1, 8)
            g = random_graph(rng, n, rng.choice([0.2, 0.45, 0.7]))
            for spec in specs:
                assert contains_linear_forest(g, spec) == brute_contains(
                    g, spec.parts
                ), f"{g.adj} vs {spec}"

    def test_structured_cases(self):
        star = build_family(Star(7))
        assert contains_linear_forest(star, LinearForestSpec.parse("3"))
        assert is_forest_free(star, LinearForestSpec.parse("4"))
        assert is_forest_free(star, LinearForestSpec.parse("3,2"))
        two_tri = union(build_family(Complete(3)), build_family(Complete(3)))
        assert contains_linear_forest(two_tri, LinearForestSpec.kp3(2))
        assert is_forest_free(two_tri, LinearForestSpec.parse("4"))

    def test_split_graph_threshold(self):
        # S_{n,h} packs h disjoint P3s through its clique and no more
        g = build_family(SplitS(12, 3))
        assert contains_linear_forest(g, LinearForestSpec.kp3(3))
        assert is_forest_free(g, LinearForestSpec.kp3(4))

    def test_too_many_vertices_is_never_contained(self):
        g = build_family(Complete(5))
        assert not contains_linear_forest(g, LinearForestSpec.parse("3,3"))

    def test_embedding_witness_is_sound(self, rng):
        specs = [LinearForestSpec(parts=p) for p in all_specs(7)]
        hits = 0
        for _ in range(80):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            for spec in specs:
                emb = embed_linear_forest(g, spec)
                if emb is None:
                    assert not contains_linear_forest(g, spec)
                    continue
                hits += 1
                assert emb.validates_in(g, spec)
                flat = [v for path in emb.paths for v in path]
                assert len(flat) == len(set(flat)) == spec.total_vertices
                assert sorted(len(p) for p in emb.paths) == sorted(spec.parts)
                for path in emb.paths:
                    for u, v in itertools.pairwise(path):
                        assert g.has_edge(u, v)
        assert hits > 100

    def test_three_views_agree(self, rng):
        spec = LinearForestSpec.parse("3,2")
        for _ in range(60):
            g = random_graph(rng, 6, 0.35)
            c = contains_linear_forest(g, spec)
            assert is_forest_free(g, spec) == (not c)
            assert (embed_linear_forest(g, spec) is not None) == c


class TestBudget:
    def test_tiny_budget_raises(self):
        g = build_family(SplitS(30, 3))
        with pytest.raises(BudgetExhaustedError):
            contains_linear_forest(g, LinearForestSpec.kp3(4), budget=50)

    def test_found_before_budget_runs_out(self):
        g = build_family(Complete(9))
        assert contains_linear_forest(g, LinearForestSpec.kp3(3), budget=10_000)


@settings(max_examples=60, deadline=None)
@given(
    n=stlib.integers(min_value=2, max_value=8),
    edges=stlib.sets(
        stlib.tuples(stlib.integers(0, 7), stlib.integers(0, 7)).filter(
            lambda t: t[0] < t[1]
        ),
        max_size=20,
    ),
    extra=stlib.tuples(stlib.integers(0, 7), stlib.integers(0, 7)).filter(
        lambda t: t[0] < t[1]
    ),
    parts=stlib.lists(stlib.integers(2, 4), min_size=1, max_size=3),
)
def test_edge_addition_preserves_containment(n, edges, extra, parts):
    edges = {e for e in edges if e[1] < n}
    if extra[1] >= n:
        extra = (0, 1) if n >= 2 else extra
    g = Graph.from_edges(n, edges)
    spec = LinearForestSpec(parts=tuple(parts))
    bigger = Graph.from_edges(n, edges | {extra})
    if contains_linear_forest(g, spec):
        assert contains_linear_forest(bigger, spec)


@settings(max_examples=60, deadline=None)
@given(
    n=stlib.integers(min_value=2, max_value=8),
    edges=stlib.sets(
        stlib.tuples(stlib.integers(0, 7), stlib.integers(0, 7)).filter(
            lambda t: t[0] < t[1]
        ),
        max_size=20,
    ),
    parts=stlib.lists(stlib.integers(2, 4), min_size=2, max_size=3),
)
def test_dropping_a_part_preserves_containment(n, edges, parts):
    edges = {e for e in edges if e[1] < n}
    g = Graph.from_edges(n, edges)
    whole = LinearForestSpec(parts=tuple(parts))
    reduced = LinearForestSpec(parts=tuple(parts[1:]))
    if contains_linear_forest(g, whole):
        assert contains_linear_forest(g, reduced)

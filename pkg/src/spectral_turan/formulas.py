"""Closed-form extremal quantities: edge maxima for forbidden linear forests,
spectral radii of the extremal families, and the classical upper bounds.

Every value comes back as a FormulaValue carrying validity metadata (proven
from an explicit order onward, asymptotic-only, or unconditional) and, for
algebraic values, the defining integer polynomial so tests can check a
polynomial residual instead of comparing floats against floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InfeasibleParameterError,
    NegativeRadicandError,
    UnsupportedCaseError,
)
from .forests import LinearForestSpec
from .graphs import (
    Complete,
    FKernel,
    Graph,
    SplitS,
    SplitSPlus,
    build_family,
    union,
)


@dataclass(frozen=True)
class Proven:
    """Holds from order n_from onward, by an explicit threshold."""

    n_from: int

    def __str__(self) -> str:
        return f"Proven(n>={self.n_from})"


@dataclass(frozen=True)
class AsymptoticOnly:
    """Stated for sufficiently large order with no explicit threshold."""

    def __str__(self) -> str:
        return "AsymptoticOnly"


@dataclass(frozen=True)
class Unconditional:
    def __str__(self) -> str:
        return "Unconditional"


Validity = Proven | AsymptoticOnly | Unconditional


@dataclass(frozen=True)
class FormulaValue:
    """A formula evaluation: value, validity range, optional defining
    polynomial with integer coefficients in ascending degree order."""

    value: int | float
    validity: Validity
    polynomial: tuple[int, ...] | None = None

    def polynomial_residual(self) -> Fraction:
        """p(value) evaluated exactly over the rationals."""
        if self.polynomial is None:
            raise ValueError("no defining polynomial attached")
        x = Fraction(self.value)
        acc = Fraction(0)
        for coeff in reversed(self.polynomial):
            acc = acc * x + coeff
        return acc


def h_parameter(f: LinearForestSpec) -> int:
    return f.h_parameter


def ex_linear_forest(n: int, f: LinearForestSpec) -> FormulaValue:
    """Maximum edges of a graph of order n avoiding the forest, valid for
    sufficiently large n: C(h,2) + h(n-h) + c with c = 1 iff every path order
    is odd. Requires k >= 2 and at least one order different from 3.
    """
    if f.k < 2:
        raise UnsupportedCaseError(
            "the edge-maximum formula needs at least two paths"
        )
    if f.all_threes:
        raise UnsupportedCaseError(
            "all path orders equal 3: use ex_kp3, which covers every order"
        )
    h = f.h_parameter
    c = 1 if f.all_odd else 0
    return FormulaValue(h * (h - 1) // 2 + h * (n - h) + c, AsymptoticOnly())


def ex_kp3(n: int, k: int) -> FormulaValue:
    """Maximum edges of a graph of order n with no k disjoint 3-vertex paths.
    Four regimes, exact for every n and k.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    if n < 3 * k:
        v = n * (n - 1) // 2
    elif n < 5 * k - 1:
        v = (3 * k - 1) * (3 * k - 2) // 2 + (n - 3 * k + 1) // 2
    elif n == 5 * k - 1:
        v = (3 * k - 1) * (3 * k - 2) // 2 + k
    else:
        v = (k - 1) * (k - 2) // 2 + (n - k + 1) * (k - 1) + (n - k + 1) // 2
    return FormulaValue(v, Unconditional())


def ex_bipartite_kp3(n: int, k: int) -> FormulaValue:
    """(k-1)(n-k+1), the bipartite edge maximum, proven for n >= 11k-4."""
    if k < 2:
        raise ValueError("need k >= 2")
    return FormulaValue((k - 1) * (n - k + 1), Proven(11 * k - 4))


def rho_s(n: int, h: int) -> FormulaValue:
    """Spectral radius of the split family SplitS(n,h): the larger root of
    x^2 - (h-1)x - h(n-h), in closed form."""
    if h < 1 or n <= h:
        raise ValueError("need h >= 1 and n > h")
    rad = 4 * h * n - (3 * h * h + 2 * h - 1)
    value = (h - 1 + math.sqrt(rad)) / 2
    return FormulaValue(value, Unconditional(), (-h * (n - h), -(h - 1), 1))


def rho_s_plus_bound(n: int, h: int) -> FormulaValue:
    """Strict upper bound on the spectral radius of SplitSPlus(n,h), valid
    for n >= 4**h. Not the radius itself."""
    if h < 2:
        raise ValueError("need h >= 2")
    if n < 4**h:
        raise InfeasibleParameterError(
            f"the bound is only proven for n >= 4**h = {4**h}, got n={n}"
        )
    rad = 4 * h * n - (3 * h * h + 2 * h - 3)
    value = (h - 1 + math.sqrt(rad)) / 2
    return FormulaValue(
        value, Proven(4**h), (-(2 * h * (n - h) + 1), -2 * (h - 1), 2)
    )


def _cubic_largest_root(coeffs: tuple[int, int, int, int], lo: float, hi: float):
    """Largest root of the monic cubic with ascending coeffs, bracketed in
    (lo, hi] with p(lo) < 0 <= p(hi). Bisection (guaranteed) then a short
    Newton polish toward machine precision.
    """
    c0, c1, c2, c3 = coeffs

    def p(x: float) -> float:
        return ((c3 * x + c2) * x + c1) * x + c0

    def dp(x: float) -> float:
        return (3 * c3 * x + 2 * c2) * x + c1

    a, b = lo, hi
    for _ in range(200):
        mid = (a + b) / 2
        if mid in (a, b):
            break
        if p(mid) < 0:
            a = mid
        else:
            b = mid
    x = b
    for _ in range(6):
        d = dp(x)
        if d == 0:
            break
        step = p(x) / d
        nxt = x - step
        if not lo <= nxt <= hi + 1:
            break
        if nxt == x:
            break
        x = nxt
    # keep the root inside the proven bracket despite float rounding
    return min(max(x, lo), hi)


def rho_f(n: int, k: int) -> FormulaValue:
    """Spectral radius of the kernel-plus-matching family FKernel(n,k).

    When n-k+1 is even this is the larger root of x^2 - (k-1)x - M with
    M = (k-1)n - (k^2-k-1), in closed form. When odd, the largest root of
    x^3 - (k-1)x^2 - Mx + (k-1), extracted by bisection inside the proven
    sandwich and polished by Newton steps.
    """
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    m_coef = (k - 1) * n - (k * k - k - 1)
    if (n - k + 1) % 2 == 0:
        rad = 4 * (k - 1) * n - (3 * k * k - 2 * k - 5)
        value = (k - 1 + math.sqrt(rad)) / 2
        return FormulaValue(value, Unconditional(), (-m_coef, -(k - 1), 1))
    poly = (k - 1, -m_coef, -(k - 1), 1)
    lo_rad = 4 * (k - 1) * n - (3 * k * k - 2 * k - 1)
    lower = (k - 1 + math.sqrt(lo_rad)) / 2
    upper = (k - 1 + math.sqrt(lo_rad + 4)) / 2
    # p is negative at max(lower, k-1) and nonnegative at upper, so the
    # largest root sits in between; nudge past the lower endpoint where
    # p can vanish only in the k=1 degenerate case
    lo = max(lower, float(k - 1)) + 1e-12
    value = _cubic_largest_root(poly, lo, upper)
    return FormulaValue(value, Unconditional(), poly)


def rho_f_bounds(n: int, k: int) -> tuple[FormulaValue, FormulaValue]:
    """The sandwich (lower, upper) with lower < rho_f(n,k) <= upper; the even
    case attains the upper bound exactly."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    m_coef = (k - 1) * n - (k * k - k - 1)
    lo_rad = 4 * (k - 1) * n - (3 * k * k - 2 * k - 1)
    lower = FormulaValue(
        (k - 1 + math.sqrt(lo_rad)) / 2,
        Unconditional(),
        (-(m_coef - 1), -(k - 1), 1),
    )
    upper = FormulaValue(
        (k - 1 + math.sqrt(lo_rad + 4)) / 2,
        Unconditional(),
        (-m_coef, -(k - 1), 1),
    )
    return lower, upper


def hong_bound(e: int, n: int, delta: int) -> FormulaValue:
    """Degree-aware spectral bound (delta-1+sqrt(8e-4*delta*n+(delta+1)^2))/2.

    For fixed e and n with 2e <= n(n-1) the bound is non-increasing in delta,
    so a graph's own minimum degree gives its sharpest instance.
    """
    if not 0 <= delta <= n - 1:
        raise ValueError("need 0 <= delta <= n-1")
    rad = 8 * e - 4 * delta * n + (delta + 1) ** 2
    if rad < 0:
        raise NegativeRadicandError(
            f"radicand {rad} < 0: (e={e}, n={n}, delta={delta}) matches no graph"
        )
    return FormulaValue((delta - 1 + math.sqrt(rad)) / 2, Unconditional())


def near_matching(m: int) -> Graph:
    """floor(m/2) disjoint edges plus one isolated vertex when m is odd: the
    k=1 member of the kernel family, valid down to m=1."""
    if m < 1:
        raise ValueError("need m >= 1")
    return Graph.from_edges(m, [(2 * i, 2 * i + 1) for i in range(m // 2)])


def extremal_graphs(n: int, f: LinearForestSpec) -> list[Graph]:
    """Every extremal graph the equality characterizations name for (n, f).

    The k*P_3 case is exact at every order: complete graph below order 3k, a
    clique K_{3k-1} plus a near-matching through order 5k-2, a two-graph tie
    at order exactly 5k-1, and the kernel family beyond. For other forests
    with k >= 2 the named family is the split graph, with the extra matching
    edge exactly when every path order is odd; that characterization is
    asymptotic, so small-n callers may receive graphs that are not actually
    extremal at their order. Single paths other than P_3 fall outside every
    implemented theorem.
    """
    if f.all_threes:
        k = f.k
        if n < 3 * k:
            return [build_family(Complete(n))]
        if n < 5 * k - 1:
            left = build_family(Complete(3 * k - 1))
            return [union(left, near_matching(n - 3 * k + 1))]
        if n == 5 * k - 1:
            left = build_family(Complete(3 * k - 1))
            # at k=1 the two named graphs coincide (both are 2K_2)
            return _dedup(
                [union(left, near_matching(2 * k)), build_family(FKernel(n, k))]
            )
        if k == 1:
            return [near_matching(n)]
        return [build_family(FKernel(n, k))]
    if f.k < 2:
        raise UnsupportedCaseError(
            f"no implemented theorem characterizes extremal graphs for {f}"
        )
    h = f.h_parameter
    if f.all_odd:
        return [build_family(SplitSPlus(n, h))]
    return [build_family(SplitS(n, h))]


def _dedup(graphs: list[Graph]) -> list[Graph]:
    from .enumeration import canonical_form

    seen: set[bytes] = set()
    out = []
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def sqrt_edge_bound(e: int) -> FormulaValue:
    """sqrt(e), the bipartite spectral ceiling; equality exactly for complete
    bipartite graphs plus isolated vertices."""
    if e < 0:
        raise ValueError("edge count must be nonnegative")
    return FormulaValue(math.sqrt(e), Unconditional(), (-e, 0, 1))


def rho_bipartite_kp3(n: int, k: int) -> FormulaValue:
    """sqrt((k-1)(n-k+1)), the bipartite spectral maximum for k*P_3-free
    graphs, proven for n >= 11k-4; attained only by the complete bipartite
    graph with parts k-1 and n-k+1."""
    if k < 2:
        raise ValueError("need k >= 2")
    prod = (k - 1) * (n - k + 1)
    if prod < 0:
        raise ValueError("order too small for the part sizes")
    return FormulaValue(
        math.sqrt(prod), Proven(11 * k - 4), (-prod, 0, 1)
    )


def least_eig_bound(n: int, k: int) -> FormulaValue:
    """-sqrt((k-1)(n-k+1)), the least-eigenvalue floor for k*P_3-free graphs
    of order n >= 11k-4 (all graphs, not only bipartite)."""
    base = rho_bipartite_kp3(n, k)
    return FormulaValue(-base.value, base.validity, base.polynomial)

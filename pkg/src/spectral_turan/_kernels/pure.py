"""Pure-Python kernels for the two hot paths: linear-forest containment and
canonical labeling. The compiled extension exposes the same two entry points
with the same semantics; callers import through spectral_turan._kernels.

Both take raw (n, adj) with adj a sequence of int bitsets, not Graph objects,
so the compiled twin can stay object-free.
"""

from __future__ import annotations

import sys

# status codes shared with the compiled backend
NOT_FOUND = 0
FOUND = 1
BUDGET_EXHAUSTED = 2


class _Found(Exception):
    pass


class _Budget(Exception):
    pass


def find_forest(n, adj, parts, budget=10**9):
    """Decide whether the graph contains vertex-disjoint paths of the given
    orders. Returns (status, nodes, paths): status is NOT_FOUND / FOUND /
    BUDGET_EXHAUSTED, nodes counts vertex placements tried, and paths is a
    list of vertex tuples (one per part, in nonincreasing-order part order)
    when found, else None.

    Each path is anchored at its minimum vertex and grown as two arms into
    higher-numbered vertices; the shorter arm goes first, and when the arms
    have equal length the first left vertex must be below the first right
    vertex. Paths of equal order must take strictly increasing anchors. Any
    placement of the forest, with equal-order paths sorted by their minimum
    vertices, matches exactly one search branch, so the search is complete
    and duplication-free.
    """
    parts = sorted(parts, reverse=True)
    if not parts:
        return FOUND, 0, []
    if parts[-1] < 1:
        raise ValueError("path orders must be >= 1")
    total = sum(parts)
    if total > n:
        return NOT_FOUND, 0, None
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * total + 200))
    k = len(parts)
    suffix = list(parts)
    for i in range(k - 2, -1, -1):
        suffix[i] += suffix[i + 1]
    full = (1 << n) - 1
    counter = [0]
    chosen: list[tuple] = []
    winner: list[list[tuple]] = []

    def spend():
        counter[0] += 1
        if counter[0] > budget:
            raise _Budget

    def arm_walk(tail, length, used, above, acc):
        # masks of used vertices after growing `length` more steps from tail;
        # acc mirrors the vertices appended along the current branch
        if length == 0:
            yield used
            return
        cand = adj[tail] & above & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            spend()
            v = low.bit_length() - 1
            acc.append(v)
            yield from arm_walk(v, length - 1, used | low, above, acc)
            acc.pop()

    def place(idx, lo, used):
        if idx == k:
            winner.append(list(chosen))
            raise _Found
        a = parts[idx]
        avail = full & ~used
        if avail.bit_count() < suffix[idx]:
            return
        next_same = idx + 1 < k and parts[idx + 1] == a
        cand = (avail >> lo) << lo
        while cand:
            low = cand & -cand
            cand ^= low
            m = low.bit_length() - 1
            spend()
            above = full ^ ((1 << (m + 1)) - 1)
            rest = avail & above
            # vertices above the anchor shrink as the anchor grows
            if rest.bit_count() < a - 1:
                break
            if a >= 2 and not adj[m] & rest:
                continue
            used_m = used | low
            next_lo = m + 1 if next_same else 0
            left: list[int] = []
            right: list[int] = []
            for j in range((a - 1) // 2 + 1):
                r_len = a - 1 - j
                if j == 0:
                    for u2 in arm_walk(m, r_len, used_m, above, right):
                        chosen.append((m, *right))
                        place(idx + 1, next_lo, u2)
                        chosen.pop()
                    continue
                tie = j == r_len
                c1 = adj[m] & above & ~used_m
                while c1:
                    l1 = c1 & -c1
                    c1 ^= l1
                    v1 = l1.bit_length() - 1
                    spend()
                    left.append(v1)
                    for u_left in arm_walk(v1, j - 1, used_m | l1, above, left):
                        c2 = adj[m] & above & ~u_left
                        if tie:
                            c2 &= full ^ ((1 << (v1 + 1)) - 1)
                        while c2:
                            l2 = c2 & -c2
                            c2 ^= l2
                            spend()
                            v2 = l2.bit_length() - 1
                            right.append(v2)
                            for u_both in arm_walk(
                                v2, r_len - 1, u_left | l2, above, right
                            ):
                                chosen.append((*reversed(left), m, *right))
                                place(idx + 1, next_lo, u_both)
                                chosen.pop()
                            right.pop()
                    left.pop()

    try:
        place(0, 0, 0)
    except _Found:
        return FOUND, counter[0], winner[0]
    except _Budget:
        return BUDGET_EXHAUSTED, counter[0], None
    return NOT_FOUND, counter[0], None


def _refine(n, adj, colors):
    """Color refinement to a stable partition. Cell ids are assigned by
    sorted signature, so they depend only on the coloring, not on labels.
    """
    while True:
        sigs = []
        for v in range(n):
            m = adj[v]
            cnt: dict[int, int] = {}
            while m:
                low = m & -m
                m ^= low
                c = colors[low.bit_length() - 1]
                cnt[c] = cnt.get(c, 0) + 1
            sigs.append((colors[v], tuple(sorted(cnt.items()))))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canon_bits(n, adj):
    """Lexicographically minimal upper-triangle bit string over all vertex
    orderings, packed into an int (column-major, MSB first, matching the
    graph6 body bit order). Integer comparison of two keys is bit-string
    comparison because every key has exactly n(n-1)/2 bits.

    Individualization-refinement search with three prunings: prefix bits of
    the leading singleton cells against the current best, twin candidates
    (equal adjacency outside the mutual pair), and discovered automorphisms
    that fix the individualized prefix pointwise.
    """
    if n <= 1:
        return 0
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 200))
    total_bits = n * (n - 1) // 2
    best = None
    best_order: list[int] = []
    gens: list[list[int]] = []

    def partial_key(order):
        key = 0
        for j in range(1, len(order)):
            row = adj[order[j]]
            for i in range(j):
                key = (key << 1) | ((row >> order[i]) & 1)
        return key

    def dfs(colors, placed):
        nonlocal best, best_order
        ncells = max(colors) + 1
        cells: list[list[int]] = [[] for _ in range(ncells)]
        for v, c in enumerate(colors):
            cells[c].append(v)
        order = []
        target = -1
        for c in range(ncells):
            if len(cells[c]) == 1:
                order.append(cells[c][0])
            else:
                target = c
                break
        if target == -1:
            key = partial_key(order)
            if best is None or key < best:
                best = key
                best_order = order
            elif key == best:
                sigma = [0] * n
                for r in range(n):
                    sigma[order[r]] = best_order[r]
                gens.append(sigma)
            return
        m = len(order)
        if best is not None and m >= 2:
            bits_m = m * (m - 1) // 2
            if partial_key(order) > best >> (total_bits - bits_m):
                return
        tried: list[int] = []
        for v in cells[target]:
            dup = False
            for u in tried:
                if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                    dup = True
                    break
            if not dup:
                for sig in gens:
                    if sig[v] in tried and all(sig[p] == p for p in placed):
                        dup = True
                        break
            tried.append(v)
            if dup:
                continue
            branched = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
            placed.append(v)
            dfs(_refine(n, adj, branched), placed)
            placed.pop()

    dfs(_refine(n, adj, [0] * n), [])
    return best

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the linear-forest containment kernel.

Mirrors pure.find_forest exactly: same traversal order, same budget counter
positions, same (status, nodes, paths) result, so the two backends are
interchangeable and parity-testable. Bitsets are machine words here, which
caps the compiled path at 64 vertices; the dispatch layer routes larger
graphs to the pure implementation.

Canonical labeling is not compiled: its keys are n(n-1)/2-bit integers and
profiling puts it far behind containment, so it keeps one shared
implementation in pure.py.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NOT_FOUND = 0
FOUND = 1
BUDGET_EXHAUSTED = 2

MAX_WORD_VERTICES = 64

ctypedef unsigned long long u64

cdef struct Ctx:
    u64 adj[64]
    u64 full
    long long budget
    long long counter
    int n
    int k
    int parts[64]
    int suffix[64]
    int off[64]
    int lbuf[64]
    int rbuf[64]
    int out[64]


cdef inline u64 lowbit(u64 m) noexcept nogil:
    return m & (~m + 1)


cdef inline void commit(Ctx* c, int idx, int m, int llen, int rlen) noexcept nogil:
    # materialize the current part as reversed(left) + anchor + right
    cdef int base = c.off[idx]
    cdef int t
    for t in range(llen):
        c.out[base + t] = c.lbuf[base + llen - 1 - t]
    c.out[base + llen] = m
    for t in range(rlen):
        c.out[base + llen + 1 + t] = c.rbuf[base + t]


cdef int walk_right(Ctx* c, int idx, int m, int llen, int rlen, int tail,
                    int length, u64 used, u64 above, int next_lo) noexcept nogil:
    cdef u64 cand, low
    cdef int v, r
    if length == 0:
        commit(c, idx, m, llen, rlen)
        return place(c, idx + 1, next_lo, used)
    cand = c.adj[tail] & above & ~used
    while cand:
        low = lowbit(cand)
        cand ^= low
        c.counter += 1
        if c.counter > c.budget:
            return 2
        v = __builtin_ctzll(low)
        c.rbuf[c.off[idx] + rlen] = v
        r = walk_right(c, idx, m, llen, rlen + 1, v, length - 1,
                       used | low, above, next_lo)
        if r:
            return r
    return 0


cdef int walk_left(Ctx* c, int idx, int m, int j, int r_len, int tie, int llen,
                   int tail, int length, u64 used, u64 above,
                   int next_lo) noexcept nogil:
    cdef u64 cand, low, c2
    cdef int v, v1, r
    if length == 0:
        # left arm complete; start the right arm from a fresh anchor neighbor
        c2 = c.adj[m] & above & ~used
        if tie:
            # equal arms: first right vertex must exceed the first left one
            v1 = c.lbuf[c.off[idx]]
            if v1 + 1 >= 64:
                c2 = 0
            else:
                c2 &= c.full ^ (((<u64>1) << (v1 + 1)) - 1)
        while c2:
            low = lowbit(c2)
            c2 ^= low
            c.counter += 1
            if c.counter > c.budget:
                return 2
            v = __builtin_ctzll(low)
            c.rbuf[c.off[idx]] = v
            r = walk_right(c, idx, m, llen, 1, v, r_len - 1,
                           used | low, above, next_lo)
            if r:
                return r
        return 0
    cand = c.adj[tail] & above & ~used
    while cand:
        low = lowbit(cand)
        cand ^= low
        c.counter += 1
        if c.counter > c.budget:
            return 2
        v = __builtin_ctzll(low)
        c.lbuf[c.off[idx] + llen] = v
        r = walk_left(c, idx, m, j, r_len, tie, llen + 1, v, length - 1,
                      used | low, above, next_lo)
        if r:
            return r
    return 0


cdef int place(Ctx* c, int idx, int lo, u64 used) noexcept nogil:
    cdef u64 avail, cand, low, rest, above, used_m, c1, l1
    cdef int a, m, j, r_len, tie, v1, r, next_lo
    cdef bint next_same
    if idx == c.k:
        return 1
    a = c.parts[idx]
    avail = c.full & ~used
    if __builtin_popcountll(avail) < c.suffix[idx]:
        return 0
    next_same = idx + 1 < c.k and c.parts[idx + 1] == a
    if lo >= 64:
        cand = 0
    else:
        cand = (avail >> lo) << lo
    while cand:
        low = lowbit(cand)
        cand ^= low
        m = __builtin_ctzll(low)
        c.counter += 1
        if c.counter > c.budget:
            return 2
        if m + 1 >= 64:
            above = 0
        else:
            above = c.full ^ (((<u64>1) << (m + 1)) - 1)
        rest = avail & above
        # vertices above the anchor shrink as the anchor grows
        if __builtin_popcountll(rest) < a - 1:
            break
        if a >= 2 and not (c.adj[m] & rest):
            continue
        used_m = used | low
        next_lo = m + 1 if next_same else 0
        for j in range((a - 1) // 2 + 1):
            r_len = a - 1 - j
            if j == 0:
                r = walk_right(c, idx, m, 0, 0, m, r_len, used_m, above,
                               next_lo)
                if r:
                    return r
                continue
            tie = 1 if j == r_len else 0
            c1 = c.adj[m] & above & ~used_m
            while c1:
                l1 = lowbit(c1)
                c1 ^= l1
                v1 = __builtin_ctzll(l1)
                c.counter += 1
                if c.counter > c.budget:
                    return 2
                c.lbuf[c.off[idx]] = v1
                r = walk_left(c, idx, m, j, r_len, tie, 1, v1, j - 1,
                              used_m | l1, above, next_lo)
                if r:
                    return r
    return 0


def find_forest(n, adj, parts, budget=10**9):
    """Word-sized twin of pure.find_forest; see that docstring for the
    search order and result contract. Only valid for n <= 64."""
    cdef Ctx c
    cdef int i, r, total
    parts = sorted(parts, reverse=True)
    if not parts:
        return FOUND, 0, []
    if parts[len(parts) - 1] < 1:
        raise ValueError("path orders must be >= 1")
    total = 0
    for p in parts:
        total += p
    if total > n:
        return NOT_FOUND, 0, None
    if n > 64:
        raise ValueError("compiled kernel is limited to n <= 64")
    c.n = n
    c.k = len(parts)
    c.full = <u64>0 - 1 if n == 64 else ((<u64>1) << n) - 1
    c.budget = budget
    c.counter = 0
    for i in range(c.k):
        c.parts[i] = parts[i]
    c.suffix[c.k - 1] = c.parts[c.k - 1]
    for i in range(c.k - 2, -1, -1):
        c.suffix[i] = c.suffix[i + 1] + c.parts[i]
    c.off[0] = 0
    for i in range(1, c.k):
        c.off[i] = c.off[i - 1] + c.parts[i - 1]
    for i in range(n):
        c.adj[i] = adj[i]
    r = place(&c, 0, 0, 0)
    if r == 1:
        paths = [
            tuple(c.out[c.off[i] + t] for t in range(c.parts[i]))
            for i in range(c.k)
        ]
        return FOUND, c.counter, paths
    if r == 2:
        return BUDGET_EXHAUSTED, c.counter, None
    return NOT_FOUND, c.counter, None

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; graphs limited to 64 vertices."""
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

ctypedef unsigned long long u64

cdef enum:
    MAXN = 64

FOUND, REFUTED, UNKNOWN = 1, 0, -1
MAX_N = MAXN


cdef inline int ctz(u64 x) nogil:
    return __builtin_ctzll(x)

cdef inline int popc(u64 x) nogil:
    return __builtin_popcountll(x)

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef int load(object adj, int n, u64* out) except -1:
    if n > MAXN:
        raise ValueError(f"compiled kernels support n <= {MAXN}, got {n}")
    cdef int i
    for i in range(n):
        out[i] = <u64>adj[i]
    return 0


cdef inline u64 full_mask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef inline u64 reach(const u64* adj, int start, u64 allowed) nogil:
    cdef u64 seen = (<u64>1) << start
    cdef u64 frontier = seen
    cdef u64 nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[ctz(f)]
            f &= f - 1
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef inline int ncomp(const u64* adj, int n, u64 removed) nogil:
    cdef u64 left = full_mask(n) & ~removed
    cdef int count = 0
    while left:
        left &= ~reach(adj, ctz(left), left)
        count += 1
    return count


def count_components(adj, int n, removed):
    cdef u64 a[MAXN]
    load(adj, n, a)
    return ncomp(a, n, <u64>removed)


def refine_colors(adj, int n):
    cdef u64 a[MAXN]
    cdef int color[MAXN]
    cdef int newc[MAXN]
    cdef int order[MAXN]
    cdef int cnt[MAXN][MAXN]
    cdef int k, v, u, i, j, t, cmpv, nk
    cdef u64 f
    load(adj, n, a)
    for v in range(n):
        color[v] = 0
    k = 1 if n else 0
    while True:
        for v in range(n):
            for i in range(k):
                cnt[v][i] = 0
            f = a[v]
            while f:
                cnt[v][color[ctz(f)]] += 1
                f &= f - 1
        # insertion sort of vertices by signature
        for v in range(n):
            order[v] = v
        for i in range(1, n):
            t = order[i]
            j = i - 1
            while j >= 0 and sig_cmp(color, cnt, k, order[j], t) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = t
        nk = 0
        for i in range(n):
            if i > 0 and sig_cmp(color, cnt, k, order[i - 1], order[i]) != 0:
                nk += 1
            newc[order[i]] = nk
        nk = nk + 1 if n else 0
        for v in range(n):
            color[v] = newc[v]
        if nk == k:
            return [color[v] for v in range(n)]
        k = nk


cdef int sig_cmp(int* color, int cnt[][MAXN], int k, int x, int y) nogil:
    cdef int i
    if color[x] != color[y]:
        return -1 if color[x] < color[y] else 1
    for i in range(k):
        if cnt[x][i] != cnt[y][i]:
            return -1 if cnt[x][i] < cnt[y][i] else 1
    return 0


cdef struct CanonState:
    int n
    const u64* adj
    int* color
    int* cell_of_pos
    int* path
    int* best
    u64* best_cols
    int* status


cdef void place(CanonState* s, int j, u64 used) nogil:
    cdef int n = s.n
    cdef int v, i, st
    cdef u64 c, a
    if j == n:
        if s.status[j] == 1:
            for i in range(n):
                s.best[i] = s.path[i]
            for i in range(n + 1):
                s.status[i] = 0
        return
    for v in range(n):
        if (used >> v) & 1 or s.color[v] != s.cell_of_pos[j]:
            continue
        c = 0
        a = s.adj[v]
        for i in range(j):
            c = (c << 1) | ((a >> s.path[i]) & 1)
        if s.status[j] == 0:
            if c > s.best_cols[j]:
                continue
            st = 1 if c < s.best_cols[j] else 0
        else:
            st = 1
        s.path[j] = v
        s.status[j + 1] = st
        if st == 1:
            s.best_cols[j] = c
        place(s, j + 1, used | ((<u64>1) << v))


def canonical_labeling(adj, int n):
    cdef u64 a[MAXN]
    cdef int color[MAXN]
    cdef int cell[MAXN]
    cdef int path[MAXN]
    cdef int best[MAXN]
    cdef u64 best_cols[MAXN]
    cdef int status[MAXN + 1]
    cdef CanonState s
    cdef int i
    load(adj, n, a)
    cols = refine_colors(adj, n)
    for i in range(n):
        color[i] = cols[i]
    for i, c in enumerate(sorted(cols)):
        cell[i] = c
    for i in range(n + 1):
        status[i] = 1
    for i in range(n):
        best_cols[i] = 0
        best[i] = 0
    s.n = n
    s.adj = a
    s.color = color
    s.cell_of_pos = cell
    s.path = path
    s.best = best
    s.best_cols = best_cols
    s.status = status
    with nogil:
        place(&s, 0, 0)
    return tuple(best[i] for i in range(n))


cdef inline int gosper_next(u64* mask) nogil:
    cdef u64 m = mask[0]
    cdef u64 low = m & (~m + 1)
    cdef u64 ripple = m + low
    mask[0] = ripple | (((m ^ ripple) >> 2) / low)
    return 0


def toughness_scan(adj, int n):
    cdef u64 a[MAXN]
    cdef int s, c
    cdef long long bs = -1, bc = 1
    cdef u64 bm = 0, mask, limit
    load(adj, n, a)
    if n > 63:
        raise ValueError("toughness_scan supports n <= 63")
    limit = (<u64>1) << n
    with nogil:
        for s in range(0, n - 1):
            if bs >= 0 and s * bc >= bs * (n - s):
                break
            mask = ((<u64>1) << s) - 1
            while mask < limit:
                c = ncomp(a, n, mask)
                if c >= 2 and (bs < 0 or s * bc < bs * c):
                    bs = s
                    bc = c
                    bm = mask
                if s == 0:
                    break
                gosper_next(&mask)
            if s == 0 and bs >= 0:
                break
    if bs < 0:
        return None
    return (int(bs), int(bc), int(bm))


def hamiltonian_dp(adj, int n):
    cdef u64 a[MAXN]
    cdef u64* ends
    cdef u64 size, mask, e, out, low, full
    cdef bint res
    load(adj, n, a)
    if n < 3:
        return False
    if n > 30:
        raise ValueError("hamiltonian_dp supports n <= 30")
    size = (<u64>1) << n
    full = size - 1
    ends = <u64*>calloc(size, sizeof(u64))
    if ends == NULL:
        raise MemoryError()
    with nogil:
        ends[1] = 1
        mask = 1
        while mask < size:
            e = ends[mask]
            if e:
                out = full & ~mask
                while out:
                    low = out & (~out + 1)
                    if a[ctz(low)] & e:
                        ends[mask | low] |= low
                    out ^= low
            mask += 2
        res = (ends[full] & a[0] & ~(<u64>1)) != 0
    free(ends)
    return res


cdef struct HamState:
    int n
    const u64* adj
    u64 full
    int* path
    int depth
    long long nodes
    long long budget
    bint over


cdef bint extend(HamState* s, int v, u64 visited) nogil:
    cdef u64 free_ = s.full & ~visited
    cdef u64 usable, f, cands
    cdef int u, d, forced, start
    cdef const u64* adj = s.adj
    s.nodes += 1
    if s.nodes > s.budget:
        s.over = True
        return False
    if not free_:
        return (adj[v] & 1) != 0
    usable = free_ | ((<u64>1) << v) | 1
    forced = -1
    f = free_
    while f:
        u = ctz(f)
        f &= f - 1
        d = popc(adj[u] & usable)
        if d < 2:
            return False
        if d == 2 and (adj[v] >> u) & 1 and v != 0:
            if forced >= 0:
                return False
            forced = u
    if not (adj[v] & free_) or not (adj[0] & free_):
        return False
    start = ctz(free_)
    if reach(adj, start, free_) != free_:
        return False
    if forced >= 0:
        cands = (<u64>1) << forced
    else:
        cands = adj[v] & free_
    while cands:
        u = ctz(cands)
        cands &= cands - 1
        s.path[s.depth] = u
        s.depth += 1
        if extend(s, u, visited | ((<u64>1) << u)):
            return True
        s.depth -= 1
        if s.over:
            return False
    return False


def hamiltonian_search(adj, int n, long long budget):
    cdef u64 a[MAXN]
    cdef int path[MAXN]
    cdef HamState s
    cdef bint ok
    load(adj, n, a)
    if n < 3:
        return REFUTED, [], 0
    s.n = n
    s.adj = a
    s.full = full_mask(n)
    s.path = path
    path[0] = 0
    s.depth = 1
    s.nodes = 0
    s.budget = budget
    s.over = False
    with nogil:
        ok = extend(&s, 0, 1)
    if s.over:
        return UNKNOWN, [], s.nodes
    if ok:
        return FOUND, [path[i] for i in range(n)], s.nodes
    return REFUTED, [], s.nodes

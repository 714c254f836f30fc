"""Pure-Python kernels. ``_ckernels.pyx`` implements the same functions in Cython.

Every kernel takes the graph as ``adj`` (a sequence of neighbor bitmasks) plus
``n`` and must return results identical to its compiled twin.
"""
from __future__ import annotations

import sys

FOUND, REFUTED, UNKNOWN = 1, 0, -1


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


def _reach(adj, start, allowed):
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def count_components(adj, n, removed):
    left = ((1 << n) - 1) & ~removed
    count = 0
    while left:
        left &= ~_reach(adj, (left & -left).bit_length() - 1, left)
        count += 1
    return count


def refine_colors(adj, n):
    """Equitable color refinement starting from a single class.

    Colors are renumbered each round by sorting the signature
    (old color, count of neighbors in each color), so the result is invariant
    under relabeling.
    """
    color = [0] * n
    k = 1 if n else 0
    while True:
        sigs = []
        for v in range(n):
            cnt = [0] * k
            for u in _bits(adj[v]):
                cnt[color[u]] += 1
            sigs.append((color[v], tuple(cnt)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[s] for s in sigs]
        if len(order) == k:
            return new
        color, k = new, len(order)


def canonical_labeling(adj, n):
    """Return ``perm`` (new position -> old vertex) minimizing the graph6 bit string.

    Positions are filled cell by cell in color order; within that constraint
    the search is exhaustive with prefix pruning.
    """
    color = refine_colors(adj, n)
    cell_of_pos = sorted(color)
    path = [0] * n
    best = [0] * n
    best_cols = [0] * n
    # status[j]: 0 = prefix through position j-1 equals best, 1 = strictly less
    status = [1] * (n + 1)

    def place(j, used):
        if j == n:
            if status[j] == 1:
                best[:] = path
                for i in range(n + 1):
                    status[i] = 0
            return
        want = cell_of_pos[j]
        for v in range(n):
            if used >> v & 1 or color[v] != want:
                continue
            c = 0
            a = adj[v]
            for i in range(j):
                c = (c << 1) | (a >> path[i] & 1)
            if status[j] == 0:
                if c > best_cols[j]:
                    continue
                st = 1 if c < best_cols[j] else 0
            else:
                st = 1
            path[j] = v
            status[j + 1] = st
            if st == 1:
                best_cols[j] = c
            place(j + 1, used | (1 << v))

    old_limit = sys.getrecursionlimit()
    if n + 50 > old_limit:
        sys.setrecursionlimit(n + 100)
    place(0, 0)
    return tuple(best)


def toughness_scan(adj, n):
    """Least ratio |S|/c(G-S) over separators S with c(G-S) >= 2.

    Sizes are scanned upward and masks of each size in increasing numeric
    order, so the first optimum found has the smallest |S| and then the
    smallest mask. Sizes s with s/(n-s) >= best cannot improve and stop the
    scan. Returns ``(size, components, mask)`` or None if no separator exists.
    """
    best = None
    for s in range(0, n - 1):
        if best is not None and s * best[1] >= best[0] * (n - s):
            break
        if s == 0:
            masks = (0,)
        else:
            masks = _masks_of_size(n, s)
        for mask in masks:
            c = count_components(adj, n, mask)
            if c >= 2 and (best is None or s * best[1] < best[0] * c):
                best = (s, c, mask)
        if s == 0 and best is not None:
            return best
    return best


def _masks_of_size(n, s):
    mask = (1 << s) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def hamiltonian_dp(adj, n):
    """Subset DP: ``ends[S]`` holds every v such that a path from 0 covers exactly S and ends at v."""
    if n < 3:
        return False
    size = 1 << n
    ends = [0] * size
    ends[1] = 1
    full = size - 1
    for mask in range(1, size, 2):
        e = ends[mask]
        if not e:
            continue
        out = full & ~mask
        while out:
            low = out & -out
            u = low.bit_length() - 1
            if adj[u] & e:
                ends[mask | low] |= low
            out ^= low
    return bool(ends[full] & adj[0] & ~1)


class _Budget(Exception):
    pass


def hamiltonian_search(adj, n, budget):
    """Backtracking Hamiltonian cycle search anchored at vertex 0.

    Pruning: every unvisited vertex needs two usable neighbors (unvisited, the
    path end, or vertex 0); an unvisited neighbor of the path end whose only
    usable neighbors are the end and one other vertex forces the next step;
    the unvisited region must stay connected. Returns
    ``(status, cycle, nodes)`` with status FOUND, REFUTED or UNKNOWN.
    """
    if n < 3:
        return REFUTED, [], 0
    full = (1 << n) - 1
    path = [0]
    nodes = [0]

    def extend(v, visited):
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        free = full & ~visited
        if not free:
            return bool(adj[v] & 1)
        usable = free | (1 << v) | 1
        forced = -1
        for u in _bits(free):
            d = _popcount(adj[u] & usable)
            if d < 2:
                return False
            if d == 2 and adj[v] >> u & 1 and v != 0:
                if forced >= 0:
                    return False
                forced = u
        if not adj[v] & free or not adj[0] & free:
            return False
        start = (free & -free).bit_length() - 1
        if _reach(adj, start, free) != free:
            return False
        cands = (1 << forced) if forced >= 0 else adj[v] & free
        for u in _bits(cands):
            path.append(u)
            if extend(u, visited | (1 << u)):
                return True
            path.pop()
        return False

    old_limit = sys.getrecursionlimit()
    if n + 50 > old_limit:
        sys.setrecursionlimit(n + 100)
    try:
        ok = extend(0, 1)
    except _Budget:
        return UNKNOWN, [], nodes[0]
    return (FOUND, list(path), nodes[0]) if ok else (REFUTED, [], nodes[0])

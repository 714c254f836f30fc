"""Cycle enumeration and edge-dominating cycle search."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Cycle, Edge, Graph, bits, check_cycle
from .invariants import ResourceLimitError

DEFAULT_NODE_BUDGET = 10**7


class BudgetExceeded(ResourceLimitError):
    """The search budget ran out before the enumeration was exhausted."""


@dataclass(frozen=True)
class CycleQuery:
    """Which cycles to enumerate.

    ``order`` is ``canonical`` (lexicographic on canonical tuples),
    ``longest-first`` or ``shortest-first`` (by length, then canonical).
    ``limit`` caps the number of cycles yielded; ``node_budget`` caps search
    steps and raises :class:`BudgetExceeded` when hit.
    """

    min_length: int = 3
    max_length: int | None = None
    parity: str = "any"
    limit: int | None = None
    order: str = "canonical"
    node_budget: int = DEFAULT_NODE_BUDGET

    def bounds(self, n: int) -> tuple[int, int]:
        hi = n if self.max_length is None else self.max_length
        if self.min_length < 3 or self.min_length > max(hi, 3):
            raise ValueError(f"invalid length range [{self.min_length}, {hi}]")
        if hi > n:
            raise ValueError(f"max_length {hi} exceeds n = {n}")
        if self.parity not in ("any", "odd", "even"):
            raise ValueError(f"unknown parity filter {self.parity!r}")
        if self.order not in ("canonical", "longest-first", "shortest-first"):
            raise ValueError(f"unknown order {self.order!r}")
        return self.min_length, hi

    def lengths(self, n: int) -> list[int]:
        lo, hi = self.bounds(n)
        ls = [L for L in range(lo, hi + 1) if self.parity == "any" or (L % 2 == 1) == (self.parity == "odd")]
        return ls[::-1] if self.order == "longest-first" else ls


def _cycles(g: Graph, lo: int, hi: int, budget: list[int]) -> Iterator[Cycle]:
    """Cycles with lengths in [lo, hi], canonical form, lexicographic order.

    Paths start at their least vertex ``s`` and use only larger vertices; a
    cycle is reported when the path end is adjacent to ``s`` and the second
    vertex is smaller than the last (one of the two directions).
    """
    adj = g.adj
    path: list[int] = []

    def grow(s: int, end: int, used: int) -> Iterator[Cycle]:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("cycle enumeration budget exhausted")
        L = len(path)
        if L >= lo and L >= 3 and adj[end] >> s & 1 and path[1] < end:
            yield Cycle(path)
        if L == hi:
            return
        for x in bits(adj[end] & ~used):
            path.append(x)
            yield from grow(s, x, used | (1 << x))
            path.pop()

    for s in range(g.n):
        higher = ~((2 << s) - 1)
        for v1 in bits(adj[s] & higher):
            path[:] = [s, v1]
            # vertices below s are never used
            yield from grow(s, v1, ((2 << s) - 1) | (1 << v1))


def enumerate_cycles(g: Graph, q: CycleQuery = CycleQuery()) -> Iterator[Cycle]:
    """Yield each cycle matching ``q`` exactly once, deterministically ordered."""
    budget = [q.node_budget]
    count = 0
    if g.n < 3:
        return
    if q.order == "canonical":
        lo, hi = q.bounds(g.n)
        wanted = set(q.lengths(g.n))
        stream = (c for c in _cycles(g, lo, hi, budget) if len(c) in wanted)
    else:
        stream = (c for L in q.lengths(g.n) for c in _cycles(g, L, L, budget) if len(c) == L)
    for c in stream:
        if q.limit is not None and count >= q.limit:
            return
        count += 1
        yield c


def is_edge_dominating(g: Graph, c: Cycle) -> bool | Edge:
    """True when V(G) - V(C) spans no edge; otherwise the least such edge."""
    check_cycle(g, c)
    rest = g.vertex_mask & ~c.mask
    for u in bits(rest):
        hit = g.adj[u] & rest & ~((2 << u) - 1)
        if hit:
            return (u, (hit & -hit).bit_length() - 1)
    return True


@dataclass(frozen=True)
class EdcResult:
    """``status`` is ``found``, ``none`` (exhausted) or ``unknown`` (budget hit)."""

    status: str
    cycle: Cycle | None = None
    uncovered_edge: Edge | None = None
    candidates_tried: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def find_edge_dominating_cycle(
    g: Graph, prefer: str = "longest-first", node_budget: int = DEFAULT_NODE_BUDGET
) -> EdcResult:
    """First edge-dominating cycle in the preferred order.

    ``uncovered_edge`` reports the obstruction of the last rejected candidate
    when nothing is found. Budget exhaustion gives status ``unknown``.
    """
    if prefer not in ("longest-first", "shortest-first"):
        raise ValueError(f"unknown preference {prefer!r}")
    if g.n < 3:
        return EdcResult("none")
    q = CycleQuery(order=prefer, node_budget=node_budget)
    last = None
    tried = 0
    try:
        for c in enumerate_cycles(g, q):
            tried += 1
            res = is_edge_dominating(g, c)
            if res is True:
                return EdcResult("found", c, None, tried)
            last = res
    except BudgetExceeded:
        return EdcResult("unknown", None, last, tried)
    return EdcResult("none", None, last, tried)


def longest_cycle(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> Cycle | None:
    """A longest cycle (canonically least among them), or None for forests."""
    if g.n < 3:
        return None
    q = CycleQuery(order="longest-first", limit=1, node_budget=node_budget)
    return next(enumerate_cycles(g, q), None)


def longest_cycles(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> list[Cycle]:
    """All cycles of maximum length."""
    first = longest_cycle(g, node_budget)
    if first is None:
        return []
    L = len(first)
    return list(enumerate_cycles(g, CycleQuery(min_length=L, max_length=L, node_budget=node_budget)))

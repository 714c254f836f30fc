"""Immutable simple graphs on vertices 0..n-1 with bitmask adjacency.

Vertex sets are plain ``int`` bitmasks throughout the package (bit ``v`` set
means vertex ``v`` is in the set); :func:`bits` and :func:`mask_of` convert.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Simple undirected graph. Immutable after construction.

    ``adj[v]`` is the neighbor bitmask of ``v``; ``edges`` is the sorted list of
    pairs ``(u, v)`` with ``u < v``.
    """

    __slots__ = ("n", "adj", "edges", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init(n, tuple(adj))

    def _init(self, n: int, adj: tuple[int, ...]) -> None:
        self.n = n
        self.adj = adj
        self.edges = tuple((u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1)))
        self._hash = hash((n, adj))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        """Build from neighbor bitmasks; checks symmetry and loop-freeness."""
        n = len(adj)
        adj = tuple(int(a) for a in adj)
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has neighbors outside [0, {n})")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        g = cls.__new__(cls)
        g._init(n, adj)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.n == 0 or reach(self, 0, self.vertex_mask) == self.vertex_mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def reach(g: Graph, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph, removed: int = 0) -> list[int]:
    """Components of ``g`` minus the vertex set ``removed``, ordered by least vertex."""
    left = g.vertex_mask & ~removed
    comps = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = reach(g, v, left)
        comps.append(comp)
        left &= ~comp
    return comps


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``s``, relabeled 0..|s|-1 in increasing order.

    Returns the subgraph and the index map (new label -> old vertex).
    """
    if not isinstance(s, int):
        s = mask_of(s)
    if s & ~g.vertex_mask:
        raise ValueError("vertex set exceeds graph range")
    old = tuple(bits(s))
    new_of = {v: i for i, v in enumerate(old)}
    adj = tuple(mask_of(new_of[u] for u in bits(g.adj[v] & s)) for v in old)
    return Graph.from_adjacency(adj), old


class Cycle:
    """A cycle as a vertex sequence, normalized up to rotation and reflection.

    The stored ``vertices`` start at the least vertex, and the second entry is
    smaller than the last. Host-graph membership is checked by :func:`check_cycle`.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        vs = [int(v) for v in vertices]
        if len(vs) < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[1] > vs[-1]:
            vs = [vs[0]] + vs[:0:-1]
        self.vertices = tuple(vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def cycle_edges(self) -> list[Edge]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.vertices == other.vertices

    def __lt__(self, other: "Cycle") -> bool:
        return self.vertices < other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Cycle({list(self.vertices)})"

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


def is_cycle_of(g: Graph, c: Cycle) -> bool:
    return all(v < g.n for v in c) and all(g.has_edge(u, v) for u, v in c.cycle_edges())


def check_cycle(g: Graph, c: Cycle) -> None:
    for u, v in c.cycle_edges():
        if not g.has_edge(u, v):
            raise ValueError(f"{c!r} is not a cycle of the graph: ({u}, {v}) is not an edge")

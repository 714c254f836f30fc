"""Exact structural invariants: toughness, k-chordality, connectivity and the
degree conditions on independent triples and remote edges."""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from . import kernels
from .graph import Cycle, Edge, Graph, bits, connected_components, popcount


class ResourceLimitError(RuntimeError):
    """A search was refused or abandoned because it exceeds the configured size or budget."""


@functools.total_ordering
class _Infinity:
    """Positive infinity for exact comparisons against ints and Fractions."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash(float("inf"))

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = _Infinity()
Rational = Fraction | _Infinity


def format_rational(x: Rational) -> str:
    """``"inf"`` or ``"num/den"`` (always with a denominator)."""
    if x is INF:
        return "inf"
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    return INF if text.strip() == "inf" else Fraction(text)


@dataclass(frozen=True)
class ToughnessCertificate:
    value: Rational
    separator: int = 0
    component_count: int | None = None
    degenerate: bool = False  # input was disconnected

    @property
    def separator_vertices(self) -> list[int]:
        return list(bits(self.separator))

    def replay(self, g: Graph) -> bool:
        """Re-derive the value from the separator."""
        if self.value is INF:
            return g.is_complete() and self.separator == 0
        comps = len(connected_components(g, self.separator))
        return comps == self.component_count and Fraction(popcount(self.separator), comps) == self.value


def toughness(g: Graph) -> ToughnessCertificate:
    """Exact toughness min |S| / c(G - S) over separators leaving >= 2 components.

    Complete graphs (including K1) have no separator and are infinitely tough.
    A disconnected graph yields value 0 with the empty separator and
    ``degenerate=True``. Ties go to the smallest separator, then to the
    numerically smallest bitmask.
    """
    if g.n == 0:
        raise ValueError("toughness of the empty graph is undefined")
    res = kernels.toughness_scan(g.adj, g.n)
    if res is None:
        return ToughnessCertificate(INF)
    size, comps, mask = res
    return ToughnessCertificate(Fraction(size, comps), mask, comps, degenerate=size == 0)


def is_beta_tough(g: Graph, threshold: Rational = Fraction(1), strict: bool = True) -> bool:
    t = toughness(g).value
    return t > threshold if strict else t >= threshold


@dataclass(frozen=True)
class HoleWitness:
    """A chordless cycle; its length refutes k-chordality for every k <= len."""

    cycle: Cycle

    def __len__(self) -> int:
        return len(self.cycle)

    def replay(self, g: Graph, k: int = 3) -> bool:
        vs = self.cycle.vertices
        p = len(vs)
        if p < max(k, 4):
            return False
        for i in range(p):
            for j in range(i + 2, p):
                if (i, j) != (0, p - 1) and g.has_edge(vs[i], vs[j]):
                    return False
        return all(g.has_edge(u, v) for u, v in self.cycle.cycle_edges())


def chordless_cycles(g: Graph, min_length: int = 3) -> Iterator[Cycle]:
    """Every chordless cycle of length >= ``min_length``, each once, canonical form.

    Grows induced paths ``s, v1, ..., vl`` whose vertices all exceed the start
    ``s`` and where ``s`` is adjacent only to ``v1`` until the path closes.
    Emission order is lexicographic on the canonical vertex tuples.
    """
    adj = g.adj
    n = g.n
    path: list[int] = []

    def grow(s: int, inner_block: int, end: int) -> Iterator[Cycle]:
        # inner_block: closed neighborhoods of path vertices except the end and s
        for x in bits(adj[end] & ~inner_block & ~((1 << (s + 1)) - 1)):
            if adj[s] >> x & 1:
                if len(path) >= 2 and path[1] < x and len(path) + 1 >= min_length:
                    yield Cycle(path + [x])
                continue
            path.append(x)
            yield from grow(s, inner_block | adj[end] | (1 << end), x)
            path.pop()

    for s in range(n):
        for v1 in bits(adj[s] >> (s + 1) << (s + 1)):
            path[:] = [s, v1]
            yield from grow(s, (1 << s), v1)


def is_k_chordal(g: Graph, k: int, max_n: int = 16) -> bool | HoleWitness:
    """True when every cycle of length >= k has a chord; otherwise the first hole found.

    It is enough to look at chordless cycles: a cycle without a chord is
    itself the witness. Triangles never have chords, so k = 3 is treated
    like k = 4 (chordal). ``max_n`` guards the exponential search.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if g.n > max_n:
        raise ResourceLimitError(f"hole search limited to n <= {max_n} (graph has {g.n} vertices)")
    for c in chordless_cycles(g, max(k, 4)):
        return HoleWitness(c)
    return True


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; ``n - 1`` for complete graphs, 0 when disconnected."""
    n = g.n
    if g.is_complete():
        return max(n - 1, 0)
    if not g.is_connected():
        return 0
    best = n - 1
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v):
                best = min(best, _local_connectivity(g, u, v, best))
    return best


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Max number of internally disjoint s-t paths (stops at ``cap``).

    Unit-capacity flow on the split graph: vertex v becomes v_in=2v, v_out=2v+1.
    """
    n = g.n
    cap_map: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap_map:
            out[a].append(b)
            out[b].append(a)
            cap_map.setdefault((b, a), 0)
        cap_map[(a, b)] = cap_map.get((a, b), 0) + c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev = {src: src}
        queue = [src]
        for a in queue:
            if a == dst:
                break
            for b in out[a]:
                if b not in prev and cap_map[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if dst not in prev:
            break
        b = dst
        while b != src:
            a = prev[b]
            cap_map[(a, b)] -= 1
            cap_map[(b, a)] += 1
            b = a
        flow += 1
    return flow


def independent_triples(g: Graph) -> Iterator[tuple[int, int, int]]:
    adj = g.adj
    for a in range(g.n):
        for b in bits(~adj[a] & g.vertex_mask & ~((2 << a) - 1)):
            for c in bits(~adj[a] & ~adj[b] & g.vertex_mask & ~((2 << b) - 1)):
                yield a, b, c


def _min_triple(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    deg = g.degrees()
    best = None
    for t in independent_triples(g):
        s = deg[t[0]] + deg[t[1]] + deg[t[2]]
        if best is None or s < best[0]:
            best = (s, t)
    return best


def delta3(g: Graph) -> int | _Infinity:
    """Least degree sum of an independent triple; INF if there is none."""
    best = _min_triple(g)
    return INF if best is None else best[0]


def _check_edge(g: Graph, e: Edge) -> tuple[int, int]:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    return (u, v) if u < v else (v, u)


def edge_degree(g: Graph, e: Edge) -> int:
    """|N(u) ∪ N(v) - {u, v}| for the edge e = uv."""
    u, v = _check_edge(g, e)
    return popcount((g.adj[u] | g.adj[v]) & ~((1 << u) | (1 << v)))


def are_remote(g: Graph, e1: Edge, e2: Edge) -> bool:
    """Disjoint edges with no edge between their endpoints."""
    a, b = _check_edge(g, e1)
    c, d = _check_edge(g, e2)
    ends2 = (1 << c) | (1 << d)
    closed1 = g.adj[a] | g.adj[b] | (1 << a) | (1 << b)
    return not closed1 & ends2


def remote_families(g: Graph, size: int) -> Iterator[tuple[Edge, ...]]:
    """All sets of ``size`` mutually remote edges, as sorted edge tuples in lexicographic order."""
    edges = g.edges
    adj = g.adj
    chosen: list[Edge] = []

    def rec(start: int, blocked: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if blocked >> u & 1 or blocked >> v & 1:
                continue
            chosen.append(edges[i])
            yield from rec(i + 1, blocked | adj[u] | adj[v] | (1 << u) | (1 << v))
            chosen.pop()

    if size > 0:
        yield from rec(0, 0)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one degree condition.

    ``witness`` is the violating tuple with the smallest left-hand side
    (lexicographically first among ties) when the condition fails; when it
    holds, ``value`` is the attained minimum (None when vacuous).
    ``precondition`` records the connectivity hypothesis where one applies.
    """

    condition: str
    holds: bool
    value: int | _Infinity | None
    bound: str
    witness: tuple | None = None
    precondition: bool | None = None
    notes: dict = field(default_factory=dict)

    @property
    def vacuous(self) -> bool:
        return self.holds and self.value in (None, INF)

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "holds": self.holds,
            "value": None if self.value is None else str(self.value),
            "bound": self.bound,
            "witness": self.witness,
            "precondition": self.precondition,
            "vacuous": self.vacuous,
        }


CONDITIONS = ("delta3", "yoshimoto", "corollary2", "veldman:<k>")


def _min_family(g: Graph, size: int) -> tuple[int, tuple[Edge, ...]] | None:
    best = None
    for fam in remote_families(g, size):
        s = sum(edge_degree(g, e) for e in fam)
        if best is None or s < best[0]:
            best = (s, fam)
    return best


def check_condition(g: Graph, which: str) -> ConditionReport:
    """Evaluate ``delta3``, ``yoshimoto``, ``veldman:<k>`` or ``corollary2``.

    * delta3: δ3(G) >= n + 2.
    * veldman:k: every k+1 mutually remote edges have degree sum > k(n-k)/2;
      ``precondition`` says whether G is k-connected.
    * corollary2: the literal three-edge variant, sum over every 3 mutually
      remote edges > (3/2)(n-3).
    * yoshimoto: d(e1) + d(e2) > n - 4 for every remote pair.
    """
    n = g.n
    if which == "delta3":
        best = _min_triple(g)
        if best is None:
            return ConditionReport(which, True, INF, f">= {n + 2}")
        s, t = best
        ok = s >= n + 2
        return ConditionReport(which, ok, s, f">= {n + 2}", None if ok else t)
    if which == "yoshimoto":
        size, lhs_scale, rhs, bound = 2, 1, n - 4, f"> {n - 4}"
        pre = None
    elif which == "corollary2":
        size, lhs_scale, rhs, bound = 3, 2, 3 * (n - 3), f"> 3({n}-3)/2"
        pre = None
    elif which.startswith("veldman:"):
        k = int(which.split(":", 1)[1])
        if k < 2:
            raise ValueError("veldman condition needs k >= 2")
        size, lhs_scale, rhs, bound = k + 1, 2, k * (n - k), f"> {k}({n}-{k})/2"
        pre = vertex_connectivity(g) >= k
    else:
        raise ValueError(f"unknown condition {which!r}; expected one of {CONDITIONS}")
    best = _min_family(g, size)
    if best is None:
        return ConditionReport(which, True, None, bound, precondition=pre)
    s, fam = best
    ok = lhs_scale * s > rhs
    return ConditionReport(which, ok, s, bound, None if ok else fam, precondition=pre)


def condition_violators(g: Graph, which: str) -> Iterator[tuple]:
    """Every tuple violating the condition, by plain enumeration (for audits)."""
    n = g.n
    if which == "delta3":
        deg = g.degrees()
        for t in itertools.combinations(range(n), 3):
            if not any(g.has_edge(a, b) for a, b in itertools.combinations(t, 2)):
                if sum(deg[v] for v in t) < n + 2:
                    yield t
        return
    if which == "yoshimoto":
        size, test = 2, lambda s: s > n - 4
    elif which == "corollary2":
        size, test = 3, lambda s: 2 * s > 3 * (n - 3)
    else:
        k = int(which.split(":", 1)[1])
        size, test = k + 1, lambda s: 2 * s > k * (n - k)
    for fam in itertools.combinations(g.edges, size):
        if all(are_remote(g, a, b) for a, b in itertools.combinations(fam, 2)):
            if not test(sum(edge_degree(g, e) for e in fam)):
                yield fam

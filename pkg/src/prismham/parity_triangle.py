"""Parity triangles on odd cycles of 5-chordal graphs.

On an odd cycle ``c_0 ... c_{p-1}`` a parity triangle is a cycle edge
``(c_j, c_{j+1})`` plus an apex ``c_m`` adjacent to both, where the gap
``(j - m) mod p`` is odd (so it equals ``2q - 1``). In a 5-chordal graph every
odd cycle has one; :func:`find_parity_triangle` builds it by repeatedly
splitting the cycle along a chord and keeping the odd half.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Cycle, Graph, check_cycle


class NotFiveChordalError(ValueError):
    """The recursion met a chordless cycle of length >= 5 (``hole`` holds its vertices)."""

    def __init__(self, message: str, hole: tuple[int, ...] | None = None):
        super().__init__(message)
        self.hole = hole


@dataclass(frozen=True)
class TriangleWitness:
    apex: int  # cycle position m
    edge_pos: int  # cycle position j; the edge is (c_j, c_{j+1 mod p})
    p: int

    @property
    def gap(self) -> int:
        return (self.edge_pos - self.apex) % self.p

    @property
    def q(self) -> int:
        return (self.gap + 1) // 2

    def positions(self) -> tuple[int, int, int]:
        return self.apex, self.edge_pos, (self.edge_pos + 1) % self.p

    def vertices(self, c: Cycle) -> tuple[int, int, int]:
        return tuple(c[i] for i in self.positions())

    def describe(self, c: Cycle) -> str:
        a, u, v = self.vertices(c)
        m, j, j1 = self.positions()
        return f"apex={a} edge=({u},{v}) q={self.q} positions=({m},{j},{j1})"


@dataclass(frozen=True)
class SplitStep:
    """One reduction step.

    ``chord`` is the chord as positions of the current cycle, ``t`` the number
    of vertices on the arc from the chord's first end to its second (so the
    proof's C1 has t vertices), ``branch`` one of ``base``, ``immediate``,
    ``C1``, ``C2``, and ``labels[i]`` is the current-cycle position of the
    next cycle's position i (empty for terminal steps).
    """

    size: int
    chord: tuple[int, int] | None
    t: int | None
    branch: str
    labels: tuple[int, ...] = ()


@dataclass(frozen=True)
class ParityResult:
    witness: TriangleWitness
    trace: tuple[SplitStep, ...] = field(default=())
    fallback: bool = False  # recursion's candidate failed verification
    candidate: tuple[int, int, int] | None = None  # recursion's triangle as original positions

    def trace_lines(self) -> list[str]:
        out = []
        for k, st in enumerate(self.trace):
            chord = "-" if st.chord is None else f"({st.chord[0]},{st.chord[1]})"
            t = "-" if st.t is None else str(st.t)
            labels = " ".join(map(str, st.labels))
            out.append(f"step {k}: size={st.size} chord={chord} t={t} branch={st.branch} labels=[{labels}]")
        return out


def verify_parity_triangle(g: Graph, c: Cycle, w: TriangleWitness) -> bool:
    """Check parity, the three triangle edges and the q range against cycle ``c``."""
    p = len(c)
    m, j = w.apex, w.edge_pos
    if w.p != p or not (0 <= m < p and 0 <= j < p):
        return False
    gap = (j - m) % p
    if gap % 2 == 0 or gap == p - 1:
        return False
    if not 1 <= (gap + 1) // 2 <= (p - 1) // 2:
        return False
    a, u, v = c[m], c[j], c[j + 1]
    return g.has_edge(a, u) and g.has_edge(a, v) and g.has_edge(u, v)


def brute_force_parity_triangle(g: Graph, c: Cycle) -> TriangleWitness | None:
    """First valid witness scanning apex m, then edge position j, upward."""
    p = len(c)
    for m in range(p):
        for j in range(p):
            w = TriangleWitness(m, j, p)
            if verify_parity_triangle(g, c, w):
                return w
    return None


def _first_chord(g: Graph, verts: list[int]) -> tuple[int, int] | None:
    L = len(verts)
    for a in range(L):
        for b in range(a + 2, L):
            if (a, b) != (0, L - 1) and g.has_edge(verts[a], verts[b]):
                return a, b
    return None


def _reduce(g: Graph, c: Cycle) -> tuple[tuple[int, int, int], tuple[SplitStep, ...]]:
    """Run the chord-splitting recursion (iteratively).

    Returns the final triangle as original positions (apex, edge end, edge
    end) and the trace.
    """
    p = len(c)
    labels = list(range(p))  # current position -> original position
    steps = []
    while True:
        L = len(labels)
        verts = [c[i] for i in labels]
        if L == 3:
            steps.append(SplitStep(3, None, None, "base"))
            tri = (0, 1, 2)
            break
        chord = _first_chord(g, verts)
        if chord is None:
            raise NotFiveChordalError(
                f"chordless cycle of length {L} met while splitting: {verts}", tuple(verts)
            )
        a, b = chord
        idx = b - a
        t = idx + 1
        rot = labels[a:] + labels[:a]
        if idx == 2:
            steps.append(SplitStep(L, chord, t, "immediate"))
            labels = rot
            tri = (0, 1, 2)
            break
        if t % 2 == 1:
            local = tuple((a + i) % L for i in range(t))
            steps.append(SplitStep(L, chord, t, "C1", local))
            labels = rot[:t]
        else:
            local = ((a) % L,) + tuple((a + i) % L for i in range(idx, L))
            steps.append(SplitStep(L, chord, t, "C2", local))
            labels = [rot[0]] + rot[idx:]
        if len(labels) % 2 == 0:
            raise AssertionError("parity of the kept sub-cycle must stay odd")
    return tuple(labels[i] for i in tri), tuple(steps)


def _as_witness(p: int, tri: tuple[int, int, int]) -> TriangleWitness | None:
    apex, x, y = tri
    if (x + 1) % p == y:
        return TriangleWitness(apex, x, p)
    if (y + 1) % p == x:
        return TriangleWitness(apex, y, p)
    return None


def find_parity_triangle(g: Graph, c: Cycle) -> ParityResult:
    """Constructive parity triangle for an odd cycle of ``g``.

    Splits along the least chord (after rotating it to start at position 0):
    chord to position 2 closes a triangle immediately; an odd arc of t
    vertices keeps that arc, an even one keeps the other side, relabeled to
    start at the chord. The resulting triangle is re-verified on ``c``; if its
    base edge turns out to be a chord rather than a cycle edge, the
    exhaustive scan supplies the witness and ``fallback`` is set.

    Raises ValueError for even cycles, :class:`NotFiveChordalError` when a
    sub-cycle of length >= 5 has no chord or no witness exists at all.
    """
    check_cycle(g, c)
    p = len(c)
    if p % 2 == 0:
        raise ValueError(f"parity triangles are defined on odd cycles; got length {p}")
    tri, trace = _reduce(g, c)
    w = _as_witness(p, tri)
    if w is not None and verify_parity_triangle(g, c, w):
        return ParityResult(w, trace, False, tri)
    fb = brute_force_parity_triangle(g, c)
    if fb is None:
        raise NotFiveChordalError(f"no parity triangle on {c!r}; the graph is not 5-chordal")
    return ParityResult(fb, trace, True, tri)


def replay_trace(trace: tuple[SplitStep, ...]) -> tuple[int, int, int]:
    """Compose the label maps of a trace and map the terminal triangle back."""
    composed: list[int] | None = None
    for st in trace:
        if st.branch in ("base", "immediate"):
            if st.branch == "immediate":
                a = st.chord[0]
                local = [(a + i) % st.size for i in range(3)]
            else:
                local = [0, 1, 2]
            return tuple(local[i] if composed is None else composed[local[i]] for i in range(3))
        composed = list(st.labels) if composed is None else [composed[i] for i in st.labels]
    raise ValueError("trace has no terminal step")

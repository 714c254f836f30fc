"""Prisms, Hamiltonian cycle search, and the per-graph theorem check."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .cycles import DEFAULT_NODE_BUDGET, EdcResult, find_edge_dominating_cycle
from .formats import write_graph6
from .graph import Cycle, Graph
from .invariants import (
    ConditionReport,
    HoleWitness,
    ResourceLimitError,
    check_condition,
    format_rational,
    is_k_chordal,
    toughness,
)
from .parity_triangle import NotFiveChordalError, ParityResult, find_parity_triangle

HAM_BUDGET = 10**8
DP_MAX_N = 18


class PrismVertex(NamedTuple):
    base: int
    layer: int


def prism(g: Graph) -> tuple[Graph, list[PrismVertex]]:
    """G x K2 with (v, layer) numbered ``v + layer * n``."""
    n = g.n
    edges = [(u + layer * n, v + layer * n) for layer in (0, 1) for u, v in g.edges]
    edges += [(v, v + n) for v in range(n)]
    return Graph(2 * n, edges), [PrismVertex(i % n, i // n) for i in range(2 * n)] if n else []


@dataclass(frozen=True)
class HamResult:
    """``status`` is ``found``, ``refuted`` or ``unknown``; ``cycle`` the certificate when found."""

    status: str
    cycle: Cycle | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


_STATUS = {kernels.FOUND: "found", kernels.REFUTED: "refuted", kernels.UNKNOWN: "unknown"}


def find_hamiltonian_cycle(g: Graph, budget: int = HAM_BUDGET) -> HamResult:
    """Exact backtracking search; ``refuted`` only after exhausting the tree."""
    status, path, nodes = kernels.hamiltonian_search(g.adj, g.n, budget)
    return HamResult(_STATUS[status], Cycle(path) if path else None, nodes)


def verify_hamiltonian(g: Graph, c: Cycle) -> bool:
    return len(c) == g.n and all(g.has_edge(u, v) for u, v in c.cycle_edges())


def hamiltonicity_oracle(g: Graph, max_n: int = DP_MAX_N) -> bool:
    """Existence-only subset dynamic program, independent of the backtracking search."""
    if g.n > max_n:
        raise ResourceLimitError(f"subset DP limited to n <= {max_n}, got {g.n}")
    return kernels.hamiltonian_dp(g.adj, g.n)


@dataclass(frozen=True)
class PrismHamResult:
    status: str
    cycle: tuple[PrismVertex, ...] | None = None
    prism_cycle: Cycle | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def is_prism_hamiltonian(g: Graph, budget: int = HAM_BUDGET) -> PrismHamResult:
    pg, labels = prism(g)
    res = find_hamiltonian_cycle(pg, budget)
    if not res.found:
        return PrismHamResult(res.status, nodes=res.nodes)
    return PrismHamResult("found", tuple(labels[v] for v in res.cycle), res.cycle, res.nodes)


@dataclass
class TheoremReport:
    """Hypotheses and conclusion of the prism theorem for one graph.

    ``hypothesis`` means toughness > 1, 5-chordal and an edge-dominating cycle
    exists; ``conclusion`` means a Hamiltonian cycle of the prism was found.
    ``inconclusive`` is set when any search hit its budget.
    """

    graph6: str
    n: int
    toughness: Fraction | object
    chordal5: bool | None
    hole: tuple[int, ...] | None
    edc: Cycle | None
    edc_status: str
    triangle: str | None
    triangle_fallback: bool
    prism_ham: str
    prism_cycle: tuple[PrismVertex, ...] | None
    hypothesis: bool
    conclusion: bool
    inconclusive: bool

    @property
    def edc_parity(self) -> str | None:
        return None if self.edc is None else self.edc.parity

    @property
    def violates(self) -> bool:
        return self.hypothesis and not self.conclusion and not self.inconclusive

    def to_record(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "toughness": format_rational(self.toughness),
            "chordal5": self.chordal5,
            "hole": None if self.hole is None else list(self.hole),
            "edc": None if self.edc is None else str(self.edc),
            "edc_status": self.edc_status,
            "edc_parity": self.edc_parity,
            "triangle": self.triangle,
            "triangle_fallback": self.triangle_fallback,
            "prism_ham": self.prism_ham,
            "prism_cycle": None if self.prism_cycle is None else " ".join(f"{b}.{l}" for b, l in self.prism_cycle),
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "inconclusive": self.inconclusive,
        }


def _chordal5(g: Graph) -> tuple[bool | None, tuple[int, ...] | None]:
    try:
        res = is_k_chordal(g, 5)
    except ResourceLimitError:
        return None, None
    if isinstance(res, HoleWitness):
        return False, res.cycle.vertices
    return True, None


def verify_theorem(
    g: Graph, ham_budget: int = HAM_BUDGET, cycle_budget: int = DEFAULT_NODE_BUDGET
) -> TheoremReport:
    """Evaluate every hypothesis and the conclusion (the latter regardless of the former).

    When the edge-dominating cycle found is odd, its parity triangle is
    computed as well, since that is the case of the argument that needs it.
    """
    if not g.is_connected():
        raise ValueError("verify_theorem expects a connected graph")
    inconclusive = False
    t = toughness(g).value
    chordal5, hole = _chordal5(g)
    if chordal5 is None:
        inconclusive = True
    edc: EdcResult = find_edge_dominating_cycle(g, node_budget=cycle_budget)
    if edc.status == "unknown":
        inconclusive = True
    triangle = None
    fallback = False
    if edc.found and edc.cycle.is_odd:
        try:
            pr: ParityResult = find_parity_triangle(g, edc.cycle)
            triangle = pr.witness.describe(edc.cycle)
            fallback = pr.fallback
        except NotFiveChordalError:
            triangle = None
    ph = is_prism_hamiltonian(g, ham_budget)
    if ph.status == "unknown":
        inconclusive = True
    hypothesis = t > 1 and chordal5 is True and edc.found
    return TheoremReport(
        graph6=write_graph6(g),
        n=g.n,
        toughness=t,
        chordal5=chordal5,
        hole=hole,
        edc=edc.cycle,
        edc_status=edc.status,
        triangle=triangle,
        triangle_fallback=fallback,
        prism_ham=ph.status,
        prism_cycle=ph.cycle,
        hypothesis=hypothesis,
        conclusion=ph.found,
        inconclusive=inconclusive,
    )


COROLLARY_CONDITIONS = {1: "delta3", 2: "veldman:3", 3: "yoshimoto"}


@dataclass(frozen=True)
class CorollaryReport:
    """Outcome of one corollary on one graph.

    ``status``: ``not-applicable`` (some hypothesis fails), ``confirmed``
    (EDC and prism certificate found), ``counterexample`` or ``inconclusive``.
    """

    corollary: str
    condition: ConditionReport
    tough: bool
    chordal5: bool | None
    edc: Cycle | None
    prism_ham: str | None
    status: str

    @property
    def applicable(self) -> bool:
        return self.status != "not-applicable"

    def to_record(self) -> dict:
        return {
            "corollary": self.corollary,
            "condition": self.condition.to_dict(),
            "tough": self.tough,
            "chordal5": self.chordal5,
            "edc": None if self.edc is None else str(self.edc),
            "prism_ham": self.prism_ham,
            "status": self.status,
        }


def check_corollary(
    g: Graph, which: int, reading: str = "veldman", ham_budget: int = HAM_BUDGET
) -> CorollaryReport:
    """Condition plus toughness > 1 and 5-chordality imply an EDC and a prism Hamiltonian cycle.

    The remote-edge-family condition (which=2) has two readings: ``veldman`` (four mutually remote edges,
    threshold 3(n-3)/2, 3-connectivity) and ``literal`` (three edges, same
    threshold).
    """
    if which not in (1, 2, 3):
        raise ValueError(f"corollary must be 1, 2 or 3, got {which}")
    if which == 2 and reading not in ("veldman", "literal"):
        raise ValueError(f"unknown reading {reading!r}")
    cond_name = "corollary2" if which == 2 and reading == "literal" else COROLLARY_CONDITIONS[which]
    label = f"{which}" if which != 2 else f"2:{reading}"
    cond = check_condition(g, cond_name)
    tough = toughness(g).value > 1
    chordal5, _ = _chordal5(g)
    pre_ok = cond.precondition is not False
    if not (cond.holds and pre_ok and tough and chordal5):
        status = "inconclusive" if chordal5 is None else "not-applicable"
        return CorollaryReport(label, cond, tough, chordal5, None, None, status)
    edc = find_edge_dominating_cycle(g)
    ph = is_prism_hamiltonian(g, ham_budget)
    if edc.status == "unknown" or ph.status == "unknown":
        status = "inconclusive"
    elif edc.found and ph.found:
        status = "confirmed"
    else:
        status = "counterexample"
    return CorollaryReport(label, cond, tough, chordal5, edc.cycle, ph.status, status)

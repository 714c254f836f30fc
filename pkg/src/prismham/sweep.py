"""Corpus sweeps: theorem, parity-triangle lemma and corollary checks, plus the
toughness exploration for graphs without edge-dominating cycles."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .cycles import CycleQuery, enumerate_cycles, find_edge_dominating_cycle
from .formats import parse_graph6, write_graph6
from .graph import Graph
from .invariants import format_rational, is_k_chordal, toughness
from .parity_triangle import (
    NotFiveChordalError,
    brute_force_parity_triangle,
    find_parity_triangle,
    verify_parity_triangle,
)
from .prism_ham import check_corollary, verify_theorem

CHECKS = ("theorem", "lemma2", "corollaries")
COROLLARY_RUNS = ((1, "veldman"), (2, "veldman"), (2, "literal"), (3, "veldman"))

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def lemma2_graph(g: Graph) -> dict:
    """Run the parity-triangle construction and the brute-force scan on every odd cycle of ``g``.

    ``g`` must be 5-chordal. Counts instances, agreements of the two routes,
    fallback activations, and lists any cycle where either route fails.
    """
    out = {"instances": 0, "agree": 0, "fallbacks": 0, "failures": []}
    for c in enumerate_cycles(g, CycleQuery(parity="odd")):
        out["instances"] += 1
        bf = brute_force_parity_triangle(g, c)
        try:
            res = find_parity_triangle(g, c)
            ok = verify_parity_triangle(g, c, res.witness)
            out["fallbacks"] += res.fallback
        except NotFiveChordalError:
            ok = False
        if ok == (bf is not None):
            out["agree"] += 1
        if not ok or bf is None:
            out["failures"].append({"graph6": write_graph6(g), "cycle": str(c), "recursive": ok, "brute_force": bf is not None})
    return out


def analyze_graph(g: Graph, checks: tuple[str, ...]) -> dict:
    """Per-graph work unit of a sweep; returns plain data so it can cross process boundaries."""
    res: dict = {"graph6": write_graph6(g), "n": g.n}
    if "theorem" in checks:
        res["theorem"] = verify_theorem(g)
    if "lemma2" in checks:
        chordal5 = res["theorem"].chordal5 if "theorem" in res else is_k_chordal(g, 5) is True
        res["lemma2"] = lemma2_graph(g) if chordal5 else None
    if "corollaries" in checks:
        res["corollaries"] = [check_corollary(g, k, reading) for k, reading in COROLLARY_RUNS]
    return res


def _analyze_g6(args: tuple[str, tuple[str, ...]]) -> dict:
    g6, checks = args
    return analyze_graph(parse_graph6(g6), checks)


@dataclass
class CorollaryTally:
    condition_holds: int = 0
    applicable: int = 0
    confirmed: int = 0
    nonvacuous_confirmed: int = 0
    inconclusive: int = 0
    counterexamples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class ExtremalRow:
    n: int
    graphs: int = 0
    no_edc: int = 0
    max_toughness: object = None
    min_toughness: object = None
    witnesses: list = field(default_factory=list)

    def add(self, t, g6: str, keep: int = 5) -> None:
        self.no_edc += 1
        if self.max_toughness is None or t > self.max_toughness:
            self.max_toughness, self.witnesses = t, [g6]
        elif t == self.max_toughness and len(self.witnesses) < keep:
            self.witnesses.append(g6)
        if self.min_toughness is None or t < self.min_toughness:
            self.min_toughness = t

    def to_dict(self) -> dict:
        fmt = lambda t: None if t is None else format_rational(t)
        return {
            "n": self.n,
            "chordal5_graphs": self.graphs,
            "no_edc": self.no_edc,
            "max_toughness": fmt(self.max_toughness),
            "min_toughness": fmt(self.min_toughness),
            "witnesses": self.witnesses,
        }


@dataclass
class SweepReport:
    corpus: str
    checks: tuple[str, ...]
    total: int = 0
    hypothesis_met: int = 0
    conclusion_met: int = 0
    hypothesis_and_conclusion: int = 0
    inconclusive: int = 0
    odd_edc: int = 0
    theorem_fallbacks: int = 0
    counterexamples: list = field(default_factory=list)
    lemma2_graphs: int = 0
    lemma2_instances: int = 0
    lemma2_agree: int = 0
    lemma2_fallbacks: int = 0
    lemma2_failures: list = field(default_factory=list)
    corollaries: dict = field(default_factory=dict)
    extremal: dict = field(default_factory=dict)
    records: list = field(default_factory=list)

    def add(self, res: dict, keep_records: bool = False) -> None:
        self.total += 1
        rep = res.get("theorem")
        if rep is not None:
            self.hypothesis_met += rep.hypothesis
            self.conclusion_met += rep.conclusion
            self.hypothesis_and_conclusion += rep.hypothesis and rep.conclusion
            self.inconclusive += rep.inconclusive
            if rep.edc is not None and rep.edc.is_odd:
                self.odd_edc += 1
                self.theorem_fallbacks += rep.triangle_fallback
            if rep.violates:
                self.counterexamples.append(rep.graph6)
            if rep.chordal5 and rep.n >= 3:
                row = self.extremal.setdefault(rep.n, ExtremalRow(rep.n))
                row.graphs += 1
                if rep.edc_status == "none":
                    row.add(rep.toughness, rep.graph6)
            if keep_records:
                self.records.append(rep.to_record())
        l2 = res.get("lemma2")
        if l2 is not None:
            self.lemma2_graphs += 1
            self.lemma2_instances += l2["instances"]
            self.lemma2_agree += l2["agree"]
            self.lemma2_fallbacks += l2["fallbacks"]
            self.lemma2_failures.extend(l2["failures"])
        for cr in res.get("corollaries", ()):
            tally = self.corollaries.setdefault(cr.corollary, CorollaryTally())
            tally.condition_holds += cr.condition.holds
            tally.applicable += cr.applicable
            if cr.status == "confirmed":
                tally.confirmed += 1
                tally.nonvacuous_confirmed += not cr.condition.vacuous
            elif cr.status == "inconclusive":
                tally.inconclusive += 1
            elif cr.status == "counterexample":
                tally.counterexamples.append(res["graph6"])

    @property
    def violations(self) -> int:
        cor = sum(len(t.counterexamples) for k, t in self.corollaries.items() if not k.startswith("2:"))
        return len(self.counterexamples) + len(self.lemma2_failures) + cor

    @property
    def any_inconclusive(self) -> bool:
        return self.inconclusive > 0 or any(t.inconclusive for t in self.corollaries.values())

    def exit_code(self) -> int:
        if self.violations:
            return EXIT_VIOLATION
        if self.any_inconclusive:
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    def summary(self) -> dict:
        out = {
            "corpus": self.corpus,
            "checks": list(self.checks),
            "total": self.total,
        }
        if "theorem" in self.checks:
            out.update(
                hypothesis_met=self.hypothesis_met,
                conclusion_met=self.conclusion_met,
                hypothesis_and_conclusion=self.hypothesis_and_conclusion,
                inconclusive=self.inconclusive,
                odd_edc=self.odd_edc,
                theorem_triangle_fallbacks=self.theorem_fallbacks,
                counterexamples=self.counterexamples,
                no_edc_extremal=[self.extremal[k].to_dict() for k in sorted(self.extremal)],
            )
        if "lemma2" in self.checks:
            out.update(
                lemma2_graphs=self.lemma2_graphs,
                lemma2_instances=self.lemma2_instances,
                lemma2_agree=self.lemma2_agree,
                lemma2_fallbacks=self.lemma2_fallbacks,
                lemma2_failures=self.lemma2_failures,
            )
        if "corollaries" in self.checks:
            out["corollaries"] = {k: v.to_dict() for k, v in sorted(self.corollaries.items())}
        out["exit_code"] = self.exit_code()
        return out


def normalize_checks(checks: str | Iterable[str]) -> tuple[str, ...]:
    if isinstance(checks, str):
        checks = CHECKS if checks == "all" else (checks,)
    checks = tuple(checks)
    for c in checks:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; expected one of {CHECKS} or 'all'")
    return checks


def run_sweep(
    corpus: Iterable[Graph],
    checks: str | Iterable[str] = "theorem",
    jobs: int = 1,
    description: str = "",
    keep_records: bool = False,
) -> SweepReport:
    """Analyze every corpus graph and aggregate, preserving corpus order.

    Graphs with fewer than 3 vertices carry no cycles and are skipped by the
    theorem check. ``jobs > 1`` distributes graphs over worker processes.
    """
    checks = normalize_checks(checks)
    report = SweepReport(description, checks)
    graphs = [g for g in corpus if g.n >= 3]
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            work = [(write_graph6(g), checks) for g in graphs]
            for res in pool.map(_analyze_g6, work, chunksize=16):
                report.add(res, keep_records)
    else:
        for g in graphs:
            report.add(analyze_graph(g, checks), keep_records)
    return report


def explore_edc_toughness(corpus: Iterable[Graph]) -> list[dict]:
    """Per n, the toughness range of connected 5-chordal graphs with no edge-dominating cycle.

    Any toughness threshold forcing an edge-dominating cycle in 5-chordal
    graphs has to exceed the ``max_toughness`` column. Rows with an
    inconclusive search list them under ``inconclusive``.
    """
    rows: dict[int, ExtremalRow] = {}
    unknown: dict[int, list[str]] = {}
    for g in corpus:
        if g.n < 3 or is_k_chordal(g, 5) is not True:
            continue
        row = rows.setdefault(g.n, ExtremalRow(g.n))
        row.graphs += 1
        edc = find_edge_dominating_cycle(g)
        if edc.status == "none":
            row.add(toughness(g).value, write_graph6(g))
        elif edc.status == "unknown":
            unknown.setdefault(g.n, []).append(write_graph6(g))
    out = []
    for n in sorted(rows):
        d = rows[n].to_dict()
        d["inconclusive"] = unknown.get(n, [])
        out.append(d)
    return out


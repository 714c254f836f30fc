"""Acceptance gate: one PASS/FAIL line per criterion, printed in the terminal summary.

n = 8 sweeps run when the compiled kernels are active or ``--full`` is given.
"""
import random
from fractions import Fraction

import pytest

from prismham.corpus import connected_graphs
from prismham.formats import parse_graph6, write_graph6
from prismham.generators import complete, complete_multipartite, cycle, gen_random_chordal, petersen
from prismham.graph import Graph
from prismham.invariants import INF, HoleWitness, is_k_chordal, toughness
from prismham.prism_ham import find_hamiltonian_cycle, hamiltonicity_oracle, prism
from prismham.sweep import run_sweep

from oracles import toughness_bruteforce


@pytest.fixture(scope="module")
def max_n(full_sweep):
    return 8 if full_sweep else 7


def corpus(lo, hi):
    for n in range(lo, hi + 1):
        yield from connected_graphs(n)


def test_1_theorem_sweep(max_n, record_acceptance):
    rep = run_sweep(corpus(3, max_n), "theorem")
    ok = not rep.counterexamples and rep.inconclusive == 0
    record_acceptance(
        f"1 theorem sweep n=3..{max_n}",
        ok,
        f"{rep.total} graphs, {rep.hypothesis_met} meet the hypotheses, "
        f"{len(rep.counterexamples)} counterexamples, {rep.inconclusive} inconclusive",
    )
    assert ok, rep.counterexamples[:10]


def test_2_parity_triangle_exhaustive(record_acceptance):
    rep = run_sweep(corpus(3, 7), "lemma2")
    ok = not rep.lemma2_failures and rep.lemma2_agree == rep.lemma2_instances > 0
    record_acceptance(
        "2 parity triangle n<=7",
        ok,
        f"{rep.lemma2_graphs} 5-chordal graphs, {rep.lemma2_instances} odd cycles, "
        f"{rep.lemma2_agree} agree with brute force, {rep.lemma2_fallbacks} fallback activations",
    )
    assert ok, rep.lemma2_failures[:10]


TOUGHNESS_FIXTURES = (
    [(f"C{n}", cycle(n), Fraction(1)) for n in range(4, 11)]
    + [
        (f"K{m},{n}", complete_multipartite(m, n), Fraction(m, n))
        for m in range(2, 6)
        for n in range(m, 6)
    ]
    + [("Petersen", petersen(), Fraction(4, 3)), ("K5", complete(5), INF)]
)


def test_3_toughness_fixtures(record_acceptance):
    bad = []
    for name, g, frozen in TOUGHNESS_FIXTURES:
        ref = toughness_bruteforce(g)
        ref = INF if ref is None else ref
        if not (ref == frozen == toughness(g).value):
            bad.append((name, ref, frozen, toughness(g).value))
    ok = not bad
    record_acceptance("3 toughness fixtures", ok, f"{len(TOUGHNESS_FIXTURES)} fixtures vs 2^n brute force, mismatches {bad}")
    assert ok


def test_4_hamiltonicity_cross_validation(max_n, record_acceptance):
    checked = 0
    bad = []
    for g in corpus(1, max_n):
        pg = prism(g)[0]
        for h in (g, pg):
            res = find_hamiltonian_cycle(h)
            checked += 1
            if res.status == "unknown" or res.found != hamiltonicity_oracle(h):
                bad.append(write_graph6(h))
    p = petersen()
    petersen_ok = find_hamiltonian_cycle(p).status == "refuted" and not hamiltonicity_oracle(p)
    ok = not bad and petersen_ok
    record_acceptance(
        f"4 Hamiltonicity search vs DP n<={max_n} plus prisms",
        ok,
        f"{checked} graphs compared, {len(bad)} disagreements, Petersen refuted by both: {petersen_ok}",
    )
    assert ok, bad[:10]


def test_5_chordality(max_n, record_acceptance):
    w = is_k_chordal(cycle(5), 5)
    hole_ok = isinstance(w, HoleWitness) and w.replay(cycle(5), 5)
    chordal_bad = []
    for seed in range(1000):
        n = 1 + seed % 10
        g = gen_random_chordal(n, edge_budget=None if seed % 2 else n + seed % 9, seed=seed)
        if not all(is_k_chordal(g, k) is True for k in (3, 4, 5)):
            chordal_bad.append(seed)
    mono_bad = []
    graphs = 0
    for g in corpus(1, max_n):
        graphs += 1
        levels = [is_k_chordal(g, k) is True for k in range(3, max(g.n, 3) + 2)]
        if levels != sorted(levels):
            mono_bad.append(write_graph6(g))
    ok = hole_ok and not chordal_bad and not mono_bad
    record_acceptance(
        "5 chordality",
        ok,
        f"C5 hole replayed: {hole_ok}; 1000 chordal graphs failing k=3,4,5: {len(chordal_bad)}; "
        f"monotonicity violations over {graphs} corpus graphs: {len(mono_bad)}",
    )
    assert ok


def test_6_graph6_round_trip(record_acceptance):
    rng = random.Random(2024)
    bad = 0
    for _ in range(1000):
        n = rng.randint(0, 12)
        p = rng.random()
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        s = write_graph6(g)
        bad += parse_graph6(s) != g or write_graph6(parse_graph6(s)) != s
    small = list(corpus(1, 6))
    bad_corpus = sum(parse_graph6(write_graph6(g)) != g for g in small)
    ok = bad == 0 and bad_corpus == 0 and len(small) == 143
    record_acceptance("6 graph6 round trip", ok, f"1000 random graphs: {bad} failures; {len(small)} corpus graphs: {bad_corpus} failures")
    assert ok


def test_7_corollary_pipelines(max_n, record_acceptance):
    rep = run_sweep(corpus(3, max_n), "corollaries")
    cors = rep.corollaries
    strict = {k: cors[k] for k in ("1", "3")}
    ok = all(not t.counterexamples and not t.inconclusive and t.nonvacuous_confirmed > 0 for t in strict.values())
    parts = []
    for key in ("1", "2:veldman", "2:literal", "3"):
        t = cors[key]
        parts.append(
            f"{key}: applicable {t.applicable}, confirmed {t.confirmed} "
            f"(non-vacuous {t.nonvacuous_confirmed}), counterexamples {len(t.counterexamples)}"
        )
    record_acceptance(f"7 corollary pipelines n=3..{max_n}", ok, "; ".join(parts))
    assert ok


def test_8_prism_identities(record_acceptance):
    rng = random.Random(8)
    bad = 0
    for _ in range(500):
        n = rng.randint(0, 12)
        p = rng.random()
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        pg, labels = prism(g)
        bad += pg.n != 2 * g.n or pg.m != 2 * g.m + g.n
        bad += any(pg.degree(v) != g.degree(labels[v].base) + 1 for v in range(pg.n))
    ok = bad == 0
    record_acceptance("8 prism identities", ok, f"500 random graphs, {bad} failures")
    assert ok

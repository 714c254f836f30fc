import random

import pytest
from hypothesis import given, settings, strategies as st

from prismham.corpus import connected_graphs
from prismham.generators import complete, complete_multipartite, cycle, gen_cycle_plus_chords, path, petersen, star
from prismham.graph import Graph
from prismham.invariants import INF, ResourceLimitError
from prismham.prism_ham import (
    PrismVertex,
    check_corollary,
    find_hamiltonian_cycle,
    hamiltonicity_oracle,
    is_prism_hamiltonian,
    prism,
    verify_hamiltonian,
    verify_theorem,
)

from oracles import is_hamiltonian_bruteforce


def test_prism_small():
    pg, labels = prism(Graph(1))
    assert pg == complete(2) and labels == [PrismVertex(0, 0), PrismVertex(0, 1)]
    pg, _ = prism(complete(3))
    assert (pg.n, pg.m) == (6, 9)
    pg, _ = prism(path(3))
    assert (pg.n, pg.m) == (6, 7)
    assert prism(Graph(0))[0].n == 0


@settings(deadline=None, max_examples=100)
@given(st.integers(0, 10), st.integers(0, 10**6))
def test_prism_identities(n, seed):
    rng = random.Random(seed)
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
    pg, labels = prism(g)
    assert pg.n == 2 * g.n and pg.m == 2 * g.m + g.n
    for v in range(pg.n):
        assert pg.degree(v) == g.degree(labels[v].base) + 1
    for i, j in pg.edges:
        a, b = labels[i], labels[j]
        assert (a.base == b.base and a.layer != b.layer) or (a.layer == b.layer and g.has_edge(a.base, b.base))


def test_prism_hamiltonian_examples():
    assert is_prism_hamiltonian(complete(4)).found
    assert is_prism_hamiltonian(cycle(5)).found
    assert is_prism_hamiltonian(cycle(6)).found
    # each leaf copy has degree 2 in the prism, which overloads the hub copies
    res = is_prism_hamiltonian(star(3))
    assert res.status == "refuted"
    assert not hamiltonicity_oracle(prism(star(3))[0])


def test_prism_certificate_is_valid():
    res = is_prism_hamiltonian(petersen())
    assert res.found
    pg, labels = prism(petersen())
    assert verify_hamiltonian(pg, res.prism_cycle)
    assert res.cycle == tuple(labels[v] for v in res.prism_cycle)


def test_petersen_not_hamiltonian():
    assert find_hamiltonian_cycle(petersen()).status == "refuted"
    assert not hamiltonicity_oracle(petersen())


def test_budget_gives_unknown():
    assert find_hamiltonian_cycle(petersen(), budget=3).status == "unknown"
    assert is_prism_hamiltonian(petersen(), budget=3).status == "unknown"


def test_oracle_size_guard():
    with pytest.raises(ResourceLimitError):
        hamiltonicity_oracle(cycle(19))


@pytest.mark.parametrize("n", range(3, 7))
def test_search_dp_and_permutations_agree(n):
    for g in connected_graphs(n):
        res = find_hamiltonian_cycle(g)
        truth = is_hamiltonian_bruteforce(g)
        assert res.found == truth == hamiltonicity_oracle(g)
        if res.found:
            assert verify_hamiltonian(g, res.cycle)


def test_hamiltonian_implies_prism_hamiltonian():
    for g in connected_graphs(6):
        if find_hamiltonian_cycle(g).found:
            assert is_prism_hamiltonian(g).found


def test_theorem_k4():
    r = verify_theorem(complete(4))
    assert r.toughness is INF and r.chordal5 and r.hypothesis and r.conclusion
    assert len(r.edc) == 4 and r.edc_parity == "even"


def test_theorem_c6_c5():
    r = verify_theorem(cycle(6))
    assert r.toughness == 1 and r.chordal5 is False and not r.hypothesis and r.conclusion
    r = verify_theorem(cycle(5))
    assert r.hole == (0, 1, 2, 3, 4) and not r.hypothesis


def test_theorem_odd_edc_records_triangle():
    r = verify_theorem(gen_cycle_plus_chords(5, [(0, 2)]))
    assert r.edc_parity == "odd"
    assert r.triangle == "apex=0 edge=(1,2) q=1 positions=(0,1,2)"


def test_theorem_record_fields():
    rec = verify_theorem(complete_multipartite(2, 2, 2)).to_record()
    assert rec["toughness"] == "2/1" and rec["hypothesis"] and rec["conclusion"]
    for key in ("graph6", "toughness", "chordal5", "edc", "edc_parity", "triangle", "prism_ham", "hypothesis", "conclusion"):
        assert key in rec


def test_theorem_rejects_disconnected():
    with pytest.raises(ValueError):
        verify_theorem(Graph(4, [(0, 1), (2, 3)]))


def test_corollaries_k222():
    g = complete_multipartite(2, 2, 2)
    for which in (1, 2, 3):
        rep = check_corollary(g, which)
        assert rep.status == "confirmed" and rep.condition.vacuous
    assert check_corollary(g, 2, reading="literal").status == "confirmed"


def test_corollary3_c8_not_applicable():
    rep = check_corollary(cycle(8), 3)
    assert rep.status == "not-applicable"
    assert rep.condition.witness == ((0, 1), (3, 4)) and rep.condition.value == 4


def test_corollary1_k5():
    rep = check_corollary(complete(5), 1)
    assert rep.status == "confirmed" and rep.condition.value is INF


def test_corollary_bad_arguments():
    with pytest.raises(ValueError):
        check_corollary(cycle(5), 4)
    with pytest.raises(ValueError):
        check_corollary(cycle(5), 2, reading="other")


def test_corollary_non_vacuous_instance():
    hits = [g for g in connected_graphs(7) if check_corollary(g, 1).status == "confirmed" and not check_corollary(g, 1).condition.vacuous]
    assert hits
    assert all(check_corollary(g, 1).condition.value >= g.n + 2 for g in hits)

import networkx as nx
import pytest

from prismham.generators import (
    GeneratorSpec,
    complete,
    complete_multipartite,
    cycle,
    gen_cycle_plus_chords,
    gen_random_5chordal,
    gen_random_chordal,
    gen_random_graph,
    named_graph,
    petersen,
    star,
    wheel,
)
from prismham.graph import Graph
from prismham.invariants import is_k_chordal


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_named_graphs():
    assert named_graph("K_4") == complete(4)
    assert named_graph("C5") == cycle(5)
    assert named_graph("K_3,3") == complete_multipartite(3, 3)
    assert named_graph("petersen") == petersen()
    assert named_graph("wheel_5").m == 10 and wheel(5).degree(0) == 5
    assert named_graph("star_3") == star(3)
    assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())
    for bad in ("Q_3", "C_3,4", "nonsense"):
        with pytest.raises(ValueError):
            named_graph(bad)


def test_random_chordal_frozen_seed():
    g = gen_random_chordal(6, seed=42)
    assert g.edges == (
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5),
    )
    assert gen_random_chordal(6, edge_budget=7, seed=42).edges == (
        (0, 1), (0, 3), (0, 4), (1, 2), (3, 4), (3, 5), (4, 5),
    )


def test_random_chordal_properties():
    for seed in range(1000):
        n = 3 + seed % 10
        budget = None if seed % 3 else n - 1 + seed % 7
        g = gen_random_chordal(n, edge_budget=budget, seed=seed)
        assert g.n == n and g.is_connected()
        if budget is not None:
            assert g.m <= max(budget, n - 1)
        assert nx.is_chordal(to_nx(g))
        if n <= 11:
            assert all(is_k_chordal(g, k) is True for k in (3, 4, 5))


def test_cycle_plus_chords():
    g = gen_cycle_plus_chords(7, [(0, 3), (5, 0)])
    assert g.m == 9 and g.has_edge(0, 5)
    for chords in ([(0, 1)], [(0, 3), (3, 0)], [(0, 7)], [(2, 2)]):
        with pytest.raises(ValueError):
            gen_cycle_plus_chords(7, chords)


def test_random_graph_and_5chordal():
    assert gen_random_graph(8, 0.5, seed=3) == gen_random_graph(8, 0.5, seed=3)
    assert gen_random_graph(5, 1.0) == complete(5)
    g = gen_random_5chordal(7, 0.4, seed=1)
    assert g.is_connected() and is_k_chordal(g, 5) is True
    assert g.edges == ((0, 5), (1, 6), (2, 3), (3, 5), (3, 6), (4, 5))


def test_generator_spec_parse_and_build():
    spec = GeneratorSpec.parse("cycle_plus_chords:n=7,chords=0-3;0-5")
    assert spec.params == {"n": 7, "chords": [(0, 3), (0, 5)]}
    assert spec.build() == gen_cycle_plus_chords(7, [(0, 3), (0, 5)])
    assert GeneratorSpec.parse("named:petersen").build() == petersen()
    assert GeneratorSpec.parse("random_chordal:n=6", seed=42).build() == gen_random_chordal(6, seed=42)
    assert GeneratorSpec.parse("random_filtered_5chordal:n=7,p=0.4", seed=1).build() == gen_random_5chordal(7, 0.4, 1)
    with pytest.raises(ValueError):
        GeneratorSpec.parse("mystery:n=3").build()


def test_small_edge_cases():
    assert gen_random_chordal(1) == Graph(1)
    with pytest.raises(ValueError):
        gen_random_chordal(0)

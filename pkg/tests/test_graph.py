import random

import pytest
from hypothesis import given, strategies as st

from prismham.generators import cycle, petersen, path
from prismham.graph import Cycle, Graph, bits, check_cycle, connected_components, induced_subgraph, mask_of


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_construction_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_adjacency([0b10, 0b00])


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges == ((0, 1),)


@given(graphs())
def test_edges_and_adjacency_agree(g):
    assert list(g.edges) == sorted(g.edges)
    assert len(g.edges) * 2 == sum(g.degrees())
    for u, v in g.edges:
        assert u < v and g.has_edge(v, u)
    assert Graph.from_adjacency(g.adj) == g


def test_cycle_canonical_form():
    c = Cycle([3, 2, 1, 0, 4])
    assert c.vertices == (0, 1, 2, 3, 4)
    assert Cycle([2, 0, 4, 1]).vertices == (0, 2, 1, 4)
    assert Cycle([5, 1, 3]) == Cycle([1, 5, 3])
    with pytest.raises(ValueError):
        Cycle([0, 1])
    with pytest.raises(ValueError):
        Cycle([0, 1, 0])


def test_check_cycle():
    check_cycle(cycle(5), Cycle(range(5)))
    with pytest.raises(ValueError):
        check_cycle(cycle(5), Cycle([0, 1, 3]))


def test_induced_subgraph_examples():
    sub, index = induced_subgraph(cycle(5), {0, 1, 2})
    assert sub == path(3) and index == (0, 1, 2)
    p = petersen()
    outer, _ = induced_subgraph(p, range(5))
    assert outer == cycle(5)
    assert induced_subgraph(p, p.vertex_mask)[0] == p
    assert induced_subgraph(p, 0)[0].n == 0


def test_components_examples():
    c6 = cycle(6)
    assert len(connected_components(c6)) == 1
    assert connected_components(c6, mask_of([0, 3])) == [mask_of([1, 2]), mask_of([4, 5])]
    assert len(connected_components(Graph(4))) == 4


@given(graphs(), st.integers(0, 2**10 - 1))
def test_components_partition(g, removed):
    removed &= g.vertex_mask
    comps = connected_components(g, removed)
    assert sum(len(list(bits(c))) for c in comps) == g.n - len(list(bits(removed)))
    union = 0
    for c in comps:
        assert not union & c
        union |= c
        sub, _ = induced_subgraph(g, c)
        assert sub.is_connected()
        for v in bits(c):
            assert not g.adj[v] & (g.vertex_mask & ~removed & ~c)


def test_induced_random_edges():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 9)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        s = sorted(rng.sample(range(n), rng.randint(0, n)))
        sub, index = induced_subgraph(g, s)
        for i in range(sub.n):
            for j in range(sub.n):
                assert sub.has_edge(i, j) == g.has_edge(index[i], index[j])

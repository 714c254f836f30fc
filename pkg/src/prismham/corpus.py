"""Small-graph corpora: canonical forms and exhaustive enumeration up to isomorphism."""
from __future__ import annotations

import functools
from typing import Iterable, Iterator, TextIO

from . import kernels
from .formats import read_graph6_lines
from .graph import Graph, bits, mask_of

BUILTIN_MAX_N = 9


def relabel(g: Graph, perm) -> Graph:
    """Graph whose vertex i is ``perm[i]`` of ``g``."""
    pos = {v: i for i, v in enumerate(perm)}
    return Graph.from_adjacency([mask_of(pos[u] for u in bits(g.adj[v])) for v in perm])


def canonical_form(g: Graph) -> Graph:
    """Isomorphism-invariant relabeling of ``g``.

    Among labelings that list the color-refinement classes in order, the one
    with the lexicographically least graph6 bit string is chosen.
    """
    return relabel(g, kernels.canonical_labeling(g.adj, g.n))


def canonical_code(g: Graph) -> tuple[int, ...]:
    """Column code of the canonical form; equal exactly for isomorphic graphs, and the corpus sort key."""
    return _code_key(canonical_form(g).adj)


@functools.lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical adjacency tuples of every graph on n vertices, one per class.

    Each class on n vertices arises from one on n - 1 vertices by adding a
    vertex with some neighborhood (delete any vertex to see it), so extending
    all classes in every possible way and deduplicating by canonical form is
    complete.
    """
    if n == 0:
        return ((),)
    seen = set()
    for adj in _all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            new = [a | ((nb >> v & 1) << (n - 1)) for v, a in enumerate(adj)] + [nb]
            perm = kernels.canonical_labeling(new, n)
            pos = [0] * n
            for i, v in enumerate(perm):
                pos[v] = i
            seen.add(tuple(mask_of(pos[u] for u in bits(new[v])) for v in perm))
    return tuple(sorted(seen, key=_code_key))


def _code_key(adj: tuple[int, ...]) -> tuple:
    # graph6 bit order: column j holds rows 0..j-1
    return tuple(adj[j] & ((1 << j) - 1) for j in range(len(adj)))


def all_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices up to isomorphism, in canonical-code order."""
    if n > BUILTIN_MAX_N:
        raise ValueError(f"builtin enumeration supports n <= {BUILTIN_MAX_N}")
    return [Graph.from_adjacency(a) for a in _all_graphs(n)]


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if g.is_connected()]


def read_graph6_stream(stream: Iterable[str], strict: bool = True, errors: list | None = None) -> Iterator[Graph]:
    """Graphs from graph6 lines in file order (see :func:`read_graph6_lines`)."""
    for _, g in read_graph6_lines(stream, strict, errors):
        yield g


def enumerate_corpus(
    max_n: int,
    source: str | TextIO = "builtin",
    min_n: int = 1,
    strict: bool = True,
    errors: list | None = None,
) -> Iterator[Graph]:
    """Connected graphs with ``min_n <= n <= max_n``.

    ``source="builtin"`` enumerates every isomorphism class (n ascending,
    then canonical code); otherwise ``source`` is a graph6 text stream whose
    graphs are passed through in order (disconnected ones dropped).
    """
    if source == "builtin":
        for n in range(max(min_n, 1), max_n + 1):
            yield from connected_graphs(n)
        return
    for g in read_graph6_stream(source, strict=strict, errors=errors):
        if min_n <= g.n <= max_n and g.is_connected():
            yield g

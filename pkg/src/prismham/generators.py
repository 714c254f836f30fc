"""Named fixture graphs and seeded random generators."""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits

_NAMED_HELP = "petersen, K_n, C_n, P_n, K_a,b[,c...], wheel_n, star_n"


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("C_n needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(*sizes: int) -> Graph:
    """Parts are consecutive blocks of vertices in the given order."""
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram (5+i)-(5+(i+2)%5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n (n + 1 vertices)."""
    if n < 3:
        raise ValueError("wheel_n needs n >= 3")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)] + [(i, i % n + 1) for i in range(1, n + 1)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def named_graph(name: str) -> Graph:
    """Build a fixture by name; see ``_NAMED_HELP`` for the families."""
    key = name.strip()
    if key.lower() == "petersen":
        return petersen()
    m = re.fullmatch(r"([A-Za-z]+)_?(\d+(?:,\d+)*)", key)
    if not m:
        raise ValueError(f"unknown graph name {name!r}; known: {_NAMED_HELP}")
    fam, args = m.group(1), [int(x) for x in m.group(2).split(",")]
    if fam == "K":
        return complete(args[0]) if len(args) == 1 else complete_multipartite(*args)
    if len(args) != 1:
        raise ValueError(f"{fam}_n takes one parameter, got {name!r}")
    (k,) = args
    builders = {"C": cycle, "P": path, "wheel": wheel, "W": wheel, "star": star, "S": star}
    if fam not in builders:
        raise ValueError(f"unknown graph family {fam!r}; known: {_NAMED_HELP}")
    return builders[fam](k)


def gen_random_chordal(n: int, edge_budget: int | None = None, seed: int = 0) -> Graph:
    """Random connected chordal graph grown along a perfect elimination ordering.

    Each new vertex attaches to a clique of existing vertices that contains a
    random anchor, so the reversed insertion order is a perfect elimination
    ordering. ``edge_budget`` caps the total edge count (at least n - 1 edges
    are always used to stay connected).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    if edge_budget is None:
        edge_budget = n * (n - 1) // 2
    adj = [0] * n
    m = 0
    for v in range(1, n):
        anchor = rng.randrange(v)
        spare = edge_budget - m - (n - v)
        want = 1 + (rng.randrange(spare + 1) if spare > 0 else 0)
        clique = [anchor]
        cands = list(bits(adj[anchor]))
        rng.shuffle(cands)
        for u in cands:
            if len(clique) >= want:
                break
            if all(adj[u] >> w & 1 for w in clique):
                clique.append(u)
        for u in clique:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        m += len(clique)
    return Graph.from_adjacency(adj)


def gen_cycle_plus_chords(n: int, chords) -> Graph:
    """C_n on 0..n-1 plus the listed chords."""
    base = set(cycle(n).edges)
    extra = set()
    for a, b in chords:
        e = (min(a, b), max(a, b))
        if not (0 <= e[0] < n and 0 <= e[1] < n) or e[0] == e[1]:
            raise ValueError(f"invalid chord ({a}, {b}) for n={n}")
        if e in base:
            raise ValueError(f"chord ({a}, {b}) duplicates a cycle edge")
        if e in extra:
            raise ValueError(f"chord ({a}, {b}) listed twice")
        extra.add(e)
    return Graph(n, sorted(base | extra))


def gen_random_graph(n: int, p: float, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def gen_random_5chordal(n: int, p: float = 0.5, seed: int = 0, max_tries: int = 10000) -> Graph:
    """Rejection sample: connected G(n, p) draws until one is 5-chordal."""
    from .invariants import is_k_chordal

    rng = random.Random(seed)
    for _ in range(max_tries):
        g = gen_random_graph(n, p, rng.randrange(2**32))
        if g.is_connected() and is_k_chordal(g, 5) is True:
            return g
    raise RuntimeError(f"no connected 5-chordal graph after {max_tries} draws (n={n}, p={p})")


@dataclass(frozen=True)
class GeneratorSpec:
    """A generator family plus parameters; ``seed`` fixes the output."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "GeneratorSpec":
        """``family:key=val,key=val``; chords as ``chords=0-3;0-5``; named as ``named:petersen``."""
        fam, _, rest = text.partition(":")
        if fam == "named":
            return cls(fam, {"name": rest}, seed)
        params: dict = {}
        for item in filter(None, rest.split(",")):
            k, _, v = item.partition("=")
            if k == "chords":
                params[k] = [tuple(int(x) for x in ch.split("-")) for ch in filter(None, v.split(";"))]
            elif k == "p":
                params[k] = float(v)
            else:
                params[k] = int(v)
        return cls(fam, params, seed)

    def build(self) -> Graph:
        p = self.params
        if self.family == "named":
            return named_graph(p["name"])
        if self.family == "random_chordal":
            return gen_random_chordal(p["n"], p.get("edges"), self.seed)
        if self.family == "cycle_plus_chords":
            return gen_cycle_plus_chords(p["n"], p.get("chords", []))
        if self.family in ("random_filtered_5chordal", "random_5chordal"):
            return gen_random_5chordal(p["n"], p.get("p", 0.5), self.seed)
        raise ValueError(f"unknown generator family {self.family!r}")

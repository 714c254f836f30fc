"""Text formats: graph6, DIMACS edge lists, adjacency-list dumps and DOT."""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, bits

_HEADER = ">>graph6<<"
_MAX_N = 258047


class FormatError(ValueError):
    """Malformed input. ``offset`` is a byte offset (graph6) or a line number (DIMACS)."""

    def __init__(self, message: str, offset: int | None = None, unit: str = "offset"):
        self.offset = offset
        self.message = message
        where = "" if offset is None else f" at {unit} {offset}"
        super().__init__(message + where)


def _graph6_size(text: str) -> tuple[int, int]:
    """Decode the vertex-count header; returns (n, header length)."""
    if not text:
        raise FormatError("empty graph6 string", 0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"non-printable or out-of-range character {ch!r}", i)
    first = ord(text[0]) - 63
    if first < 63:
        return first, 1
    if len(text) >= 2 and text[1] == "~":
        raise FormatError("graphs with n >= 258048 are not supported", 1)
    if len(text) < 4:
        raise FormatError("truncated extended size header", len(text))
    n = 0
    for ch in text[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (upper triangle, column-major, 6 bits per char)."""
    line = text.strip("\r\n")
    base = 0
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
        base = len(_HEADER)
    try:
        n, pos = _graph6_size(line)
    except FormatError as exc:
        raise FormatError(exc.message, base + (exc.offset or 0)) from None
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < need:
        raise FormatError(f"expected {need} data characters for n={n}, found {len(body)}", base + len(line))
    if len(body) > need:
        raise FormatError("trailing characters after graph data", base + pos + need)
    edges = []
    k = 0
    i, j = 0, 1
    for ci, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < nbits:
                if bit:
                    edges.append((i, j))
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise FormatError("non-zero padding bits", base + pos + ci)
            k += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    n = g.n
    if n > _MAX_N:
        raise ValueError(f"graph6 encoding supports n <= {_MAX_N}, got {n}")
    if n < 63:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr((n >> s & 63) + 63) for s in (12, 6, 0)]
    adj = g.adj
    val = 0
    k = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            val = (val << 1) | (col >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(val + 63))
                val = k = 0
    if k:
        out.append(chr((val << (6 - k)) + 63))
    return "".join(out)


def read_graph6_lines(
    lines: Iterable[str], strict: bool = True, errors: list | None = None
) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line (1-based numbers).

    With ``strict=False`` malformed lines are skipped, and ``(line, message)``
    is appended to ``errors`` when a list is given.
    """
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except FormatError as exc:
            if strict:
                raise FormatError(f"line {lineno}: {exc.message}", exc.offset) from None
            if errors is not None:
                errors.append((lineno, str(exc)))
            continue
        yield lineno, g


def parse_dimacs(text: str) -> Graph:
    """Parse ``p edge n m`` / ``e u v`` text with 1-indexed vertices; comments start with ``c``."""
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise FormatError("duplicate problem line", lineno, "line")
            if len(parts) < 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"bad problem line {raw.strip()!r}", lineno, "line")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise FormatError(f"bad problem line {raw.strip()!r}", lineno, "line") from None
            if n < 0:
                raise FormatError("negative vertex count", lineno, "line")
        elif tag == "e":
            if n is None:
                raise FormatError("edge line before 'p edge' header", lineno, "line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except (IndexError, ValueError):
                raise FormatError(f"bad edge line {raw.strip()!r}", lineno, "line") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex index out of range 1..{n} in edge ({u}, {v})", lineno, "line")
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", lineno, "line")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise FormatError(f"unrecognized line {raw.strip()!r}", lineno, "line")
    if n is None:
        raise FormatError("missing 'p edge n m' header")
    return Graph(n, sorted(edges))


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def write_adjlist(g: Graph) -> str:
    """Human-readable dump, one ``u: v w x`` line per vertex."""
    return "".join(f"{v}: {' '.join(map(str, bits(g.adj[v])))}".rstrip() + "\n" for v in range(g.n))


def write_dot(g: Graph, name: str = "G") -> str:
    body = "".join(f"  {u} -- {v};\n" for u, v in g.edges)
    return f"graph {name} {{\n{body}}}\n"


def load_graphs(stream: TextIO, fmt: str | None = None) -> list[Graph]:
    """Read every graph in ``stream``; ``fmt`` is ``graph6``, ``dimacs`` or None to sniff."""
    text = stream.read()
    if fmt is None:
        first = next((ln.split()[0] for ln in text.splitlines() if ln.split()), "")
        fmt = "dimacs" if first in ("p", "c", "e") else "graph6"
    if fmt == "dimacs":
        return [parse_dimacs(text)]
    if fmt == "graph6":
        return [g for _, g in read_graph6_lines(text.splitlines())]
    raise ValueError(f"unknown format {fmt!r}")

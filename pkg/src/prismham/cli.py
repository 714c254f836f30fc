"""Command-line interface: ``prismham <command> ...``.

Every command writes one JSON record per line unless stated otherwise.
Exit codes: 0 all checks pass, 1 violation/counterexample, 2 input error,
3 some search ran out of budget.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import kernels
from .corpus import enumerate_corpus
from .cycles import find_edge_dominating_cycle
from .formats import FormatError, load_graphs, write_adjlist, write_dimacs, write_dot, write_graph6
from .generators import GeneratorSpec, named_graph
from .graph import Cycle, Graph, bits
from .invariants import HoleWitness, format_rational, is_k_chordal, toughness, vertex_connectivity
from .parity_triangle import NotFiveChordalError, find_parity_triangle
from .prism_ham import find_hamiltonian_cycle, is_prism_hamiltonian, prism, verify_theorem
from .sweep import EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, explore_edc_toughness, run_sweep


class InputError(Exception):
    pass


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=False))


def _read_graphs(src: str, fmt: str | None) -> list[Graph]:
    if src.startswith("named:"):
        return [named_graph(src[len("named:"):])]
    if src == "-":
        return load_graphs(sys.stdin, fmt)
    path = Path(src)
    if not path.exists():
        raise InputError(f"no such file: {src}")
    with path.open() as fh:
        return load_graphs(fh, fmt)


def _chordality(g: Graph, k: int):
    res = is_k_chordal(g, k)
    return True if res is True else {"hole": list(res.cycle.vertices)}


def cmd_analyze(args) -> int:
    for g in _read_graphs(args.file, args.format):
        rec = {"graph6": write_graph6(g), "n": g.n, "m": g.m, "connected": g.is_connected()}
        if g.n:
            cert = toughness(g)
            rec.update(
                toughness=format_rational(cert.value),
                separator=cert.separator_vertices,
                components=cert.component_count,
            )
        if g.n >= 2:
            rec["connectivity"] = vertex_connectivity(g)
        for k in (3, 4, 5):
            rec[f"chordal{k}"] = _chordality(g, k)
        _emit(rec)
    return EXIT_OK


def cmd_edc(args) -> int:
    code = EXIT_OK
    for g in _read_graphs(args.file, args.format):
        res = find_edge_dominating_cycle(g, args.prefer)
        _emit(
            {
                "graph6": write_graph6(g),
                "status": res.status,
                "edc": None if res.cycle is None else str(res.cycle),
                "parity": None if res.cycle is None else res.cycle.parity,
                "uncovered_edge": res.uncovered_edge,
            }
        )
        if res.status == "unknown":
            code = EXIT_INCONCLUSIVE
    return code


def cmd_triangle(args) -> int:
    graphs = _read_graphs(args.file, args.format)
    if len(graphs) != 1:
        raise InputError("triangle expects exactly one graph")
    g = graphs[0]
    try:
        c = Cycle(int(x) for x in args.cycle.split(","))
    except ValueError as exc:
        raise InputError(f"bad --cycle: {exc}") from None
    try:
        res = find_parity_triangle(g, c)
    except NotFiveChordalError as exc:
        print(f"error: {exc}")
        return EXIT_VIOLATION
    print(f"cycle: {c}")
    print(res.witness.describe(c))
    print(f"fallback: {'yes' if res.fallback else 'no'}")
    for line in res.trace_lines():
        print(line)
    return EXIT_OK


def cmd_prism(args) -> int:
    code = EXIT_OK
    for g in _read_graphs(args.file, args.format):
        pg, _ = prism(g)
        rec = {"graph6": write_graph6(g), "prism": write_graph6(pg), "n": pg.n, "m": pg.m}
        if args.ham:
            res = is_prism_hamiltonian(g, args.budget)
            rec["prism_ham"] = res.status
            rec["cycle"] = None if res.cycle is None else " ".join(f"{b}.{l}" for b, l in res.cycle)
            rec["nodes"] = res.nodes
            if res.status == "unknown":
                code = EXIT_INCONCLUSIVE
        if args.dot:
            print(write_dot(pg, "prism"), end="")
        else:
            _emit(rec)
    return code


def cmd_ham(args) -> int:
    code = EXIT_OK
    for g in _read_graphs(args.file, args.format):
        res = find_hamiltonian_cycle(g, args.budget)
        _emit({"graph6": write_graph6(g), "status": res.status, "cycle": None if res.cycle is None else str(res.cycle)})
        if res.status == "unknown":
            code = EXIT_INCONCLUSIVE
    return code


def cmd_verify(args) -> int:
    code = EXIT_OK
    for g in _read_graphs(args.file, args.format):
        if not g.is_connected():
            raise InputError(f"graph {write_graph6(g)} is disconnected")
        rep = verify_theorem(g)
        _emit(rep.to_record())
        if rep.violates:
            code = EXIT_VIOLATION
        elif rep.inconclusive and code == EXIT_OK:
            code = EXIT_INCONCLUSIVE
    return code


def cmd_gen(args) -> int:
    g = GeneratorSpec.parse(args.family, args.seed).build()
    writers = {"graph6": lambda x: write_graph6(x) + "\n", "dimacs": write_dimacs, "adjlist": write_adjlist, "dot": write_dot}
    print(writers[args.out_format](g), end="")
    return EXIT_OK


def _corpus(args):
    if args.corpus:
        fh = sys.stdin if args.corpus == "-" else open(args.corpus)
        return enumerate_corpus(args.max_n, fh, min_n=args.min_n, strict=not args.skip_bad), args.corpus
    return enumerate_corpus(args.max_n, min_n=args.min_n), f"builtin connected n={args.min_n}..{args.max_n}"


def cmd_sweep(args) -> int:
    corpus, desc = _corpus(args)
    t0 = time.time()
    report = run_sweep(corpus, args.check, jobs=args.jobs, description=desc, keep_records=bool(args.records))
    if args.records:
        with open(args.records, "w") as fh:
            for rec in report.records:
                fh.write(json.dumps(rec) + "\n")
    summary = report.summary()
    summary["seconds"] = round(time.time() - t0, 2)
    summary["kernels"] = kernels.backend()
    _emit(summary)
    return report.exit_code()


def cmd_explore(args) -> int:
    corpus, _ = _corpus(args)
    rows = explore_edc_toughness(corpus)
    for row in rows:
        _emit(row)
    return EXIT_INCONCLUSIVE if any(r["inconclusive"] for r in rows) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prismham", description=__doc__.splitlines()[0])
    p.add_argument("--kernels", choices=["cython", "python"], help="force a kernel backend")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="graph file, '-' for stdin, or named:<name>")
        sp.add_argument("--format", choices=["graph6", "dimacs"], help="input format (sniffed when omitted)")
        sp.set_defaults(func=fn)
        return sp

    graph_cmd("analyze", cmd_analyze, "toughness, connectivity, chordality levels 3/4/5")
    sp = graph_cmd("edc", cmd_edc, "find an edge-dominating cycle")
    sp.add_argument("--prefer", choices=["longest-first", "shortest-first"], default="longest-first")
    sp = graph_cmd("triangle", cmd_triangle, "parity triangle on an odd cycle")
    sp.add_argument("--cycle", required=True, help="comma-separated cycle vertices")
    sp = graph_cmd("prism", cmd_prism, "build the prism G x K2")
    sp.add_argument("--ham", action="store_true", help="search for a Hamiltonian cycle of the prism")
    sp.add_argument("--dot", action="store_true", help="print the prism as DOT instead of a record")
    sp.add_argument("--budget", type=int, default=10**8)
    sp = graph_cmd("ham", cmd_ham, "Hamiltonian cycle of the graph itself")
    sp.add_argument("--budget", type=int, default=10**8)
    graph_cmd("verify", cmd_verify, "check hypotheses and conclusion of the prism theorem")

    sp = sub.add_parser("gen", help="generate a graph")
    sp.add_argument("--family", required=True, help="e.g. named:petersen, random_chordal:n=8,edges=12, "
                    "cycle_plus_chords:n=7,chords=0-3;0-5, random_filtered_5chordal:n=7,p=0.5")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out-format", choices=["graph6", "dimacs", "adjlist", "dot"], default="graph6")
    sp.set_defaults(func=cmd_gen)

    for name, fn, help_ in (("sweep", cmd_sweep, "exhaustive corpus sweep"),
                            ("explore", cmd_explore, "toughness of 5-chordal graphs without EDC")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--max-n", type=int, required=True)
        sp.add_argument("--min-n", type=int, default=1)
        sp.add_argument("--corpus", help="graph6 file ('-' for stdin) instead of the builtin enumeration")
        sp.add_argument("--skip-bad", action="store_true", help="skip malformed corpus lines")
        sp.set_defaults(func=fn)
        if name == "sweep":
            sp.add_argument("--check", choices=["theorem", "lemma2", "corollaries", "all"], default="theorem")
            sp.add_argument("--jobs", type=int, default=1)
            sp.add_argument("--records", help="write per-graph theorem records (JSON lines) here")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.kernels:
        kernels.use_backend(args.kernels)
    try:
        return args.func(args)
    except (InputError, FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

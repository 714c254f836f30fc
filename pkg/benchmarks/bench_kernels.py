"""Time the compiled and pure-Python kernels on fixed workloads.

    python benchmarks/bench_kernels.py [--n 7] [--repeat 3]

Every workload runs over all connected graphs on ``n`` vertices (or their
prisms) and the results of both backends are compared before timing.
"""
import argparse
import time

from prismham import kernels
from prismham.corpus import connected_graphs
from prismham.prism_ham import prism


def workloads(n):
    graphs = [(g.adj, g.n) for g in connected_graphs(n)]
    prisms = [(p.adj, p.n) for p in (prism(g)[0] for g in connected_graphs(n))]
    return {
        "canonical_labeling": (graphs, lambda a, k: kernels.canonical_labeling(a, k)),
        "toughness_scan": (graphs, lambda a, k: kernels.toughness_scan(a, k)),
        "prism_hamiltonian_search": (prisms, lambda a, k: kernels.hamiltonian_search(a, k, 10**8)[0]),
        "prism_hamiltonian_dp": (prisms, lambda a, k: kernels.hamiltonian_dp(a, k)),
    }


def run(fn, inputs):
    return [fn(a, k) for a, k in inputs]


def best_time(fn, inputs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        run(fn, inputs)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7, help="vertex count of the corpus (default 7)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; timing the Python backend only")
    prev = kernels.backend()
    print(f"{'workload':<26} {'items':>6} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    try:
        for name, (inputs, fn) in workloads(args.n).items():
            results, times = {}, {}
            for b in backends:
                kernels.use_backend(b)
                results[b] = run(fn, inputs)
                times[b] = best_time(fn, inputs, args.repeat)
            if len({repr(r) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree on {name}")
            cells = " ".join(f"{times[b]:>9.3f}s" for b in backends)
            speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
            print(f"{name:<26} {len(inputs):>6} {cells} {speed}")
    finally:
        kernels.use_backend(prev)


if __name__ == "__main__":
    main()

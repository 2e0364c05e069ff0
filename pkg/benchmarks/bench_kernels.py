"""Compare the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from injcolor import kernels
from injcolor.conflict import build_conflict_graph
from injcolor.exact import greedy_dsatur
from injcolor.generators import gen_random_eligible, gen_random_graph
from injcolor.mad import densest_subset


# (n, m, seed): graphs where one color below the greedy bound needs 100k+ assignments
HARD = [(30, 60, 2), (30, 60, 4), (30, 60, 12), (35, 70, 2), (35, 70, 8)]


def search_workload(backend):
    nodes = 0
    for n, m, seed in HARD:
        cg = build_conflict_graph(gen_random_graph(n, m, seed))
        indptr, indices = cg.csr()
        size = len(cg)
        degree = [len(a) for a in cg.adj]
        k = max(greedy_dsatur(cg))
        _, _, used = kernels.color_search(indptr, indices, degree, [0] * size, [0] * (size * k), k, True, 500_000, backend=backend)
        nodes += used
    return nodes


def flow_workload(backend):
    # the min-cut oracle behind mad, routed through one backend
    real = kernels.max_flow
    kernels.max_flow = lambda *a, **kw: real(*a, backend=backend)
    try:
        for seed in range(8):
            densest_subset(gen_random_eligible(120, seed))
    finally:
        kernels.max_flow = real


def timed(fn, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'workload':<16}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in [("color_search", search_workload), ("max_flow", flow_workload)]:
        times = [timed(fn, b, args.repeat) for b in backends]
        row = f"{name:<16}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()

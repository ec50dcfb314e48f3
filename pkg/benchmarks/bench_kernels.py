"""Compare the compiled kernels with their pure-Python twins.

    python3 benchmarks/bench_kernels.py --sizes 200 1000 3000 --repeat 3

Each row times a full detection run (all trials) on a planted-partition
graph and checks that both backends return the same partition.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from compsem.communities import ALGORITHMS, CDParams, kernels
from compsem.depgraph.graph import UndirectedGraph


def planted_graph(n: int, blocks: int, avg_in: float, avg_out: float, seed: int) -> UndirectedGraph:
    rng = random.Random(seed)
    nodes = [f"c{i:05d}" for i in range(n)]
    block = [i * blocks // n for i in range(n)]
    size = n / blocks
    p_in, p_out = avg_in / size, avg_out / (n - size)
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < (p_in if block[i] == block[j] else p_out):
                edges[(nodes[i], nodes[j])] = rng.randint(1, 4)
    return UndirectedGraph.build(nodes, [(a, b, w) for (a, b), w in edges.items()])


def time_run(algo: str, g: UndirectedGraph, backend: str, repeat: int):
    previous = kernels.use_backend(backend)
    try:
        times, part = [], None
        for _ in range(repeat):
            t0 = time.perf_counter()
            part = ALGORITHMS[algo](g, CDParams(seed=1))
            times.append(time.perf_counter() - t0)
        return statistics.median(times), part
    finally:
        kernels.use_backend(previous)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="+", default=[200, 1000, 3000])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")

    print(f"{'algorithm':9s} {'nodes':>6s} {'edges':>7s} {'python s':>9s} {'cython s':>9s} {'speedup':>8s}  same")
    for n in args.sizes:
        g = planted_graph(n, max(2, n // 40), avg_in=8.0, avg_out=2.0, seed=n)
        for algo in ALGORITHMS:
            t_py, p_py = time_run(algo, g, "python", args.repeat)
            t_cy, p_cy = time_run(algo, g, "cython", args.repeat)
            print(f"{algo:9s} {n:6d} {len(g.edges):7d} {t_py:9.3f} {t_cy:9.3f} {t_py / t_cy:7.1f}x  {p_py == p_cy}")


if __name__ == "__main__":
    main()

"""Compare the relaxation backends on one random graph.

    python3 benchmarks/bench_backends.py --n 10000 --m 200000 --h 128 256

The python backend is skipped above ``--python-limit`` edge-rounds since it
runs at interpreter speed.
"""

import argparse
import statistics
import time

from hopbound import kernels
from hopbound.generators import gen_random_graph
from hopbound.graph import HopInstance
from hopbound.solvers import bellman_ford_hops


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=10_000)
    p.add_argument("--m", type=int, default=200_000)
    p.add_argument("--h", type=int, nargs="+", default=[64, 256, 1024])
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--python-limit", type=int, default=2_000_000)
    args = p.parse_args(argv)

    graph = gen_random_graph(args.n, args.m, 100, args.seed).graph
    backends = kernels.available_backends()
    print(f"n={args.n} m={args.m} default backend: {kernels.BACKEND}")
    print(f"{'h':>6} " + " ".join(f"{b:>12}" for b in backends) + "   answers agree")
    for h in args.h:
        inst = HopInstance(graph, 0, 1, h)
        cells, answers = [], set()
        for name in backends:
            if name == "python" and h * args.m > args.python_limit:
                cells.append(f"{'skipped':>12}")
                continue
            answers.add(bellman_ford_hops(inst, name).answer)
            times = []
            for _ in range(args.reps):
                start = time.perf_counter()
                bellman_ford_hops(inst, name)
                times.append(time.perf_counter() - start)
            cells.append(f"{statistics.median(times) * 1e3:10.1f}ms")
        print(f"{h:>6} " + " ".join(cells) + f"   {len(answers) == 1}")


if __name__ == "__main__":
    main()

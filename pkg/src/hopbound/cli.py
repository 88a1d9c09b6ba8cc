"""``hopbound`` command-line entry point.

Exit codes: 0 success (or YES for deciders), 1 NO / verification mismatch,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileio, kernels
from .bench import DEFAULT_REPS, load_grid, scaling_experiment
from .convolution import normalize_instance, split_into_common
from .generators import gen_common_instance, gen_random_graph, gen_sequence_triple, gen_triangle_instance
from .graph import BudgetError, HopInstance, InstanceError
from .reductions import (
    PreconditionError,
    decide_common_via_hop,
    decide_triangle_via_hop,
    maxplus_ub_via_pipeline,
    reduce_common_to_hop,
    reduce_triangle_to_hop,
)
from .solvers import (
    OracleBudgetError,
    bellman_ford_solver,
    enumerate_paths_oracle,
    minplus_power_oracle,
)
from .verify import SUITES

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2

ORACLES = {"minplus-power": minplus_power_oracle, "enum": enumerate_paths_oracle}


class UsageError(Exception):
    pass


def _solver(args):
    if getattr(args, "oracle", None):
        return ORACLES[args.oracle]
    return bellman_ford_solver(getattr(args, "backend", None))


def _emit(data: bytes, out):
    if out in (None, "-"):
        sys.stdout.write(data.decode())
    else:
        fileio.write_bytes(out, data)


def cmd_solve(args):
    instance = fileio.load_graph(fileio.read_bytes(args.graph))
    print(_solver(args)(instance))
    return EXIT_OK


def cmd_reduce(args):
    raw = fileio.read_bytes(args.infile)
    if args.kind == "triangle":
        artifact = reduce_triangle_to_hop(fileio.load_triangle(raw))
    else:
        artifact = reduce_common_to_hop(fileio.load_common(raw))
    fileio.write_bytes(args.out, fileio.save_graph(artifact.instance))
    sidecar = Path(str(args.out) + ".map")
    fileio.write_bytes(sidecar, fileio.save_sidecar(artifact))
    print(f"{artifact.kind} threshold {artifact.threshold} -> {args.out}, {sidecar}")
    return EXIT_OK


def cmd_split(args):
    triple = fileio.load_triple(fileio.read_bytes(args.infile))
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    groups = split_into_common(triple, args.block)
    for common, bmap in groups:
        stem = out_dir / f"group_{bmap.group:04d}"
        fileio.write_bytes(stem.with_suffix(".common"), fileio.save_common(common))
        lines = [f"group {bmap.group}", f"block {bmap.block}", f"N {bmap.N}"]
        lines += [f"pair {l} {p} {q}" for l, (p, q) in enumerate(bmap.blocks, start=1)]
        fileio.write_bytes(stem.with_suffix(".map"), ("\n".join(lines) + "\n").encode())
    print(f"{len(groups)} groups -> {out_dir}")
    return EXIT_OK


def cmd_normalize(args):
    inst = fileio.load_common(fileio.read_bytes(args.infile))
    normalized, info = normalize_instance(inst)
    fileio.write_bytes(args.out, fileio.save_common(normalized))
    print(f"shift {info.shift} ramp {info.ramp}")
    return EXIT_OK


def cmd_gen(args):
    if args.kind == "graph":
        inst = gen_random_graph(args.n, args.m, args.wmax, args.seed)
        inst = HopInstance(inst.graph, args.s, args.t, args.h)
        data = fileio.save_graph(inst)
    elif args.kind == "triangle":
        data = fileio.save_triangle(gen_triangle_instance(args.P, args.N, args.wmax, args.seed))
    elif args.kind == "common":
        data = fileio.save_common(gen_common_instance(args.N, args.M, args.wmax, args.seed))
    else:
        data = fileio.save_triple(gen_sequence_triple(args.N, args.wmax, args.seed))
    _emit(data, args.out)
    return EXIT_OK


def cmd_decide(args):
    raw = fileio.read_bytes(args.infile)
    solver = _solver(args)
    if args.kind == "triangle":
        yes = decide_triangle_via_hop(fileio.load_triangle(raw), solver)
    elif args.kind == "convolution":
        yes = decide_common_via_hop(fileio.load_common(raw), solver)
    else:
        triple = fileio.load_triple(raw)
        block = args.block if args.block is not None else triple.N
        yes = maxplus_ub_via_pipeline(triple, block, solver)
    print("YES" if yes else "NO")
    return EXIT_OK if yes else EXIT_NO


def cmd_verify(args):
    report = SUITES[args.suite](args.count, args.seed)
    print(report.summary())
    for detail in report.mismatches[:10]:
        print(f"  mismatch: {detail}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_bench(args):
    grid = load_grid(fileio.read_bytes(args.grid_file))
    solvers = {}
    for name in args.solver or ["bellman-ford"]:
        if name == "bellman-ford":
            solvers[f"bellman-ford-{kernels.BACKEND}"] = bellman_ford_solver()
        elif name.startswith("bellman-ford-"):
            backend = name.removeprefix("bellman-ford-")
            kernels.get_backend(backend)
            solvers[name] = bellman_ford_solver(backend)
        else:
            raise UsageError(f"unknown solver {name!r}")
    data = scaling_experiment(grid, solvers, args.reps)
    _emit(data, args.csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="shortest s-t path with at most h hops")
    p.add_argument("--graph", required=True)
    p.add_argument("--oracle", choices=sorted(ORACLES))
    p.add_argument("--backend", choices=sorted(kernels._MODULES))
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="build a reduction gadget graph (+ .map sidecar)")
    p.add_argument("kind", choices=["triangle", "convolution"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("split", help="split a sequence triple into common instances")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--block", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("normalize", help="make a common instance nonnegative and strictly increasing")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    kinds = p.add_subparsers(dest="kind", required=True)
    g = kinds.add_parser("graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--s", type=int, default=0)
    g.add_argument("--t", type=int, default=1)
    g.add_argument("--h", type=int, default=0)
    g = kinds.add_parser("triangle")
    g.add_argument("--P", type=int, required=True)
    g.add_argument("--N", type=int, required=True)
    g = kinds.add_parser("common")
    g.add_argument("--N", type=int, required=True)
    g.add_argument("--M", type=int, required=True)
    g = kinds.add_parser("seqs")
    g.add_argument("--N", type=int, required=True)
    for g in kinds.choices.values():
        g.add_argument("--wmax", type=int, default=100)
        g.add_argument("--seed", type=int, required=True)
        g.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("decide", help="decide a source problem through the hop-bounded reduction")
    p.add_argument("kind", choices=["triangle", "convolution", "maxplus"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--block", type=int)
    p.add_argument("--oracle", choices=sorted(ORACLES))
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="run a seeded oracle-agreement suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time solvers over a parameter grid, write CSV")
    p.add_argument("--grid-file", required=True)
    p.add_argument("--reps", type=int, default=DEFAULT_REPS)
    p.add_argument("--csv", required=True)
    p.add_argument("--solver", action="append", help="bellman-ford[-cython|-numpy|-python]; repeatable")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (
        fileio.FormatError,
        InstanceError,
        BudgetError,
        PreconditionError,
        OracleBudgetError,
        UsageError,
        ValueError,
        OSError,
    ) as exc:
        print(f"hopbound: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""``msat`` command line: solve, kernelize, generate, verify, bench.

Exit codes: 0 yes/ok, 1 no/violation/disagreement, 2 usage or capacity error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from msat import generators
from msat.bench import disagreements, minimized_report, run_bench, to_csv
from msat.errors import CapacityError, FormatError, UsageError
from msat.formats import (
    parse_cnf, parse_graph, parse_instance, parse_witness, serialize_instance, serialize_witness,
)
from msat.formula import verify_witness
from msat.kernel import kernelize
from msat.solvers import ALGORITHMS

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _read_instance(path):
    return parse_instance(Path(path).read_text())


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    instance = _read_instance(args.path)
    outcome = ALGORITHMS[args.algo](instance, max_nodes=args.max_nodes)
    print(outcome.label)
    if outcome.answer and args.witness:
        Path(args.witness).write_text(serialize_witness(outcome.witness))
    if args.stats:
        for line in outcome.stats_lines():
            print(line)
    return EXIT_YES if outcome.answer else EXIT_NO


def cmd_kernelize(args) -> int:
    instance = _read_instance(args.path)
    kernel, report = kernelize(instance)
    if kernel is None:
        print("NO")
        code = EXIT_NO
    else:
        if args.out:
            Path(args.out).write_text(serialize_instance(kernel))
            print("REDUCED")
        else:
            sys.stdout.write(serialize_instance(kernel))
        code = EXIT_YES
    if args.stats:
        stream = sys.stdout if (args.out or kernel is None) else sys.stderr
        stream.write(report.to_text())
    return code


def _generate(args):
    source = args.source
    if source == "random":
        if args.n is None or args.tau is None:
            raise UsageError("--from random needs --n and --tau")
        return generators.random_instance(args.seed, args.n, args.tau, args.q, args.d,
                                          args.clauses)
    if source == "and":
        if not args.input:
            raise UsageError("--from and needs one or more --input instance files")
        return generators.and_compose([_read_instance(p) for p in args.input])
    if not args.input or len(args.input) != 1:
        raise UsageError(f"--from {source} needs exactly one --input file")
    text = Path(args.input[0]).read_text()
    if source in ("wsat", "3sat"):
        n, clauses = parse_cnf(text)
        if source == "3sat":
            return generators.from_3sat(n, clauses)
        if args.k is None:
            raise UsageError("--from wsat needs --k")
        return generators.from_weighted_2sat(n, clauses, args.k)
    graph = parse_graph(text)
    if source == "mis":
        return generators.from_mis(graph)
    if args.k is None:
        raise UsageError("--from vc needs --k")
    return generators.from_vertex_cover(graph, args.k)


def cmd_generate(args) -> int:
    instance = _generate(args)
    _emit(serialize_instance(instance), args.out)
    summary = f"n={instance.n} tau={instance.tau} d={instance.d} m={instance.m}"
    if args.source == "random":
        summary += f" seed={args.seed}"
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return EXIT_YES


def cmd_verify(args) -> int:
    instance = _read_instance(args.instance)
    witness = parse_witness(Path(args.witness).read_text(), instance.n, instance.tau)
    violation = verify_witness(instance, witness)
    if violation is None:
        print("OK")
        return EXIT_YES
    print(f"VIOLATION {violation}")
    return EXIT_NO


def cmd_bench(args) -> int:
    algos = [a for a in args.algos.split(",") if a]
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise UsageError(f"unknown algorithms: {', '.join(unknown)}")
    rows = run_bench(Path(args.corpus), algos, args.timeout, args.jobs, args.max_nodes)
    _emit(to_csv(rows), args.csv)
    if disagreements(rows):
        print(minimized_report(rows, Path(args.corpus)), file=sys.stderr)
        return EXIT_NO
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def guard(p):
        p.add_argument("--max-nodes", type=int, default=None,
                       help="capacity guard (default: $MSAT_MAX_NODES or 2^26)")

    p = sub.add_parser("solve", help="decide an instance")
    p.add_argument("path")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="auto")
    p.add_argument("--witness", help="write the witness here when the answer is yes")
    p.add_argument("--stats", action="store_true")
    guard(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernelize", help="apply the reduction rules")
    p.add_argument("path")
    p.add_argument("--out")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("generate", help="build an instance by reduction or at random")
    p.add_argument("--from", dest="source", required=True,
                   choices=["wsat", "3sat", "mis", "vc", "and", "random"])
    p.add_argument("--input", action="append", help="source file (repeat for --from and)")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--tau", type=int)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--clauses", type=int, default=0, help="clauses per stage")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a witness against an instance")
    p.add_argument("instance")
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run algorithms over a corpus directory")
    p.add_argument("corpus")
    p.add_argument("--algos", default="auto,graph")
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--csv")
    p.add_argument("--jobs", type=int, default=1)
    guard(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CapacityError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

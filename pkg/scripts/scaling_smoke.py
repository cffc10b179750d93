"""Time the assignment-graph and dual solvers on growing instances.

Grows n at fixed tau and d for the assignment graph, and n at fixed n - d for
the dual solver, stopping a series at the first capacity error or timeout budget.
"""

import argparse
import time
from dataclasses import dataclass

from msat.errors import CapacityError
from msat.generators import random_instance
from msat.solvers import solve_assignment_graph, solve_dual


@dataclass
class ScalingConfig:
    tau: int = 20
    d: int = 2
    dual_gap: int = 1
    clauses: int = 4
    budget_s: float = 10.0
    seed: int = 7


def series(label, solver, make, sizes, budget):
    for n in sizes:
        inst = make(n)
        start = time.perf_counter()
        try:
            outcome = solver(inst)
        except CapacityError as exc:
            print(f"{label} n={n:2d} capacity: {exc}")
            return
        elapsed = time.perf_counter() - start
        print(f"{label} n={n:2d} tau={inst.tau} d={inst.d} {outcome.label:3s} "
              f"nodes={outcome.stats.get('nodes')} time={elapsed:.2f}s")
        if elapsed > budget:
            return


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--tau", type=int, default=ScalingConfig.tau)
    parser.add_argument("--d", type=int, default=ScalingConfig.d)
    parser.add_argument("--dual-gap", type=int, default=ScalingConfig.dual_gap)
    parser.add_argument("--clauses", type=int, default=ScalingConfig.clauses)
    parser.add_argument("--budget-s", type=float, default=ScalingConfig.budget_s)
    parser.add_argument("--seed", type=int, default=ScalingConfig.seed)
    c = ScalingConfig(**vars(parser.parse_args()))
    series("graph", solve_assignment_graph,
           lambda n: random_instance(c.seed, n, c.tau, 2, min(c.d, n), c.clauses),
           range(4, 21), c.budget_s)
    series("dual ", solve_dual,
           lambda n: random_instance(c.seed, n, c.tau, 2, n - c.dual_gap, c.clauses),
           range(c.dual_gap + 2, 41, 2), c.budget_s)


if __name__ == "__main__":
    main()

"""Cross-check every solver against the brute-force oracle on seeded random instances.

Prints one summary line per solver and exits 1 on any disagreement or bad witness.
"""

import argparse
import random
import sys
import time
from collections import Counter
from dataclasses import dataclass, fields

from msat.errors import CapacityError, UsageError
from msat.formula import is_solution
from msat.generators import random_instance
from msat.solvers import ALGORITHMS, solve_brute


@dataclass
class SweepConfig:
    count: int = 500
    max_n: int = 7
    max_tau: int = 4
    seed: int = 0
    brute_bits: int = 28


def sweep(config: SweepConfig):
    rng = random.Random(config.seed)
    tallies = {name: Counter() for name in ALGORITHMS if name != "brute"}
    problems = []
    for index in range(config.count):
        n = rng.randint(1, config.max_n)
        inst = random_instance(rng.randrange(2**32), n, rng.randint(1, config.max_tau), 2,
                               rng.randint(0, n), rng.randint(0, n + 2))
        expected = solve_brute(inst, max_bits=config.brute_bits).answer
        for name, tally in tallies.items():
            try:
                outcome = ALGORITHMS[name](inst)
            except (UsageError, CapacityError):
                tally["skipped"] += 1
                continue
            if outcome.answer != expected:
                tally["disagree"] += 1
                problems.append((index, name))
            elif outcome.answer and not is_solution(inst, outcome.witness):
                tally["bad-witness"] += 1
                problems.append((index, name))
            else:
                tally["agree"] += 1
    return tallies, problems


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        parser.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    config = SweepConfig(**vars(parser.parse_args()))
    start = time.perf_counter()
    tallies, problems = sweep(config)
    for name, tally in tallies.items():
        print(f"{name:6s} " + " ".join(f"{k}={v}" for k, v in sorted(tally.items())))
    print(f"instances={config.count} time={time.perf_counter() - start:.1f}s problems={problems[:5]}")
    sys.exit(1 if problems else 0)


if __name__ == "__main__":
    main()

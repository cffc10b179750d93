"""Write a seeded corpus of random instances for ``msat bench``.

    python3 scripts/build_corpus.py corpus/ --count 50 --max-n 8 --max-tau 5
"""

import argparse
import random
from dataclasses import dataclass, fields
from pathlib import Path

from msat.formats import serialize_instance
from msat.generators import random_instance


@dataclass
class CorpusConfig:
    out: Path
    count: int = 50
    max_n: int = 8
    max_tau: int = 5
    q: int = 2
    seed: int = 0


def build(config: CorpusConfig) -> list:
    rng = random.Random(config.seed)
    config.out.mkdir(parents=True, exist_ok=True)
    written = []
    for index in range(config.count):
        n = rng.randint(1, config.max_n)
        tau = rng.randint(1, config.max_tau)
        seed = rng.randrange(2**32)
        inst = random_instance(seed, n, tau, config.q, rng.randint(0, n), rng.randint(0, n + 2))
        path = config.out / f"r{index:04d}_n{n}_t{tau}_d{inst.d}.msat"
        path.write_text(serialize_instance(inst))
        written.append(path)
    return written


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out", type=Path)
    for f in fields(CorpusConfig)[1:]:
        parser.add_argument("--" + f.name.replace("_", "-"), type=type(f.default), default=f.default)
    config = CorpusConfig(**vars(parser.parse_args()))
    print(f"wrote {len(build(config))} instances to {config.out}")


if __name__ == "__main__":
    main()

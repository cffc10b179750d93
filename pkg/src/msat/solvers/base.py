from __future__ import annotations

import functools
import os
import time
from dataclasses import dataclass, field

from msat.errors import UsageError

DEFAULT_MAX_NODES = 1 << 26
DEFAULT_BRUTE_BITS = 24


def default_max_nodes() -> int:
    """Guard for graph sizes and enumerations; ``MSAT_MAX_NODES`` overrides."""
    value = os.environ.get("MSAT_MAX_NODES")
    return int(value) if value else DEFAULT_MAX_NODES


@dataclass
class SolveOutcome:
    answer: bool
    witness: tuple | None = None
    algorithm: str = ""
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.answer != (self.witness is not None):
            raise ValueError("a witness is present exactly for yes outcomes")

    @property
    def label(self) -> str:
        return "YES" if self.answer else "NO"

    def stats_lines(self) -> list:
        lines = [f"algorithm={self.algorithm}"]
        lines += [f"{k}={v}" for k, v in self.stats.items()]
        return lines


def yes(witness, algorithm, **stats) -> SolveOutcome:
    return SolveOutcome(True, tuple(tuple(f) for f in witness), algorithm, stats)


def no(algorithm, **stats) -> SolveOutcome:
    return SolveOutcome(False, None, algorithm, stats)


def require_2sat(instance, algorithm):
    if instance.q > 2:
        raise UsageError(f"{algorithm} requires q <= 2, got q={instance.q}")


def timed(func):
    """Record wall time of a solver call in ``stats['time_s']``."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        outcome = func(*args, **kwargs)
        if outcome is not None:
            outcome.stats["time_s"] = round(time.perf_counter() - start, 6)
        return outcome

    return wrapper

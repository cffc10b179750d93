"""Exhaustive oracle: depth-first search over assignment sequences.

Checks the two defining conditions directly with ``evaluate`` and
``hamming``. Stage/assignment states already proven to have no completion
are remembered, so the search is exhaustive without revisiting dead ends.
"""

from __future__ import annotations

import itertools

from msat.errors import CapacityError
from msat.formula import MultistageInstance, evaluate, hamming
from msat.solvers.base import DEFAULT_BRUTE_BITS, no, timed, yes


@timed
def solve_brute(instance: MultistageInstance, max_bits: int = DEFAULT_BRUTE_BITS):
    """Lexicographically first witness, if any (False < True, stage 1 first)."""
    n, tau, d = instance.n, instance.tau, instance.d
    if n * tau > max_bits:
        raise CapacityError(f"brute force needs n*tau <= {max_bits}, got {n}*{tau}={n * tau}")
    everything = list(itertools.product((False, True), repeat=n))
    models = [[f for f in everything if evaluate(f, stage)] for stage in instance.stages]
    dead = set()
    visited = 0

    def extend(i, prev):
        nonlocal visited
        for f in models[i]:
            if prev is not None and hamming(prev, f) > d:
                continue
            if (i, f) in dead:
                continue
            visited += 1
            if i == tau - 1:
                return [f]
            rest = extend(i + 1, f)
            if rest is not None:
                return [f] + rest
            dead.add((i, f))
        return None

    path = extend(0, None)
    stats = dict(enumerated=len(everything) * tau, nodes=visited, arcs=0)
    if path is None:
        return no("brute", **stats)
    return yes(path, "brute", **stats)

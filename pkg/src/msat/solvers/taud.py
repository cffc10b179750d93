"""Guess-the-changing-variables algorithm, polynomial for fixed ``tau * d``.

Guess the set ``S`` of variables that ever change (``|S| <= tau * d``), their
values in stage 1 and a flip pattern with at most ``min(|S|, d)`` flips per
transition. Substituting these values leaves a residual instance on the
other variables in which nothing may change, i.e. one 2-SAT instance over
the conjunction of the simplified stages. The conjunction is checked on
every prefix of stages so hopeless flip prefixes are cut early; this does
not change which guesses succeed.
"""

from __future__ import annotations

import itertools
from math import comb

from msat.errors import CapacityError
from msat.formula import MultistageInstance, simplify
from msat.solvers.base import default_max_nodes, no, require_2sat, timed, yes
from msat.solvers.graph import solve_assignment_graph
from msat.twosat import conjunction_model


def flip_patterns(size: int, d: int) -> list:
    """Bool tuples of length ``size`` with at most ``min(size, d)`` True entries."""
    return [p for p in itertools.product((False, True), repeat=size)
            if sum(p) <= min(size, d)]


def predicted_guesses(n: int, tau: int, d: int) -> int:
    """Number of (subset, initial values, flip sequence) guesses enumerated."""
    total = 0
    for s in range(min(tau * d, n) + 1):
        patterns = sum(comb(s, j) for j in range(min(s, d) + 1))
        total += comb(n, s) * (1 << s) * patterns ** (tau - 1)
    return total


@timed
def solve_tau_d(instance: MultistageInstance, max_nodes: int | None = None):
    require_2sat(instance, "tau+d solver")
    max_nodes = default_max_nodes() if max_nodes is None else max_nodes
    n, tau, d = instance.n, instance.tau, instance.d
    if tau * d >= n:
        outcome = solve_assignment_graph(instance, max_nodes=max_nodes)
        outcome.algorithm = "taud"
        outcome.stats["branch"] = "graph"
        return outcome
    predicted = predicted_guesses(n, tau, d)
    if predicted > max_nodes:
        raise CapacityError(f"tau+d solver would enumerate {predicted} guesses, guard is {max_nodes}")

    stages = instance.stages
    counters = dict(enumerated=0, nodes=0)

    def descend(changing, values, residual, patterns):
        # values[i]: stage-(i+1) values on `changing`; residual[i]: simplified stage i+1
        counters["nodes"] += 1
        model = conjunction_model(n, residual)
        if model is None:
            return None
        i = len(values)
        if i == tau:
            counters["enumerated"] += 1
            witness = []
            for vals in values:
                f = list(model)
                for v, b in zip(changing, vals):
                    f[v] = b
                witness.append(tuple(f))
            return witness
        for g in patterns:
            vals = tuple(a != b for a, b in zip(values[-1], g))
            found = descend(changing, values + [vals],
                            residual + [simplify(stages[i], dict(zip(changing, vals)))],
                            patterns)
            if found is not None:
                return found
        return None

    for size in range(tau * d + 1):
        for changing in itertools.combinations(range(n), size):
            patterns = flip_patterns(size, d)
            for first in itertools.product((False, True), repeat=size):
                found = descend(changing, [first],
                                [simplify(stages[0], dict(zip(changing, first)))],
                                patterns)
                if found is not None:
                    return yes(found, "taud", predicted=predicted, changing=len(changing),
                               arcs=0, **counters)
    return no("taud", predicted=predicted, arcs=0, **counters)

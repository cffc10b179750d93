"""Greedy solver for budgets exceeding twice the clause count, and the
(m, n, d) dispatcher choosing between it and the assignment graph."""

from __future__ import annotations

from msat.errors import UsageError
from msat.formula import MultistageInstance, formula_vars
from msat.solvers.base import no, require_2sat, timed, yes
from msat.solvers.graph import solve_assignment_graph
from msat.twosat import solve_2sat


@timed
def solve_greedy(instance: MultistageInstance):
    """Each stage resets only the variables it mentions, at most 2m < d of them."""
    require_2sat(instance, "greedy")
    n, m, d = instance.n, instance.m, instance.d
    if not 2 * m < d:
        raise UsageError(f"greedy requires 2m < d; m={m} d={d}")
    models = [solve_2sat(n, stage) for stage in instance.stages]
    if any(f is None for f in models):
        return no("greedy", nodes=0, arcs=0, enumerated=0)
    witness = [models[0]]
    for f_new, stage in zip(models[1:], instance.stages[1:]):
        touched = formula_vars(stage)
        prev = witness[-1]
        witness.append(tuple(f_new[v] if v in touched else prev[v] for v in range(n)))
    return yes(witness, "greedy", nodes=0, arcs=0, enumerated=len(models))


def mnd_branch(instance: MultistageInstance) -> str:
    n, m, d = instance.n, instance.m, instance.d
    return "graph" if 2 * (m + n - d) >= 2 * n - d else "greedy"


@timed
def solve_m_n_d(instance: MultistageInstance, max_nodes: int | None = None):
    require_2sat(instance, "m+n-d solver")
    branch = mnd_branch(instance)
    if branch == "graph":
        outcome = solve_assignment_graph(instance, max_nodes=max_nodes)
    else:
        outcome = solve_greedy(instance)
    outcome.algorithm = "mnd"
    outcome.stats["branch"] = branch
    return outcome

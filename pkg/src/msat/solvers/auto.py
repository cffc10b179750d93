"""Portfolio dispatch: kernelize, then pick the cheapest applicable algorithm."""

from __future__ import annotations

from msat.errors import CapacityError
from msat.formula import MultistageInstance
from msat.kernel import kernelize, lift_witness
from msat.solvers.base import no, require_2sat, timed
from msat.solvers.dual import solve_dual
from msat.solvers.graph import solve_assignment_graph
from msat.solvers.greedy import solve_greedy
from msat.solvers.special import solve_special
from msat.solvers.taud import solve_tau_d


def predicted_costs(instance: MultistageInstance) -> dict:
    """Worst-case running-time bounds (without the ``n + m`` factor) per algorithm."""
    n, tau, d = instance.n, instance.tau, instance.d
    k = n - d
    return {
        "graph": min(2 ** n * n ** d, 4 ** n) * tau,
        "dual": n ** (4 * k + 1) * 2 ** (4 * k) * tau,
        "taud": n ** (2 * tau * d) * 2 ** (tau * d + 1) * tau,
    }


_BY_NAME = {"graph": solve_assignment_graph, "dual": solve_dual, "taud": solve_tau_d}


@timed
def solve_auto(instance: MultistageInstance, max_nodes: int | None = None):
    require_2sat(instance, "auto")
    kernel, report = kernelize(instance)
    kstats = dict(kernel_n=report.after_n if kernel is not None else None)
    if kernel is None:
        return no("auto", branch="kernel", nodes=0, arcs=0, enumerated=0, **kstats)

    outcome = solve_special(kernel)
    branch = "special"
    if outcome is None and 2 * kernel.m < kernel.d:
        outcome = solve_greedy(kernel)
        branch = "greedy"
    if outcome is None:
        costs = predicted_costs(kernel)
        ranked = sorted(costs, key=lambda name: (costs[name], name))
        for name in ranked:
            try:
                outcome = _BY_NAME[name](kernel, max_nodes=max_nodes)
            except CapacityError:
                continue
            branch = name
            break
        else:
            cheapest = ranked[0]
            raise CapacityError(
                f"every algorithm exceeds its guard; cheapest predicted is "
                f"{cheapest} with cost {costs[cheapest]}")

    stats = dict(outcome.stats)
    stats.pop("time_s", None)
    stats.update(branch=branch, **kstats)
    outcome.stats = stats
    outcome.algorithm = "auto"
    if outcome.answer:
        outcome.witness = lift_witness(outcome.witness, report.var_map, instance.n)
    return outcome

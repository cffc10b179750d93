from __future__ import annotations

from msat.formula import MultistageInstance
from msat.solvers.base import no, require_2sat, timed, yes
from msat.twosat import conjunction_model, solve_2sat


@timed
def solve_special(instance: MultistageInstance):
    """Linear-time cases: one stage, no change allowed, or unrestricted change.

    Returns None when none of ``tau == 1``, ``d == 0``, ``d >= n`` holds.
    """
    require_2sat(instance, "special-case solver")
    n, tau = instance.n, instance.tau
    if tau == 1:
        f = solve_2sat(n, instance.stages[0])
        return no("special", case="tau=1") if f is None else yes([f], "special", case="tau=1")
    if instance.d == 0:
        f = conjunction_model(n, instance.stages)
        if f is None:
            return no("special", case="d=0")
        return yes([f] * tau, "special", case="d=0")
    if instance.d >= n:
        witness = []
        for stage in instance.stages:
            f = solve_2sat(n, stage)
            if f is None:
                return no("special", case="d=n")
            witness.append(f)
        return yes(witness, "special", case="d=n")
    return None

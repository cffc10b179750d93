"""Data reduction for multistage 2-SAT.

Three rules: reject when a stage is unsatisfiable, drop duplicate clauses
within a stage, and delete variables that no stage mentions. After
:func:`kernelize` each stage has at most ``2n + C(2n, 2)`` clauses and
``n <= 2 * m * tau``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from msat.errors import UsageError
from msat.formula import Literal, MultistageInstance, canonicalize
from msat.twosat import solve_2sat


def rr_trivial_no(instance: MultistageInstance) -> bool:
    """True iff every stage is individually satisfiable (the rule passes)."""
    if instance.q > 2:
        raise UsageError(f"unsatisfiable-stage rule needs q <= 2, got q={instance.q}")
    return all(solve_2sat(instance.n, stage) is not None for stage in instance.stages)


def rr_dedup(instance: MultistageInstance) -> tuple:
    """Keep the first occurrence of each clause per stage; returns (instance, removed)."""
    removed = 0
    stages = []
    for stage in instance.stages:
        seen = set()
        kept = []
        for clause in stage:
            if clause in seen:
                removed += 1
            else:
                seen.add(clause)
                kept.append(clause)
        stages.append(tuple(kept))
    return MultistageInstance(instance.n, tuple(stages), instance.d, instance.q), removed


def rr_drop_unused(instance: MultistageInstance) -> tuple:
    """Remove variables occurring in no stage and compact indices.

    Returns ``(instance, var_map)`` where ``var_map[new] = old``. The budget
    is capped at the new variable count.
    """
    var_map = tuple(sorted(instance.used_vars()))
    if len(var_map) == instance.n:
        return instance, var_map
    new_index = {old: new for new, old in enumerate(var_map)}
    stages = tuple(
        tuple(tuple(Literal(new_index[lit.var], lit.negated) for lit in clause) for clause in stage)
        for stage in instance.stages
    )
    n = len(var_map)
    return MultistageInstance(n, stages, min(instance.d, n), instance.q), var_map


@dataclass
class KernelReport:
    before_n: int
    before_m: tuple
    before_tau: int
    after_n: int = 0
    after_m: tuple = ()
    after_tau: int = 0
    applied: dict = field(default_factory=lambda: {"rr1": 0, "canonicalize": 0, "rr2": 0, "rr3": 0})
    var_map: tuple = ()
    no_instance: bool = False

    def lines(self) -> list:
        out = [
            f"verdict={'no' if self.no_instance else 'reduced'}",
            f"before_n={self.before_n}",
            f"before_m={max(self.before_m, default=0)}",
            f"before_tau={self.before_tau}",
        ]
        if not self.no_instance:
            out += [
                f"after_n={self.after_n}",
                f"after_m={max(self.after_m, default=0)}",
                f"after_tau={self.after_tau}",
            ]
        out += [f"{rule}={count}" for rule, count in self.applied.items()]
        return out

    def to_text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def kernelize(instance: MultistageInstance) -> tuple:
    """Apply the reduction rules to a fixpoint.

    Returns ``(kernel, report)``; ``kernel`` is None when a stage is
    unsatisfiable. Order per round: unsatisfiable-stage check, clause
    canonicalization, duplicate removal, unused-variable removal.
    """
    if instance.q > 2:
        raise UsageError(f"kernelization needs q <= 2, got q={instance.q}")
    report = KernelReport(instance.n, instance.clause_counts(), instance.tau)
    var_map = tuple(range(instance.n))
    current = instance
    while True:
        if not rr_trivial_no(current):
            report.applied["rr1"] += 1
            report.no_instance = True
            return None, report

        stages = tuple(canonicalize(stage) for stage in current.stages)
        dropped = sum(len(a) - len(b) for a, b in zip(current.stages, stages))
        report.applied["canonicalize"] += dropped
        current = MultistageInstance(current.n, stages, current.d, current.q)

        current, dups = rr_dedup(current)
        report.applied["rr2"] += dups

        before = current.n
        current, step_map = rr_drop_unused(current)
        report.applied["rr3"] += before - current.n
        var_map = tuple(var_map[i] for i in step_map)

        if dropped == 0 and dups == 0 and before == current.n:
            break
    report.after_n = current.n
    report.after_m = current.clause_counts()
    report.after_tau = current.tau
    report.var_map = var_map
    return current, report


def lift_witness(witness, var_map, n: int) -> tuple:
    """Extend a kernel witness to ``n`` original variables; removed ones stay False."""
    lifted = []
    for f in witness:
        values = [False] * n
        for new, old in enumerate(var_map):
            values[old] = f[new]
        lifted.append(tuple(values))
    return tuple(lifted)

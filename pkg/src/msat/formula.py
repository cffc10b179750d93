"""Literals, clauses, stage formulas and multistage instances.

Variables are dense 0-based indices. An assignment is a tuple of bools of
length ``n``; a partial assignment is any mapping from variable index to
bool. Clauses are stored in canonical form: literals sorted by
``(var, negated)`` with duplicates removed. Tautological clauses are kept
unless :func:`canonicalize` is called on the formula.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from msat.errors import UsageError


class Literal(NamedTuple):
    var: int
    negated: bool = False

    def __invert__(self) -> "Literal":
        return Literal(self.var, not self.negated)

    def value(self, assignment: Sequence[bool]) -> bool:
        return assignment[self.var] != self.negated

    def to_dimacs(self) -> int:
        return -(self.var + 1) if self.negated else self.var + 1

    @classmethod
    def from_dimacs(cls, code: int) -> "Literal":
        if code == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(code) - 1, code < 0)

    def __repr__(self) -> str:
        return f"{'~' if self.negated else ''}x{self.var}"


Clause = tuple  # tuple[Literal, ...]
StageFormula = tuple  # tuple[Clause, ...]
Assignment = tuple  # tuple[bool, ...]
Witness = tuple  # tuple[Assignment, ...]


def pos(var: int) -> Literal:
    return Literal(var, False)


def neg(var: int) -> Literal:
    return Literal(var, True)


def make_clause(literals: Iterable) -> Clause:
    """Canonical clause from literals or DIMACS-style signed ints."""
    lits = set()
    for lit in literals:
        if isinstance(lit, Literal):
            lits.add(lit)
        elif isinstance(lit, tuple):
            lits.add(Literal(int(lit[0]), bool(lit[1])))
        else:
            lits.add(Literal.from_dimacs(int(lit)))
    return tuple(sorted(lits))


def make_formula(clauses: Iterable[Iterable]) -> StageFormula:
    return tuple(make_clause(c) for c in clauses)


def is_tautology(clause: Clause) -> bool:
    seen = set()
    for lit in clause:
        if ~lit in seen:
            return True
        seen.add(lit)
    return False


def formula_vars(formula: StageFormula) -> set:
    return {lit.var for clause in formula for lit in clause}


@dataclass(frozen=True)
class MultistageInstance:
    """A sequence of CNF stage formulas over ``n`` variables with budget ``d``.

    Clauses are canonicalized on construction. A budget above ``n`` is
    clamped to ``n`` (with a warning), since ``d = n`` already allows any
    change.
    """

    n: int
    stages: tuple
    d: int
    q: int = 2

    def __post_init__(self):
        if self.n < 0:
            raise UsageError(f"variable count must be non-negative, got {self.n}")
        if self.q < 1:
            raise UsageError(f"clause width bound must be positive, got {self.q}")
        if self.d < 0:
            raise UsageError(f"budget must be non-negative, got {self.d}")
        stages = tuple(make_formula(stage) for stage in self.stages)
        if not stages:
            raise UsageError("an instance needs at least one stage")
        for i, stage in enumerate(stages, 1):
            for clause in stage:
                if len(clause) > self.q:
                    raise UsageError(
                        f"stage {i}: clause {clause} wider than q={self.q}")
                for lit in clause:
                    if not 0 <= lit.var < self.n:
                        raise UsageError(
                            f"stage {i}: variable {lit.var} out of range [0, {self.n})")
        object.__setattr__(self, "stages", stages)
        if self.d > self.n:
            warnings.warn(f"budget d={self.d} exceeds n={self.n}; clamped to {self.n}",
                          stacklevel=3)
            object.__setattr__(self, "d", self.n)

    @property
    def tau(self) -> int:
        return len(self.stages)

    @property
    def m(self) -> int:
        """Largest clause count over all stages."""
        return max(len(stage) for stage in self.stages)

    def clause_counts(self) -> tuple:
        return tuple(len(stage) for stage in self.stages)

    def used_vars(self) -> set:
        used = set()
        for stage in self.stages:
            used |= formula_vars(stage)
        return used

    def with_budget(self, d: int) -> "MultistageInstance":
        return MultistageInstance(self.n, self.stages, min(d, self.n), self.q)


def hamming(a: Sequence[bool], b: Sequence[bool]) -> int:
    if len(a) != len(b):
        raise UsageError(f"assignment lengths differ: {len(a)} vs {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def evaluate(assignment: Sequence[bool], formula: StageFormula) -> bool:
    n = len(assignment)
    for clause in formula:
        for lit in clause:
            if not 0 <= lit.var < n:
                raise UsageError(f"variable {lit.var} out of range for assignment of length {n}")
        if not any(assignment[lit.var] != lit.negated for lit in clause):
            return False
    return True


def simplify(formula: StageFormula, partial: Mapping[int, bool]) -> StageFormula:
    """Substitute ``partial`` into ``formula``.

    Satisfied clauses are removed and falsified literals deleted. A clause
    whose literals are all falsified survives as the empty clause ``()``.
    """
    out = []
    for clause in formula:
        kept = []
        satisfied = False
        for lit in clause:
            if lit.var in partial:
                if partial[lit.var] != lit.negated:
                    satisfied = True
                    break
            else:
                kept.append(lit)
        if not satisfied:
            out.append(tuple(kept))
    return tuple(out)


def canonicalize(formula: StageFormula) -> StageFormula:
    """Sort and deduplicate each clause and drop tautologies; order is kept."""
    out = []
    for clause in formula:
        clause = make_clause(clause)
        if not is_tautology(clause):
            out.append(clause)
    return tuple(out)


@dataclass(frozen=True)
class Violation:
    """First failed condition of a witness.

    ``kind`` is ``"stage"`` (``index`` is the 1-based unsatisfied stage) or
    ``"transition"`` (between stages ``index`` and ``index + 1``, with the
    offending ``distance``).
    """

    kind: str
    index: int
    distance: int | None = None

    def __str__(self) -> str:
        if self.kind == "stage":
            return f"stage {self.index} not satisfied"
        return (f"transition {self.index}->{self.index + 1} "
                f"distance {self.distance} exceeds budget")


def verify_witness(instance: MultistageInstance, witness: Sequence[Sequence[bool]]):
    """Return None if ``witness`` solves ``instance``, else the first :class:`Violation`.

    Stages are checked in order, each stage before the transition leaving it.
    """
    if len(witness) != instance.tau:
        raise UsageError(f"witness has {len(witness)} assignments, instance has {instance.tau} stages")
    for i, f in enumerate(witness):
        if len(f) != instance.n:
            raise UsageError(f"assignment {i + 1} has length {len(f)}, expected {instance.n}")
    for i, (f, stage) in enumerate(zip(witness, instance.stages), 1):
        if not evaluate(f, stage):
            return Violation("stage", i)
        if i < instance.tau:
            dist = hamming(f, witness[i])
            if dist > instance.d:
                return Violation("transition", i, dist)
    return None


def is_solution(instance: MultistageInstance, witness) -> bool:
    return verify_witness(instance, witness) is None


# Bitmask encoding: variable 0 is the most significant bit, so integer order
# on masks equals lexicographic order on assignment tuples (False < True).

def var_bit(n: int, var: int) -> int:
    return 1 << (n - 1 - var)


def to_mask(assignment: Sequence[bool]) -> int:
    mask = 0
    for v in assignment:
        mask = (mask << 1) | bool(v)
    return mask


def from_mask(mask: int, n: int) -> Assignment:
    return tuple(bool(mask >> (n - 1 - i) & 1) for i in range(n))


def clause_masks(n: int, clause: Clause) -> tuple:
    """(positive-literal mask, negated-literal mask) of a clause."""
    p = q = 0
    for lit in clause:
        if lit.negated:
            q |= var_bit(n, lit.var)
        else:
            p |= var_bit(n, lit.var)
    return p, q

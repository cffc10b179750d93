"""Compatible-pair graph for the dual parameter ``k = n - d``.

A *half* is a partial assignment on exactly ``k`` variables; it is the part
of the assignment that stays fixed across one transition. Layer ``i`` of the
graph holds pairs ``(h, h')`` of compatible halves such that stage ``i``
simplified by ``h``, stage ``i+1`` by ``h | h'`` and stage ``i+2`` by ``h'``
are all satisfiable; arcs join ``(h, h')`` to ``(h', h'')``. The graph is
built forward from the source, so only reachable pairs are materialized.
"""

from __future__ import annotations

import itertools
from math import comb

from msat.errors import CapacityError
from msat.formula import MultistageInstance, simplify, var_bit
from msat.solvers.base import default_max_nodes, no, require_2sat, timed, yes
from msat.solvers.special import solve_special
from msat.twosat import solve_2sat


def enumerate_halves(n: int, k: int) -> list:
    """(domain mask, value mask) pairs; subsets then bit patterns, both lexicographic."""
    halves = []
    for subset in itertools.combinations(range(n), k):
        dom = sum(var_bit(n, v) for v in subset)
        for values in itertools.product((False, True), repeat=k):
            val = sum(var_bit(n, v) for v, b in zip(subset, values) if b)
            halves.append((dom, val))
    return halves


class _StageOracle:
    """Memoized satisfiability of a stage under a partial assignment."""

    def __init__(self, instance):
        self.n = instance.n
        self.stages = instance.stages
        self.cache = {}
        self.calls = 0

    def partial(self, dom, val) -> dict:
        n = self.n
        return {v: bool(val & var_bit(n, v)) for v in range(n) if dom & var_bit(n, v)}

    def sat(self, i, dom, val) -> bool:
        key = (i, dom, val)
        hit = self.cache.get(key)
        if hit is None:
            self.calls += 1
            formula = simplify(self.stages[i], self.partial(dom, val))
            hit = solve_2sat(self.n, formula) is not None
            self.cache[key] = hit
        return hit

    def model(self, i, dom, val) -> tuple:
        partial = self.partial(dom, val)
        f = list(solve_2sat(self.n, simplify(self.stages[i], partial)))
        for v, b in partial.items():
            f[v] = b
        return tuple(f)


def _compatible(a, b) -> bool:
    return (a[1] ^ b[1]) & a[0] & b[0] == 0


def _union(a, b) -> tuple:
    return a[0] | b[0], a[1] | b[1]


@timed
def solve_dual(instance: MultistageInstance, max_nodes: int | None = None):
    require_2sat(instance, "dual solver")
    max_nodes = default_max_nodes() if max_nodes is None else max_nodes
    n, tau, d = instance.n, instance.tau, instance.d
    k = n - d
    if tau == 1 or k <= 0:
        outcome = solve_special(instance)
        outcome.algorithm = "dual"
        outcome.stats["branch"] = "special"
        return outcome

    per_layer = comb(n, k) << k
    if per_layer * per_layer > max_nodes:
        raise CapacityError(
            f"dual solver needs {per_layer}^2 pair candidates per layer, guard is {max_nodes}")
    halves = enumerate_halves(n, k)
    oracle = _StageOracle(instance)

    if tau == 2:
        for h in halves:
            if oracle.sat(0, *h) and oracle.sat(1, *h):
                witness = [oracle.model(0, *h), oracle.model(1, *h)]
                return yes(witness, "dual", nodes=1, arcs=0, enumerated=len(halves),
                           sat_checks=oracle.calls)
        return no("dual", nodes=0, arcs=0, enumerated=len(halves), sat_checks=oracle.calls)

    # parents[i][h'] = h for the first admitted node (h, h') of layer i
    parents = []
    frontier = [h for h in halves if oracle.sat(0, *h)]
    nodes = 0
    arcs = 0
    enumerated = 0
    prev_in = None  # count of admitted nodes of the previous layer ending in each half
    for i in range(tau - 2):
        targets = [h for h in halves if oracle.sat(i + 2, *h)]
        parent = {}
        ends = {}
        for h in frontier:
            if not oracle.sat(i, *h):
                continue
            out = 0
            for h2 in targets:
                enumerated += 1
                if not _compatible(h, h2) or not oracle.sat(i + 1, *_union(h, h2)):
                    continue
                out += 1
                ends[h2] = ends.get(h2, 0) + 1
                parent.setdefault(h2, h)
            nodes += out
            arcs += out * (prev_in[h] if prev_in is not None else 1)
        parents.append(parent)
        prev_in = ends
        frontier = list(parent)
        if not frontier:
            break
    arcs += sum(prev_in.values()) if frontier else 0
    stats = dict(nodes=nodes + 2, arcs=arcs, enumerated=enumerated, sat_checks=oracle.calls)
    if not frontier:
        return no("dual", **stats)

    path = [frontier[0]]
    for parent in reversed(parents):
        path.append(parent[path[-1]])
    path.reverse()  # halves h_1, ..., h_{tau-1}
    witness = [oracle.model(0, *path[0])]
    for i in range(1, tau - 1):
        witness.append(oracle.model(i, *_union(path[i - 1], path[i])))
    witness.append(oracle.model(tau - 1, *path[-1]))
    return yes(witness, "dual", **stats)

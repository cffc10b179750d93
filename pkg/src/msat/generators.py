"""Instance generators: reductions from classic problems plus a seeded random family.

Variable layouts:

* weighted 2-SAT, 3-SAT: source variables keep their indices; the 3-SAT
  reduction appends ``b1, b2, b3`` as ``n, n+1, n+2``.
* multicolored independent set, vertex cover: variable ``i`` is vertex ``i``;
  vertex cover appends ``b_1..b_k`` after the vertices.
* AND-composition: all inputs share the variable set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from msat.errors import UsageError
from msat.formula import Literal, MultistageInstance, make_clause, neg, pos


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..num_vertices-1``.

    ``parts``, when given, is a partition of the vertices into classes.
    """

    num_vertices: int
    edges: tuple
    parts: tuple | None = None

    def __post_init__(self):
        edges = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise UsageError(f"self-loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise UsageError(f"edge ({u}, {v}) out of range")
            key = (min(u, v), max(u, v))
            if key not in seen:
                seen.add(key)
                edges.append(key)
        object.__setattr__(self, "edges", tuple(edges))
        if self.parts is not None:
            parts = tuple(tuple(p) for p in self.parts)
            flat = [v for p in parts for v in p]
            if sorted(flat) != list(range(self.num_vertices)):
                raise UsageError("partition classes must be disjoint and cover all vertices")
            object.__setattr__(self, "parts", parts)

    def neighbors(self, v: int) -> list:
        return sorted({b if a == v else a for a, b in self.edges if v in (a, b)})


def from_weighted_2sat(n: int, formula, k: int) -> MultistageInstance:
    """Stage 1 forces everything False; stage 2 is ``formula``; budget ``k``."""
    formula = tuple(make_clause(c) for c in formula)
    if any(len(c) > 2 for c in formula):
        raise UsageError("weighted 2-SAT source must have clauses of width <= 2")
    if k < 0:
        raise UsageError(f"k must be non-negative, got {k}")
    first = tuple((neg(v),) for v in range(n))
    return MultistageInstance(n, (first, formula), min(k, n))


def from_3sat(n: int, formula) -> MultistageInstance:
    """Budget-1 instance with ``2m`` stages, satisfiable iff ``formula`` is.

    ``formula`` clauses are given as literal triples (repeats allowed, e.g.
    ``x or x or x``); they are not deduplicated before the construction.
    """
    clauses = [tuple(c) for c in formula]
    if not clauses:
        raise UsageError("3-SAT source needs at least one clause")
    b = [n, n + 1, n + 2]
    all_b_pairs = [(0, 1), (0, 2), (1, 2)]
    c_b = tuple(make_clause((pos(b[i]), pos(b[j]))) for i, j in all_b_pairs)
    c_not_b = tuple(make_clause((neg(b[i]), neg(b[j]))) for i, j in all_b_pairs)
    stages = []
    for clause in clauses:
        if len(clause) != 3:
            raise UsageError(f"3-SAT clause must have exactly 3 literals, got {clause}")
        lits = [lit if isinstance(lit, Literal) else Literal.from_dimacs(lit) for lit in clause]
        for lit in lits:
            if not 0 <= lit.var < n:
                raise UsageError(f"literal {lit} out of range for {n} variables")
        stages.append(c_not_b)
        stages.append(tuple(make_clause((lit, pos(bj))) for lit, bj in zip(lits, b)) + c_b)
    return MultistageInstance(n + 3, tuple(stages), 1)


def from_mis(graph: Graph) -> MultistageInstance:
    """All-true first stage; second stage allows one vertex per class, no edges."""
    if graph.parts is None:
        raise UsageError("multicolored independent set needs a vertex partition")
    n = graph.num_vertices
    first = tuple((pos(v),) for v in range(n))
    second = [make_clause((neg(u), neg(v))) for u, v in graph.edges]
    for part in graph.parts:
        for i, u in enumerate(part):
            for v in part[i + 1:]:
                second.append(make_clause((neg(u), neg(v))))
    return MultistageInstance(n, (first, tuple(second)), n - len(graph.parts))


def and_compose(instances) -> MultistageInstance:
    """Chain instances with ``n`` always-true stages between consecutive blocks.

    Inputs must all have ``d = 1`` and equal ``n`` and ``tau``. The padding
    clause ``(x0 or ~x0)`` is kept verbatim.
    """
    instances = list(instances)
    if not instances:
        raise UsageError("AND-composition needs at least one instance")
    n, tau = instances[0].n, instances[0].tau
    for inst in instances:
        if inst.d != 1 or inst.n != n or inst.tau != tau:
            raise UsageError("AND-composition needs uniform d=1, n and tau")
    if n == 0:
        raise UsageError("AND-composition needs n >= 1 for the padding clause")
    pad = ((pos(0), neg(0)),)
    stages = []
    for inst in instances:
        stages.extend(inst.stages)
        stages.extend([pad] * n)
    q = max(2, max(inst.q for inst in instances))
    return MultistageInstance(n, tuple(stages), 1, q)


def from_vertex_cover(graph: Graph, k: int) -> MultistageInstance:
    """``|V| + 1`` stages with budget ``k``; yes iff a cover of size <= k exists."""
    nv = graph.num_vertices
    if not 0 <= k <= nv:
        raise UsageError(f"k must lie in [0, {nv}], got {k}")
    b = [nv + j for j in range(k)]
    n = nv + k
    stages = [tuple((neg(v),) for v in range(n))]
    for i in range(1, nv + 1):
        v = i - 1
        edge_clauses = tuple(make_clause((pos(v), pos(u))) for u in graph.neighbors(v))
        units = tuple((pos(x),) if i % 2 == 0 else (neg(x),) for x in b)
        stages.append(edge_clauses + units)
    return MultistageInstance(n, tuple(stages), k)


def random_instance(seed, n: int, tau: int, q: int = 2, d: int = 0,
                    clauses_per_stage: int = 0) -> MultistageInstance:
    """Seeded random instance.

    Each clause is drawn uniformly from all non-tautological canonical
    clauses of width 1..q over ``n`` variables: pick width ``w`` with
    probability proportional to ``C(n, w) 2^w``, then ``w`` distinct
    variables and independent signs. Stages may repeat clauses.
    """
    if n < 0 or tau < 1 or q < 1 or clauses_per_stage < 0:
        raise UsageError("need n >= 0, tau >= 1, q >= 1, clauses_per_stage >= 0")
    if not 0 <= d <= n:
        raise UsageError(f"d must lie in [0, n={n}], got {d}")
    if n == 0 and clauses_per_stage > 0:
        raise UsageError("cannot draw clauses over zero variables")
    rng = random.Random(seed)
    widths = list(range(1, min(q, n) + 1))
    weights = [comb(n, w) << w for w in widths]
    stages = []
    for _ in range(tau):
        stage = []
        for _ in range(clauses_per_stage):
            w = rng.choices(widths, weights)[0]
            variables = rng.sample(range(n), w)
            stage.append(make_clause(Literal(v, rng.random() < 0.5) for v in variables))
        stages.append(tuple(stage))
    return MultistageInstance(n, tuple(stages), d, q)

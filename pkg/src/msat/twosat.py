"""Linear-time 2-SAT via strongly connected components of the implication graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from msat.errors import UsageError
from msat.formula import Assignment, StageFormula


def _node(lit) -> int:
    return 2 * lit.var + lit.negated


@dataclass(frozen=True)
class ImplicationGraph:
    """Literal node ``2*v`` is ``x_v``, ``2*v + 1`` is ``~x_v``."""

    n: int
    adj: tuple  # tuple[tuple[int, ...], ...], length 2n
    has_empty_clause: bool

    @property
    def arc_count(self) -> int:
        return sum(len(a) for a in self.adj)


def implication_graph(n: int, formula: StageFormula) -> ImplicationGraph:
    adj = [[] for _ in range(2 * n)]
    empty = False
    for clause in formula:
        if len(clause) > 2:
            raise UsageError(f"2-SAT needs clauses of width <= 2, got {clause}")
        if not clause:
            empty = True
        elif len(clause) == 1:
            a = _node(clause[0])
            adj[a ^ 1].append(a)
        else:
            a, b = _node(clause[0]), _node(clause[1])
            adj[a ^ 1].append(b)
            adj[b ^ 1].append(a)
    return ImplicationGraph(n, tuple(tuple(a) for a in adj), empty)


def _tarjan(adj, roots) -> dict:
    """SCC index per node reachable from ``roots``; indices in reverse topological order."""
    index = {}
    low = {}
    comp = {}
    stack = []
    on_stack = set()
    counter = 0
    n_comp = 0
    for root in roots:
        if root in index:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, i = work[-1]
            succ = adj[v]
            if i < len(succ):
                work[-1] = (v, i + 1)
                w = succ[i]
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, 0))
                elif w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
    return comp


def solve_2sat(n: int, formula: StageFormula) -> Assignment | None:
    """A satisfying assignment of a 2-CNF formula, or None.

    Variables that occur in no clause are set to False.
    """
    graph = implication_graph(n, formula)
    if graph.has_empty_clause:
        return None
    used = sorted({lit.var for clause in formula for lit in clause})
    roots = [2 * v + s for v in used for s in (0, 1)]
    comp = _tarjan(graph.adj, roots)
    values = [False] * n
    for v in used:
        cp, cn = comp[2 * v], comp[2 * v + 1]
        if cp == cn:
            return None
        # earlier-numbered SCCs are later in topological order
        values[v] = cp < cn
    return tuple(values)


def satisfiable_conjunction(n: int, formulas: Iterable[StageFormula]) -> bool:
    return conjunction_model(n, formulas) is not None


def conjunction_model(n: int, formulas: Iterable[StageFormula]) -> Assignment | None:
    combined = tuple(clause for formula in formulas for clause in formula)
    return solve_2sat(n, combined)

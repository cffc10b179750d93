import itertools
import os

import hypothesis
import pytest
from hypothesis import strategies as st

from msat.formula import Literal, MultistageInstance

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# Independent oracles. Nothing here touches the package's solvers.

def all_assignments(n):
    return list(itertools.product((False, True), repeat=n))


def satisfies(f, clauses):
    return all(any(f[l.var] != l.negated for l in c) for c in clauses)


def models(n, clauses):
    return [f for f in all_assignments(n) if satisfies(f, clauses)]


def msat_enumerate(instance):
    """Every solution sequence, by plain product enumeration (tiny sizes only)."""
    n, d = instance.n, instance.d
    out = []
    for seq in itertools.product(all_assignments(n), repeat=instance.tau):
        if not all(satisfies(f, s) for f, s in zip(seq, instance.stages)):
            continue
        if all(sum(a != b for a, b in zip(f, g)) <= d for f, g in zip(seq, seq[1:])):
            out.append(seq)
    return out


def msat_answer(instance):
    """Yes/no by forward layer sets, independent of the package code."""
    n, d = instance.n, instance.d
    reach = set(models(n, instance.stages[0]))
    for stage in instance.stages[1:]:
        nxt = models(n, stage)
        reach = {g for g in nxt if any(sum(a != b for a, b in zip(f, g)) <= d for f in reach)}
    return bool(reach)


def min_true_model(n, clauses):
    weights = [sum(f) for f in models(n, clauses)]
    return min(weights) if weights else None


def has_multicolored_is(graph):
    edges = set(graph.edges)
    for pick in itertools.product(*graph.parts):
        if all((min(u, v), max(u, v)) not in edges for u, v in itertools.combinations(pick, 2)):
            return True
    return False


def has_vertex_cover(graph, k):
    for size in range(k + 1):
        for cover in itertools.combinations(range(graph.num_vertices), size):
            cs = set(cover)
            if all(u in cs or v in cs for u, v in graph.edges):
                return True
    return False


@st.composite
def clauses_st(draw, n, q=2, max_clauses=6):
    count = draw(st.integers(0, max_clauses))
    out = []
    for _ in range(count):
        width = draw(st.integers(1, min(q, n)))
        variables = draw(st.lists(st.integers(0, n - 1), min_size=width, max_size=width))
        signs = draw(st.lists(st.booleans(), min_size=width, max_size=width))
        out.append(tuple(Literal(v, s) for v, s in zip(variables, signs)))
    return tuple(out)


@st.composite
def instances_st(draw, max_n=4, max_tau=3, max_clauses=5, min_tau=1):
    n = draw(st.integers(1, max_n))
    tau = draw(st.integers(min_tau, max_tau))
    d = draw(st.integers(0, n))
    stages = tuple(draw(clauses_st(n, 2, max_clauses)) for _ in range(tau))
    return MultistageInstance(n, stages, d)


@pytest.fixture
def tiny():
    """({x}, ((x), (~x)), d) for a chosen d."""
    def make(d):
        return MultistageInstance(1, (((Literal(0),),), ((Literal(0, True),),)), d)
    return make

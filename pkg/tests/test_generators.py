import itertools
import random

import pytest

from conftest import has_multicolored_is, has_vertex_cover, min_true_model, models, msat_answer
from msat.errors import UsageError
from msat.formula import Literal, MultistageInstance, make_clause, neg, pos
from msat.generators import (
    Graph, and_compose, from_3sat, from_mis, from_vertex_cover, from_weighted_2sat,
    random_instance,
)
from msat.solvers import solve_brute


def random_2cnf(rng, n, m):
    return tuple(make_clause(Literal(v, rng.random() < 0.5)
                             for v in rng.sample(range(n), rng.randint(1, min(2, n))))
                 for _ in range(m))


def random_3cnf(rng, n, m):
    return tuple(tuple(Literal(rng.randrange(n), rng.random() < 0.5) for _ in range(3))
                 for _ in range(m))


def random_graph(rng, nv, p=0.4, classes=None):
    edges = [(u, v) for u, v in itertools.combinations(range(nv), 2) if rng.random() < p]
    parts = None
    if classes:
        order = list(range(nv))
        rng.shuffle(order)
        parts = [order[i::classes] for i in range(classes)]
    return Graph(nv, tuple(edges), parts)


# weighted 2-SAT

def test_wsat_examples():
    assert msat_answer(from_weighted_2sat(1, [(pos(0),)], 1))
    assert not msat_answer(from_weighted_2sat(2, [(pos(0),), (pos(1),)], 1))


def test_wsat_structure():
    inst = from_weighted_2sat(3, [(pos(0), neg(2))], 2)
    assert inst.tau == 2 and inst.d == 2
    assert inst.stages[0] == ((neg(0),), (neg(1),), (neg(2),))


def test_wsat_rejects_wide():
    with pytest.raises(UsageError):
        from_weighted_2sat(3, [(pos(0), pos(1), pos(2))], 1)


@pytest.mark.parametrize("seed", range(60))
def test_wsat_reduction(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    clauses = random_2cnf(rng, n, rng.randint(1, 6))
    k = rng.randint(0, n)
    best = min_true_model(n, clauses)
    expected = best is not None and best <= k
    assert solve_brute(from_weighted_2sat(n, clauses, k)).answer == expected


# 3-SAT

def test_3sat_single_clause():
    inst = from_3sat(3, [(pos(0), pos(1), pos(2))])
    assert inst.tau == 2 and inst.d == 1 and inst.n == 6
    assert inst.clause_counts() == (3, 6)
    # oracle over the 2^(6*2) sequences
    assert msat_answer(inst)


def test_3sat_unsat_source():
    x = pos(0)
    inst = from_3sat(1, [(x, x, x), (~x, ~x, ~x)])
    assert inst.clause_counts() == (3, 6, 3, 6)
    assert not solve_brute(inst).answer


def test_3sat_rejects_other_widths():
    with pytest.raises(UsageError):
        from_3sat(2, [(pos(0), pos(1))])


@pytest.mark.parametrize("seed", range(60))
def test_3sat_reduction(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    clauses = random_3cnf(rng, n, rng.randint(1, 3))
    inst = from_3sat(n, clauses)
    assert inst.d == 1 and inst.tau == 2 * len(clauses)
    assert set(inst.clause_counts()) <= {3, 6}
    assert msat_answer(inst) == bool(models(n, clauses))


# multicolored independent set

def test_mis_examples():
    assert msat_answer(from_mis(Graph(2, (), ((0,), (1,)))))
    assert not msat_answer(from_mis(Graph(2, ((0, 1),), ((0,), (1,)))))


def test_mis_requires_partition():
    with pytest.raises(UsageError):
        from_mis(Graph(2, ()))
    with pytest.raises(UsageError):
        Graph(3, (), ((0,), (0, 1)))


@pytest.mark.parametrize("seed", range(60))
def test_mis_reduction(seed):
    rng = random.Random(seed)
    graph = random_graph(rng, rng.randint(3, 6), classes=3)
    inst = from_mis(graph)
    assert inst.d == graph.num_vertices - 3
    assert msat_answer(inst) == has_multicolored_is(graph)


# AND-composition

def test_and_single_block():
    block = MultistageInstance(2, (((pos(0),),), ((neg(0),), (pos(1),))), 1)
    inst = and_compose([block])
    assert inst.tau == block.tau + block.n
    assert inst.stages[2] == ((pos(0), neg(0)),)
    assert msat_answer(inst) == msat_answer(block)


def test_and_with_no_instance():
    yes_block = MultistageInstance(2, (((pos(0),),), ((neg(0),),)), 1)
    no_block = MultistageInstance(2, (((pos(0),), (pos(1),)), ((neg(0),), (neg(1),))), 1)
    assert msat_answer(yes_block) and not msat_answer(no_block)
    assert not solve_brute(and_compose([yes_block, no_block])).answer


def test_and_rejects_nonuniform():
    a = MultistageInstance(2, ((), ()), 1)
    with pytest.raises(UsageError):
        and_compose([a, MultistageInstance(2, ((), ()), 2)])
    with pytest.raises(UsageError):
        and_compose([a, MultistageInstance(3, ((), ()), 1)])


@pytest.mark.parametrize("seed", range(60))
def test_and_reduction(seed):
    rng = random.Random(seed)
    n, tau, t = rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 3)
    blocks = [random_instance(rng.randrange(10**6), n, tau, 2, 1, rng.randint(0, 3))
              for _ in range(t)]
    inst = and_compose(blocks)
    assert inst.tau == t * (tau + n) and inst.d == 1
    assert msat_answer(inst) == all(msat_answer(b) for b in blocks)


# vertex cover

def test_vc_triangle():
    triangle = Graph(3, ((0, 1), (1, 2), (0, 2)))
    assert has_vertex_cover(triangle, 2) and not has_vertex_cover(triangle, 1)
    assert msat_answer(from_vertex_cover(triangle, 2))
    assert not msat_answer(from_vertex_cover(triangle, 1))


def test_vc_edgeless():
    inst = from_vertex_cover(Graph(3, ()), 0)
    assert inst.tau == 4 and inst.d == 0
    assert msat_answer(inst)


def test_vc_range():
    with pytest.raises(UsageError):
        from_vertex_cover(Graph(2, ()), 3)


@pytest.mark.parametrize("seed", range(60))
def test_vc_reduction(seed):
    rng = random.Random(seed)
    graph = random_graph(rng, rng.randint(1, 5))
    k = rng.randint(0, graph.num_vertices)
    inst = from_vertex_cover(graph, k)
    assert inst.tau == graph.num_vertices + 1 and inst.d == k
    assert solve_brute(inst, max_bits=60).answer == has_vertex_cover(graph, k)


# random family

def test_random_deterministic():
    assert random_instance(7, 5, 3, 2, 1, 4) == random_instance(7, 5, 3, 2, 1, 4)
    assert random_instance(7, 5, 3, 2, 1, 4) != random_instance(8, 5, 3, 2, 1, 4)


def test_random_empty_stages_yes():
    inst = random_instance(1, 4, 3, 2, 0, 0)
    assert all(s == () for s in inst.stages)
    assert msat_answer(inst)


def test_random_seed_sweep_invariants():
    for seed in range(100):
        inst = random_instance(seed, 5, 3, 3, 2, 6)
        assert inst.tau == 3 and inst.d == 2
        for stage in inst.stages:
            assert len(stage) == 6
            for clause in stage:
                assert 1 <= len(clause) <= 3
                assert list(clause) == sorted(set(clause))
                assert len({l.var for l in clause}) == len(clause)


def test_random_width_distribution():
    # width w has probability C(n,w) 2^w / sum: for n=3, q=2 that is 6/18 and 12/18
    inst = random_instance(0, 3, 1, 2, 0, 6000)
    share = sum(len(c) == 1 for c in inst.stages[0]) / 6000
    assert abs(share - 1 / 3) < 0.03


def test_random_infeasible():
    with pytest.raises(UsageError):
        random_instance(0, 0, 1, 2, 0, 1)
    with pytest.raises(UsageError):
        random_instance(0, 2, 1, 2, 3, 1)
    with pytest.raises(UsageError):
        random_instance(0, 2, 0, 2, 0, 1)

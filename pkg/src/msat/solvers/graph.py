"""Layered assignment graph: one layer of satisfying assignments per stage.

Arcs join assignments of consecutive layers at Hamming distance at most
``d``; the instance is a yes-instance iff the source reaches the sink.
Layers are boolean arrays over all ``2^n`` bitmasks and the arcs stay
implicit: for every flip mask of weight ``<= d`` the arc ``x -> x ^ flip``
is tested in one vectorized pass.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from msat.errors import CapacityError
from msat.formula import MultistageInstance, clause_masks, from_mask, var_bit
from msat.solvers.base import default_max_nodes, no, timed, yes


def satisfying_layer(n: int, stage, idx: np.ndarray) -> np.ndarray:
    """Boolean array marking the masks in ``idx`` that satisfy ``stage``."""
    layer = np.ones(idx.shape, dtype=bool)
    for clause in stage:
        p, q = clause_masks(n, clause)
        layer &= ((idx & p) != 0) | ((~idx & q) != 0)
    return layer


def flip_masks(n: int, d: int) -> list:
    """All masks of weight <= d; by weight, then lexicographic variable subsets."""
    out = []
    for j in range(min(d, n) + 1):
        for subset in itertools.combinations(range(n), j):
            out.append(sum(var_bit(n, v) for v in subset))
    return out


@timed
def solve_assignment_graph(instance: MultistageInstance, max_nodes: int | None = None):
    max_nodes = default_max_nodes() if max_nodes is None else max_nodes
    n, tau, d = instance.n, instance.tau, instance.d
    size = 1 << n
    if size > max_nodes:
        raise CapacityError(f"assignment graph layer of 2^{n} exceeds guard {max_nodes}")
    idx = np.arange(size, dtype=np.int64)
    flips = flip_masks(n, d)
    layers = [satisfying_layer(n, stage, idx) for stage in instance.stages]
    layer_sizes = [int(layer.sum()) for layer in layers]

    arcs = layer_sizes[0] + layer_sizes[-1]  # s -> V^1 and V^tau -> t
    max_degree = 0
    reach = layers[0].copy()
    parents = []
    for i in range(tau - 1):
        nxt = layers[i + 1]
        degree = np.zeros(size, dtype=np.int64)
        parent = np.full(size, -1, dtype=np.int64)
        for flip in flips:
            src = idx ^ flip
            degree += nxt[src]
            fresh = nxt & reach[src] & (parent < 0)
            parent[fresh] = src[fresh]
        out_degrees = degree[layers[i]]
        if out_degrees.size:
            max_degree = max(max_degree, int(out_degrees.max()))
        arcs += int(out_degrees.sum())
        if arcs > max_nodes:
            raise CapacityError(f"assignment graph exceeds {max_nodes} arcs at layer {i + 1}")
        parents.append(parent)
        reach = parent >= 0

    stats = dict(
        nodes=sum(layer_sizes) + 2,
        arcs=arcs,
        enumerated=size * tau,
        max_layer=max(layer_sizes),
        max_out_degree=max_degree,
        degree_bound=sum(comb(n, j) for j in range(min(d, n) + 1)),
        layer_sizes=layer_sizes,
    )
    ends = np.flatnonzero(reach)
    if ends.size == 0:
        return no("graph", **stats)
    masks = [int(ends[0])]
    for parent in reversed(parents):
        masks.append(int(parent[masks[-1]]))
    masks.reverse()
    return yes([from_mask(x, n) for x in masks], "graph", **stats)

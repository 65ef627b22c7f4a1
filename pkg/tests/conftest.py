"""Shared generators for randomized tests.

Instances are built deterministically from a caller-provided
``numpy.random.Generator`` so every test controls its own seed.
"""

import numpy as np

from htec import Hypergraph


def random_connected_hypergraph(rng, n_v_max=10, size_max=4, extra_max=3, n_e_max=None):
    """Random hypergraph whose incidence bipartite graph is connected.

    A chain of hyperedges overlapping in one node covers every node, so
    connectivity holds by construction; extra edges (possibly
    singletons) are sprinkled on top.  ``n_e_max`` rejects draws with
    too many hyperedges.
    """
    while True:
        n_v = int(rng.integers(2, n_v_max + 1))
        perm = [int(v) for v in rng.permutation(n_v)]
        edges = []
        i = 0
        while i < n_v - 1:
            size = int(rng.integers(2, size_max + 1))
            chunk = perm[i : i + size]
            if len(chunk) < 2:
                chunk = perm[i - 1 :]
            edges.append(tuple(sorted(chunk)))
            i += len(chunk) - 1
        for _ in range(int(rng.integers(0, extra_max + 1))):
            size = int(rng.integers(1, min(size_max, n_v) + 1))
            members = rng.choice(n_v, size=size, replace=False)
            edges.append(tuple(sorted(int(v) for v in members)))
        if n_e_max is not None and len(edges) > n_e_max:
            continue
        labels = tuple(f"n{i}" for i in range(n_v))
        return Hypergraph(labels, tuple(edges))


def disconnected_hypergraph(rng=None, n_v_max=8):
    """Two hyperedge blocks over disjoint node ranges."""
    if rng is None:
        a, b = 3, 3
    else:
        a = int(rng.integers(2, n_v_max // 2 + 1))
        b = int(rng.integers(2, n_v_max // 2 + 1))
    labels = tuple(f"n{i}" for i in range(a + b))
    edges = (tuple(range(a)), tuple(range(a, a + b)))
    return Hypergraph(labels, edges)


def random_nonneg_vector(rng, n):
    return rng.random(n)

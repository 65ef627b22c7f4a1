"""The two-steps walk tensor of an incidence bipartite graph.

For a bipartite graph with adjacency M, the third-order tensor A has
``a[i][j][k] = 1`` exactly when i~j~k is a walk, i.e. {i,j} and {j,k} are
both edges.  Its action on a vector x,

    (A x^2)_i = sum over j,k of a[i][j][k] * x_j * x_k,

factors as ``M @ (x * (M @ x))``: the inner matvec aggregates each
midpoint's neighborhood, the outer one sums over midpoints.  That form
touches each bipartite edge twice per application, so the tensor is never
materialized for computation.  A dense cube is still available as an
oracle on small instances.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import DimensionError, TooLarge
from .hypergraph import BipartiteGraph

# hard cap for the n^3 dense oracle; above this the cube is refused
DENSE_LIMIT = 64


@dataclass(frozen=True, eq=False)
class TwoStepsOperator:
    """Implicit action of the two-steps tensor.

    Wraps the bipartite adjacency; ``apply`` never forms tensor entries.
    The instance is immutable and safe to share across threads.
    """

    bipartite: BipartiteGraph

    @property
    def n(self):
        return self.bipartite.n

    def apply(self, x):
        """Evaluate ``(A x^2)_i = sum_{j ~ i} x_j * sum_{k ~ j} x_k``.

        Expects a finite vector of length n with nonnegative entries.
        Accumulation runs in ascending neighbor order on both levels
        (CSR indices are sorted at construction), so reruns are
        bit-identical.

        Raises
        ------
        DimensionError
            When ``x`` does not have length n.
        """
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.n,):
            raise DimensionError(f"expected vector of length {self.n}, got {x.shape}")
        m = self.bipartite.adj
        return m @ (x * (m @ x))


@dataclass(frozen=True, eq=False)
class DenseTensor:
    """Fully materialized 0/1 tensor for instances with n <= 64."""

    n: int
    entries: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class PrimitivityReport:
    weakly_irreducible: bool
    positive_diagonal: bool
    weakly_primitive: bool


def materialize_dense(b: BipartiteGraph) -> DenseTensor:
    """Materialize all tensor entries as an n-by-n-by-n 0/1 cube.

    Raises
    ------
    TooLarge
        When n exceeds 64; storage grows as n^3 and the cube is only
        meant to serve as a small-instance oracle.
    """
    if b.n > DENSE_LIMIT:
        raise TooLarge(f"dense tensor refused for n = {b.n} > {DENSE_LIMIT}")
    entries = np.zeros((b.n, b.n, b.n), dtype=np.uint8)
    indptr, indices = b.adj.indptr, b.adj.indices
    for i in range(b.n):
        for j in indices[indptr[i] : indptr[i + 1]]:
            entries[i, j, indices[indptr[j] : indptr[j + 1]]] = 1
    return DenseTensor(n=b.n, entries=entries)


def dense_apply(t: DenseTensor, x) -> np.ndarray:
    """Literal triple-loop evaluation of the tensor action.

    Serves as the oracle for :meth:`TwoStepsOperator.apply`; deliberately
    unvectorized so it mirrors the elementwise definition.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (t.n,):
        raise DimensionError(f"expected vector of length {t.n}, got {x.shape}")
    y = np.zeros(t.n)
    for i in range(t.n):
        acc = 0.0
        for j in range(t.n):
            for k in range(t.n):
                if t.entries[i, j, k]:
                    acc += x[j] * x[k]
        y[i] = acc
    return y


def representative_matrix(b: BipartiteGraph) -> sp.csr_matrix:
    """Count matrix m[i][j] = occurrences of j in two-steps walks from i.

    A walk i~j~k contributes one unit to m[i][j] and one to m[i][k], so
    the rows collect midpoint counts ``M @ diag(deg)`` plus endpoint
    counts ``M @ M``.  Row sums therefore equal twice the walk count
    from each vertex.
    """
    deg = b.degrees().astype(np.float64)
    m = b.adj
    rep = (m @ sp.diags(deg)) + (m @ m)
    rep = sp.csr_matrix(rep)
    rep.sort_indices()
    return rep.astype(np.int64)


def _reaches_all(pattern: sp.csr_matrix) -> bool:
    n = pattern.shape[0]
    visited = np.zeros(n, dtype=bool)
    frontier = np.zeros(n, dtype=bool)
    frontier[0] = True
    while frontier.any():
        visited |= frontier
        frontier = (pattern @ frontier.astype(np.float64) > 0) & ~visited
    return bool(visited.all())


def check_weak_primitivity(b: BipartiteGraph) -> PrimitivityReport:
    """Check weak irreducibility and primitivity via the count matrix.

    The tensor is weakly irreducible exactly when the directed graph of
    nonzero count-matrix entries is strongly connected, checked by one
    forward and one backward reachability sweep from vertex 0.  A
    strictly positive diagonal then upgrades irreducible to primitive:
    every vertex with a neighbor k sits on the backtracking walk i~k~i,
    so any connected bipartite graph passes.  A single vertex with no
    edges reports all-false.
    """
    rep = representative_matrix(b)
    diag_positive = bool((rep.diagonal() > 0).all())
    if b.n == 1:
        irreducible = bool(rep[0, 0] > 0)
    else:
        irreducible = _reaches_all(rep) and _reaches_all(sp.csr_matrix(rep.T))
    return PrimitivityReport(
        weakly_irreducible=irreducible,
        positive_diagonal=diag_positive,
        weakly_primitive=irreducible and diag_positive,
    )

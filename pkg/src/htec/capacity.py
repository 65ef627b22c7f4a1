"""Expansion capacities and their convergence to the centrality vector.

The depth-t expansion tree of a vertex branches once per two-steps walk,
pairing a left subtree at the walk's midpoint with a right subtree at its
endpoint.  Its geometric capacity is 1 at depth 0 and otherwise

    C_t(i) = sqrt( sum over walks i~j~k of C_{t-1}(j) * C_{t-1}(k) ),

which vectorizes to ``C_t = sqrt(A C_{t-1}^2)`` with A the two-steps
tensor, exactly the solver's unnormalized iterate from the all-ones
start.  Normalized capacities therefore converge to the centrality
vector, and this module checks that limit.

The linear capacity ``L_t = adjacency @ L_{t-1}`` is the plain-graph
analogue.  Its normalized limit is the adjacency Perron vector only on
non-bipartite connected graphs; on bipartite graphs, incidence graphs of
hypergraphs included, the power sequence oscillates between the two
sides.  That failure is the reason the two-steps recursion above is the
right object for hypergraphs.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument, TooLarge
from .hypergraph import BipartiteGraph
from .solver import SolverConfig, solve_bipartite
from .tensor import TwoStepsOperator

# literal tree enumeration refuses beyond this depth or logical node count
TREE_DEPTH_LIMIT = 3
TREE_NODE_BUDGET = 10**6


@dataclass(frozen=True, eq=False)
class CapacityVector:
    """Capacity values of every bipartite vertex at one depth."""

    depth: int
    values: np.ndarray


@dataclass(frozen=True, eq=False)
class ExpansionTree:
    """Materialized expansion tree.

    ``children`` holds one (left, right) subtree pair per two-steps walk
    from the root, ordered by (midpoint, endpoint) ascending; both
    subtrees have depth one less.  Structurally identical subtrees may
    be shared.
    """

    root: int
    depth: int
    children: tuple


def geometric_capacity(b: BipartiteGraph, t: int) -> CapacityVector:
    """Depth-t geometric capacity of every vertex, by the vectorized recursion."""
    if t < 0:
        raise InvalidArgument("depth must be nonnegative")
    op = TwoStepsOperator(b)
    values = np.ones(b.n)
    for _ in range(t):
        values = np.sqrt(op.apply(values))
    return CapacityVector(depth=t, values=values)


def linear_capacity(adjacency, t: int) -> CapacityVector:
    """Depth-t linear capacity ``adjacency^t @ ones`` of a plain graph.

    ``adjacency`` is a symmetric 0/1 matrix, dense or sparse.  See the
    module notes for why the normalized limit exists only on
    non-bipartite connected graphs.
    """
    if t < 0:
        raise InvalidArgument("depth must be nonnegative")
    n = adjacency.shape[0]
    values = np.ones(n)
    for _ in range(t):
        values = adjacency @ values
    return CapacityVector(depth=t, values=np.asarray(values, dtype=np.float64))


def _tree_node_counts(b: BipartiteGraph, t: int) -> np.ndarray:
    # logical tree size: N_0 = 1, N_t = 1 + sum over walks of (N_{t-1} at
    # midpoint + N_{t-1} at endpoint); shared subtrees do not shrink this
    m = b.adj
    deg = b.degrees().astype(np.float64)
    counts = np.ones(b.n)
    for _ in range(t):
        counts = 1.0 + m @ (deg * counts) + m @ (m @ counts)
    return counts


def enumerate_expansion_tree(b: BipartiteGraph, root: int, t: int) -> ExpansionTree:
    """Literally materialize the depth-t expansion tree of ``root``.

    This is the bounded oracle behind :func:`geometric_capacity`; tree
    size grows like (walk count)^t, so enumeration is refused beyond
    depth 3 or a logical node count of 10^6.

    Raises
    ------
    TooLarge
        When the depth or node budget is exceeded.
    InvalidArgument
        When ``root`` is not a vertex id.
    """
    if not 0 <= root < b.n:
        raise InvalidArgument(f"root {root} outside [0, {b.n})")
    if t < 0:
        raise InvalidArgument("depth must be nonnegative")
    if t > TREE_DEPTH_LIMIT:
        raise TooLarge(f"tree depth {t} above literal-oracle limit {TREE_DEPTH_LIMIT}")
    if t > 0 and _tree_node_counts(b, t)[root] > TREE_NODE_BUDGET:
        raise TooLarge(f"expansion tree of {root} at depth {t} exceeds node budget")

    indptr, indices = b.adj.indptr, b.adj.indices
    memo = {}

    def build(vertex, depth):
        key = (vertex, depth)
        if key in memo:
            return memo[key]
        if depth == 0:
            tree = ExpansionTree(root=vertex, depth=0, children=())
        else:
            pairs = []
            for j in indices[indptr[vertex] : indptr[vertex + 1]]:
                left = build(int(j), depth - 1)
                for k in indices[indptr[j] : indptr[j + 1]]:
                    pairs.append((left, build(int(k), depth - 1)))
            tree = ExpansionTree(root=vertex, depth=depth, children=tuple(pairs))
        memo[key] = tree
        return tree

    return build(root, t)


def tree_capacity(tree: ExpansionTree) -> float:
    """Evaluate a tree structurally: leaves are 1, internal nodes take
    the square root of the sum of left * right over their child pairs.

    Must reproduce the :func:`geometric_capacity` entry of the tree's
    root at its depth.
    """
    memo = {}

    def value(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if node.depth == 0:
            result = 1.0
        else:
            result = float(
                np.sqrt(sum(value(left) * value(right) for left, right in node.children))
            )
        memo[key] = result
        return result

    return value(tree)


def capacity_convergence(b: BipartiteGraph, t_max: int, cfg: SolverConfig = None) -> np.ndarray:
    """Gaps ``max |C_t / ||C_t|| - x|`` against the converged centrality.

    Returns the gap for every depth 0..t_max inclusive.  The recursion
    is 1-homogeneous, so each iterate is renormalized in place to keep
    magnitudes bounded; the normalized sequence is unchanged.

    Raises whatever :func:`htec.solver.solve_bipartite` raises on this
    graph (never connected, never converged).
    """
    if t_max < 1:
        raise InvalidArgument("t_max must be at least 1")
    result = solve_bipartite(b, cfg=cfg)
    x = np.concatenate([result.x_nodes, result.x_edges])
    op = TwoStepsOperator(b)
    u = np.ones(b.n) / np.sqrt(b.n)
    gaps = [np.abs(u - x).max()]
    for _ in range(t_max):
        u = np.sqrt(op.apply(u))
        u = u / np.linalg.norm(u)
        gaps.append(np.abs(u - x).max())
    return np.array(gaps)

"""Power iteration for the two-steps tensor eigenpair.

The centrality vector is the unique positive x with ``A x^2 = rho * x^[2]``
on a connected incidence bipartite graph (squares taken entrywise).  The
iteration below keeps a certified bracket around rho: with y = A x^2 and
ratios r_i = y_i / x_i^2, min(r) and max(r) bound the spectral radius from
below and above, the bracket tightens monotonically, and the update
``x <- sqrt(y) / ||sqrt(y)||`` drives the ratios together.  Convergence of
the bracket certifies the eigenpair; the reported rho is the midpoint.

Node scores occupy the first ``n_v`` entries of the eigenvector and
hyperedge scores the rest, both reported under unit Euclidean norm of the
concatenated vector.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument, NoConvergence, NotConnected
from .hypergraph import BipartiteGraph, Hypergraph, build_incidence_bipartite, is_connected
from .tensor import TwoStepsOperator


@dataclass(frozen=True)
class SolverConfig:
    """Stopping controls for the power iteration.

    ``tol`` bounds the relative bracket gap (upper - lower) / lower at
    which iteration stops; ``record_trace`` keeps the per-iteration
    bracket for diagnostics.
    """

    tol: float = 1e-10
    max_iter: int = 1000
    record_trace: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise InvalidArgument("tol must be positive")
        if self.max_iter < 1:
            raise InvalidArgument("max_iter must be at least 1")


@dataclass(frozen=True, eq=False)
class CentralityResult:
    """Converged eigenpair with bracket diagnostics.

    The concatenation of ``x_nodes`` and ``x_edges`` has unit 2-norm and
    strictly positive entries; ``lower <= rho <= upper`` and
    ``residual_inf`` is the worst-case eigen equation violation.
    """

    rho: float
    x_nodes: np.ndarray = field(repr=False)
    x_edges: np.ndarray = field(repr=False)
    iterations: int
    lower: float
    upper: float
    residual_inf: float
    trace: tuple = None


def solve_bipartite(b: BipartiteGraph, cfg: SolverConfig = None, start=None) -> CentralityResult:
    """Run the bracketed power iteration on an incidence bipartite graph.

    Parameters
    ----------
    b : BipartiteGraph
        Must be connected; connectivity guarantees a unique positive
        eigenvector.
    cfg : SolverConfig, optional
    start : array, optional
        Strictly positive start vector of length n, normalized
        internally.  The default is uniform.  Any positive start
        converges to the same eigenvector; the option exists so tests
        can verify that.

    Raises
    ------
    NotConnected
        When the bipartite graph is not connected.
    NoConvergence
        When the bracket gap has not closed within ``max_iter``
        iterations; carries the last bounds.
    """
    if cfg is None:
        cfg = SolverConfig()
    if not is_connected(b):
        raise NotConnected("incidence bipartite graph is not connected")
    op = TwoStepsOperator(b)
    if start is None:
        x = np.full(b.n, 1.0 / np.sqrt(b.n))
    else:
        x = np.asarray(start, dtype=np.float64)
        if x.shape != (b.n,):
            raise InvalidArgument(f"start vector must have length {b.n}")
        if not (x > 0).all():
            raise InvalidArgument("start vector must be strictly positive")
        x = x / np.linalg.norm(x)

    trace = [] if cfg.record_trace else None
    lower = upper = np.nan
    for iteration in range(1, cfg.max_iter + 1):
        y = op.apply(x)
        ratio = y / (x * x)
        lower, upper = ratio.min(), ratio.max()
        if trace is not None:
            trace.append((float(lower), float(upper)))
        s = np.sqrt(y)
        x = s / np.linalg.norm(s)
        if upper - lower <= cfg.tol * lower:
            break
    else:
        raise NoConvergence(
            f"bracket gap {upper - lower:.3e} above tol after {cfg.max_iter} iterations",
            lower=float(lower),
            upper=float(upper),
            iterations=cfg.max_iter,
        )

    rho = 0.5 * (lower + upper)
    residual = residual_inf(op, x, rho)
    return CentralityResult(
        rho=float(rho),
        x_nodes=x[: b.n_v],
        x_edges=x[b.n_v :],
        iterations=iteration,
        lower=float(lower),
        upper=float(upper),
        residual_inf=float(residual),
        trace=tuple(trace) if trace is not None else None,
    )


def htec(h: Hypergraph, cfg: SolverConfig = None, start=None) -> CentralityResult:
    """Node and hyperedge centrality of a connected hypergraph.

    Builds the incidence bipartite graph and solves for the positive
    eigenvector of its two-steps tensor; see :func:`solve_bipartite` for
    the iteration, options, and errors.
    """
    return solve_bipartite(build_incidence_bipartite(h), cfg=cfg, start=start)


def residual_inf(op: TwoStepsOperator, x, rho: float) -> float:
    """Worst-case violation ``max_i |(A x^2)_i - rho * x_i^2|``.

    ``x`` must be strictly positive with unit 2-norm (to 1e-12); a zero
    residual certifies an exact eigenpair.

    Raises
    ------
    InvalidArgument
        On a nonpositive entry or a norm away from 1.
    """
    x = np.asarray(x, dtype=np.float64)
    if not (x > 0).all():
        raise InvalidArgument("eigenvector candidate must be strictly positive")
    if abs(np.linalg.norm(x) - 1.0) > 1e-12:
        raise InvalidArgument("eigenvector candidate must have unit 2-norm")
    return float(np.abs(op.apply(x) - rho * x * x).max())


def first_iteration_identities(h: Hypergraph):
    """Walk counts from the all-ones vector next to their structural values.

    Applying the tensor to the all-ones vector counts two-steps walks:
    a node sees the total size of its hyperedges, a hyperedge the total
    degree of its nodes.  Returns ``(walk_values, structural_values)``;
    the two arrays must agree exactly, which makes this a built-in
    self-test of the operator plumbing.

    Raises
    ------
    NotConnected
        When the incidence bipartite graph is not connected.
    """
    b = build_incidence_bipartite(h)
    if not is_connected(b):
        raise NotConnected("incidence bipartite graph is not connected")
    walk = TwoStepsOperator(b).apply(np.ones(b.n))
    sizes = h.edge_sizes().astype(np.float64)
    deg = h.degrees().astype(np.float64)
    structural = np.concatenate([b.incidence @ sizes, b.incidence.T @ deg])
    return walk, structural

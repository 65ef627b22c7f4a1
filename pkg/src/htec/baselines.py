"""Comparison centralities on the node/hyperedge incidence structure.

Three alternating fixed-point models over the n_v-by-n_e incidence
matrix B, iterated from uniform positive starts with unit 2-norm
renormalization after every update:

* Linear:  x <- B y,  y <- B^T x.  The fixed point is the leading
  singular pair of B, i.e. eigenvector centrality of the clique
  expansion on the node side and of the line graph on the edge side.
* Max:  x <- (B y^[p])^[1/p] with p > 1, y as in Linear.  The p-mean
  approaches the maximum, so a node is scored by the single strongest
  hyperedge it belongs to.
* LogExp:  x as in Linear,  y <- exp(B^T log x), i.e. the edge score is
  the product of its member node scores before normalization, so one
  weak node drags the whole hyperedge down.

These three mappings are this package's fixed definitions of the models;
they were chosen for exactly the qualitative properties listed above.

The product semantics of LogExp spreads scores over an enormous dynamic
range.  Two guards keep the iteration inside float64: the log-domain sum
is shifted by its maximum before exponentiation, which keeps the leading
entries exact up to normalization, and anything that still underflows is
floored at the smallest positive normal float, so outputs stay strictly
positive and the floored entries tie at the bottom of the ranking
exactly as their true near-zero scores would.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument, NoConvergence, NotConnected
from .hypergraph import Hypergraph, build_incidence_bipartite, is_connected

VARIANTS = ("linear", "max", "logexp")


@dataclass(frozen=True)
class MappingModel:
    """Choice of baseline mapping.

    ``p`` applies to the max variant only and must exceed 1.
    ``geometric_mean`` switches LogExp from the plain product to the
    size-th root of the product, for sensitivity analysis.
    """

    variant: str
    p: float = 10.0
    geometric_mean: bool = False

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise InvalidArgument(f"unknown variant {self.variant!r}, expected one of {VARIANTS}")
        if self.variant == "max" and not self.p > 1:
            raise InvalidArgument("max variant needs p > 1")


@dataclass(frozen=True, eq=False)
class BaselineResult:
    """Fixed point of one baseline mapping, both vectors unit 2-norm."""

    x_nodes: np.ndarray = field(repr=False)
    y_edges: np.ndarray = field(repr=False)
    iterations: int = 0
    converged: bool = False
    model: MappingModel = None


def baseline_centrality(
    h: Hypergraph, model: MappingModel, tol: float = 1e-8, max_iter: int = 1000
) -> BaselineResult:
    """Iterate one baseline mapping to its fixed point.

    Updates are sequential: the node update uses the previous edge
    vector, the edge update the fresh node vector.  Iteration stops when
    the relative infinity-norm change of both vectors is at most ``tol``.

    Raises
    ------
    NotConnected
        When the incidence bipartite graph is not connected.
    NoConvergence
        When ``max_iter`` passes without meeting the tolerance.
    """
    if not tol > 0:
        raise InvalidArgument("tol must be positive")
    b = build_incidence_bipartite(h)
    if not is_connected(b):
        raise NotConnected("incidence bipartite graph is not connected")
    inc = b.incidence
    sizes = h.edge_sizes().astype(np.float64)

    x = np.full(b.n_v, 1.0 / np.sqrt(b.n_v))
    y = np.full(b.n_e, 1.0 / np.sqrt(b.n_e))
    for iteration in range(1, max_iter + 1):
        x_old, y_old = x, y
        if model.variant == "max":
            # factor out the peak so (y/m)^p cannot overflow
            m = y.max()
            x = ((inc @ ((y / m) ** model.p)) ** (1.0 / model.p)) * m
        else:
            x = inc @ y
        x = x / np.linalg.norm(x)
        if model.variant == "logexp":
            s = inc.T @ np.log(x)
            if model.geometric_mean:
                s = s / sizes
            y = np.maximum(np.exp(s - s.max()), np.finfo(np.float64).tiny)
        else:
            y = inc.T @ x
        y = y / np.linalg.norm(y)
        delta = max(
            np.abs(x - x_old).max() / np.abs(x_old).max(),
            np.abs(y - y_old).max() / np.abs(y_old).max(),
        )
        if delta <= tol:
            return BaselineResult(
                x_nodes=x, y_edges=y, iterations=iteration, converged=True, model=model
            )
    raise NoConvergence(
        f"{model.variant} mapping not converged after {max_iter} iterations",
        iterations=max_iter,
    )


def linear_fixed_point_check(h: Hypergraph, result: BaselineResult):
    """Certify a Linear result as the leading singular pair of B.

    Returns ``(residual_nodes, residual_edges)``, the infinity norms of
    ``(B B^T) x - sigma^2 x`` and ``(B^T B) y - sigma^2 y`` with sigma^2
    the respective Rayleigh quotients.

    Raises
    ------
    InvalidArgument
        When the result does not come from the linear variant.
    """
    if result.model is None or result.model.variant != "linear":
        raise InvalidArgument("fixed point check applies to the linear variant only")
    inc = build_incidence_bipartite(h).incidence
    x, y = result.x_nodes, result.y_edges
    gram_x = inc @ (inc.T @ x)
    sigma2_x = float(x @ gram_x)
    gram_y = inc.T @ (inc @ y)
    sigma2_y = float(y @ gram_y)
    return (
        float(np.abs(gram_x - sigma2_x * x).max()),
        float(np.abs(gram_y - sigma2_y * y).max()),
    )

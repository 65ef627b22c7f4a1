"""Hypergraph data model, parsers, generators, and connectivity helpers.

A hypergraph is stored as a list of node labels plus a list of hyperedges,
each hyperedge a strictly increasing tuple of node ids.  Centrality
computations run on the incidence bipartite graph: one vertex per node,
one vertex per hyperedge, an undirected edge whenever a node belongs to a
hyperedge.  Node vertices occupy indices ``[0, n_v)`` and hyperedge
vertices ``[n_v, n_v + n_e)``.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from .errors import InvalidArgument, ParseError


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph.

    Parameters
    ----------
    node_labels : tuple of str
        Label of node ``i`` at position ``i``; labels are pairwise distinct.
    hyperedges : tuple of tuple of int
        Each hyperedge is a strictly increasing tuple of node ids.
    edge_labels : tuple of str, optional
        Label of hyperedge ``e`` at position ``e``.
    """

    node_labels: tuple
    hyperedges: tuple
    edge_labels: tuple = None

    def __post_init__(self):
        n_v = len(self.node_labels)
        if len(set(self.node_labels)) != n_v:
            raise InvalidArgument("node labels must be pairwise distinct")
        for e, members in enumerate(self.hyperedges):
            if len(members) == 0:
                raise InvalidArgument(f"hyperedge {e} is empty")
            if any(members[i] >= members[i + 1] for i in range(len(members) - 1)):
                raise InvalidArgument(
                    f"hyperedge {e} is not strictly increasing: {members}"
                )
            if members[0] < 0 or members[-1] >= n_v:
                raise InvalidArgument(f"hyperedge {e} references unknown node ids")
        if self.edge_labels is not None and len(self.edge_labels) != len(self.hyperedges):
            raise InvalidArgument("edge_labels length must match hyperedges")

    @property
    def num_nodes(self):
        return len(self.node_labels)

    @property
    def num_edges(self):
        return len(self.hyperedges)

    def degrees(self):
        """Node degree vector d(v) = number of hyperedges containing v."""
        d = np.zeros(self.num_nodes, dtype=np.int64)
        for members in self.hyperedges:
            d[list(members)] += 1
        return d

    def edge_sizes(self):
        """Hyperedge cardinality vector."""
        return np.array([len(members) for members in self.hyperedges], dtype=np.int64)

    def to_edgelist_text(self):
        """Serialize to hyperedge-list text, one line per hyperedge.

        Labels must not contain whitespace or commas for the round trip
        through :func:`parse_hyperedge_list` to be faithful.
        """
        lines = []
        for members in self.hyperedges:
            lines.append(" ".join(self.node_labels[v] for v in members))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """Incidence bipartite graph of a hypergraph.

    ``adj`` is the symmetric n-by-n CSR adjacency over all bipartite
    vertices and ``incidence`` the n_v-by-n_e node/hyperedge incidence
    matrix; both share the same nonzero pattern up to layout.
    """

    n_v: int
    n_e: int
    n: int
    adj: sp.csr_matrix = field(repr=False)
    incidence: sp.csr_matrix = field(repr=False)

    def degrees(self):
        """Degree of every bipartite vertex (nodes first, then hyperedges)."""
        return np.diff(self.adj.indptr)


@dataclass(frozen=True)
class DatasetStats:
    num_nodes: int
    num_hyperedges: int
    avg_cardinality: float
    max_cardinality: int


@dataclass
class ParseCounters:
    """Mutable tally of anomalies seen while parsing."""

    duplicate_labels: int = 0
    duplicate_edges: int = 0


def _read_text(source):
    if hasattr(source, "read"):
        return source.read()
    return source


def parse_hyperedge_list(text, dedupe_edges=False, counters=None):
    """Parse hyperedge-list text into a Hypergraph.

    One hyperedge per line, node labels separated by commas and/or
    whitespace.  Lines starting with ``#`` and blank lines are skipped.
    Labels are interned to dense ids in first-appearance order.

    Parameters
    ----------
    text : str or file-like
        UTF-8 hyperedge-list content.
    dedupe_edges : bool
        Drop hyperedges whose node set was already seen.  The default
        keeps exact duplicates (multi-set semantics).
    counters : ParseCounters, optional
        Incremented in place: one per duplicate label occurrence dropped
        within a line, one per duplicate hyperedge dropped.

    Raises
    ------
    ParseError
        On empty input (no hyperedges) or a line with only separators.
    """
    if counters is None:
        counters = ParseCounters()
    labels = []
    index = {}
    edges = []
    seen = set()
    for lineno, raw in enumerate(_read_text(text).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t for t in line.replace(",", " ").split() if t]
        if not tokens:
            raise ParseError(f"line {lineno}: no labels, only separators")
        members = []
        for tok in tokens:
            if tok not in index:
                index[tok] = len(labels)
                labels.append(tok)
            v = index[tok]
            if v in members:
                counters.duplicate_labels += 1
            else:
                members.append(v)
        edge = tuple(sorted(members))
        if dedupe_edges:
            if edge in seen:
                counters.duplicate_edges += 1
                continue
            seen.add(edge)
        edges.append(edge)
    if not edges:
        raise ParseError("no hyperedges in input")
    return Hypergraph(tuple(labels), tuple(edges))


def _as_int_list(source, name):
    data = _read_text(source)
    if isinstance(data, str):
        try:
            return [int(tok) for tok in data.split()]
        except ValueError as exc:
            raise ParseError(f"{name}: non-integer entry") from exc
    return [int(v) for v in data]


def parse_simplex_format(nverts, simplices, labels=None, dedupe_edges=False):
    """Parse the two-file simplex layout into a Hypergraph.

    ``nverts`` lists the cardinality of each hyperedge; ``simplices`` is
    the concatenation of all hyperedges as 1-based node ids.  Hyperedge k
    takes the next ``nverts[k]`` ids.  An optional ``labels`` stream names
    node k+1 on line k.  Unreferenced node ids are kept; prune them later
    with :func:`largest_component`.

    Raises
    ------
    ParseError
        When the nverts total disagrees with the simplices length, an id
        is not positive, or the labels stream is shorter than the largest
        referenced id.
    """
    sizes = _as_int_list(nverts, "nverts")
    flat = _as_int_list(simplices, "simplices")
    if sum(sizes) != len(flat):
        raise ParseError(
            f"nverts sums to {sum(sizes)} but simplices holds {len(flat)} ids"
        )
    if any(s < 1 for s in sizes):
        raise ParseError("nverts entries must be at least 1")
    if any(v <= 0 for v in flat):
        raise ParseError("simplex node ids are 1-based and must be positive")

    if labels is not None:
        text = _read_text(labels)
        if isinstance(text, str):
            node_labels = [ln.strip() for ln in text.splitlines() if ln.strip()]
        else:
            node_labels = [str(ln).strip() for ln in text]
    else:
        node_labels = None

    n_v = max(flat, default=0)
    if node_labels is not None:
        if len(node_labels) < n_v:
            raise ParseError(
                f"labels stream names {len(node_labels)} nodes, ids reach {n_v}"
            )
        n_v = len(node_labels)
    else:
        node_labels = [str(i + 1) for i in range(n_v)]

    edges = []
    seen = set()
    pos = 0
    for size in sizes:
        chunk = flat[pos : pos + size]
        pos += size
        edge = tuple(sorted(set(v - 1 for v in chunk)))
        if dedupe_edges:
            if edge in seen:
                continue
            seen.add(edge)
        edges.append(edge)
    return Hypergraph(tuple(node_labels), tuple(edges))


def build_incidence_bipartite(h: Hypergraph) -> BipartiteGraph:
    """Build the incidence bipartite graph of ``h``.

    Node ``v`` is adjacent to bipartite vertex ``n_v + e`` exactly when
    ``v`` belongs to hyperedge ``e``.  Adjacency lists come out sorted so
    later traversals are deterministic.  Vertices of degree zero are
    allowed here; the connectivity gate rejects them downstream.
    """
    n_v, n_e = h.num_nodes, h.num_edges
    rows = []
    cols = []
    for e, members in enumerate(h.hyperedges):
        rows.extend(members)
        cols.extend([e] * len(members))
    data = np.ones(len(rows), dtype=np.float64)
    incidence = sp.csr_matrix(
        (data, (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
        shape=(n_v, n_e),
    )
    incidence.sum_duplicates()
    adj = sp.bmat(
        [[None, incidence], [incidence.T, None]], format="csr", dtype=np.float64
    )
    adj.sort_indices()
    incidence.sort_indices()
    return BipartiteGraph(n_v=n_v, n_e=n_e, n=n_v + n_e, adj=adj, incidence=incidence)


def is_connected(b: BipartiteGraph) -> bool:
    """True when breadth-first search from vertex 0 reaches all vertices.

    The search runs level-synchronously: each sweep multiplies the
    current frontier by the adjacency, which visits exactly the next
    BFS layer.
    """
    if b.n < 1:
        raise InvalidArgument("empty bipartite graph")
    visited = np.zeros(b.n, dtype=bool)
    frontier = np.zeros(b.n, dtype=bool)
    frontier[0] = True
    while frontier.any():
        visited |= frontier
        frontier = (b.adj @ frontier.astype(np.float64) > 0) & ~visited
    return bool(visited.all())


def largest_component(h: Hypergraph) -> Hypergraph:
    """Restrict ``h`` to the largest connected component of its bipartite graph.

    Ties on component size are broken by the smallest minimum vertex id.
    Node and hyperedge ids are re-densified in their original relative
    order; labels follow their nodes.
    """
    if h.num_nodes < 1:
        raise InvalidArgument("hypergraph has no nodes")
    b = build_incidence_bipartite(h)
    _, comp = csgraph.connected_components(b.adj, directed=False)
    sizes = np.bincount(comp)
    best_size = sizes.max()
    candidates = np.flatnonzero(sizes == best_size)
    # labels are assigned by first occurrence, so the candidate with the
    # smallest first vertex index is simply the smallest label
    best = int(candidates.min())

    keep_nodes = [v for v in range(h.num_nodes) if comp[v] == best]
    remap = {v: i for i, v in enumerate(keep_nodes)}
    keep_edges = [e for e in range(h.num_edges) if comp[h.num_nodes + e] == best]
    new_edges = tuple(
        tuple(remap[v] for v in h.hyperedges[e]) for e in keep_edges
    )
    new_labels = tuple(h.node_labels[v] for v in keep_nodes)
    new_edge_labels = None
    if h.edge_labels is not None:
        new_edge_labels = tuple(h.edge_labels[e] for e in keep_edges)
    return Hypergraph(new_labels, new_edges, new_edge_labels)


def generate_sunflower(sizes) -> Hypergraph:
    """Sunflower hypergraph: one hub node shared by every hyperedge.

    Hyperedge k contains the hub plus ``sizes[k] - 1`` fresh leaf nodes,
    leaves numbered consecutively in edge order.  Node labels are
    ``v1`` (hub), ``v2``, ... and edge labels ``e1``, ``e2``, ...

    Raises
    ------
    InvalidArgument
        When any size is below 2 (an edge needs the hub and a leaf).
    """
    sizes = list(sizes)
    if not sizes:
        raise InvalidArgument("at least one hyperedge size is required")
    if any(s < 2 for s in sizes):
        raise InvalidArgument("sunflower hyperedge sizes must be at least 2")
    edges = []
    next_leaf = 1
    for s in sizes:
        edges.append(tuple([0] + list(range(next_leaf, next_leaf + s - 1))))
        next_leaf += s - 1
    node_labels = tuple(f"v{i + 1}" for i in range(next_leaf))
    edge_labels = tuple(f"e{k + 1}" for k in range(len(sizes)))
    return Hypergraph(node_labels, tuple(edges), edge_labels)


def stats(h: Hypergraph) -> DatasetStats:
    """Size statistics: node count, hyperedge count, mean and max cardinality."""
    if h.num_edges < 1:
        raise InvalidArgument("stats need at least one hyperedge")
    sizes = h.edge_sizes()
    return DatasetStats(
        num_nodes=h.num_nodes,
        num_hyperedges=h.num_edges,
        avg_cardinality=float(sizes.sum()) / h.num_edges,
        max_cardinality=int(sizes.max()),
    )

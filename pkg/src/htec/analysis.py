"""Rank-comparison analytics between centrality score columns.

Scores live in a ScoreTable (one row per item, one named column per
method).  Correlations are Kendall tau-b and Spearman rho, both
tie-aware: centrality vectors on structured instances contain exact
ties, for example leaves of the same hyperedge.  Top-k curves restrict
both columns to the reference method's k best items and report the
correlations as k grows.

Everywhere a ranking is materialized, ties are broken deterministically:
descending score, then ascending id.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import rankdata

from .errors import InvalidArgument, UndefinedCorrelation


@dataclass(frozen=True, eq=False)
class ScoreTable:
    """Aligned score columns over one id set.

    ``ids`` are unique item ids, ``labels`` optional display names, and
    ``columns`` maps method name to a score vector over the rows.
    """

    ids: tuple
    columns: dict = field(repr=False)
    labels: tuple = None

    def __post_init__(self):
        n = len(self.ids)
        if len(set(self.ids)) != n:
            raise InvalidArgument("ids must be unique")
        if self.labels is not None and len(self.labels) != n:
            raise InvalidArgument("labels length must match ids")
        for name, col in self.columns.items():
            if len(col) != n:
                raise InvalidArgument(f"column {name!r} has length {len(col)}, expected {n}")

    def column(self, name):
        if name not in self.columns:
            raise InvalidArgument(f"unknown column {name!r}")
        return np.asarray(self.columns[name], dtype=np.float64)

    def label_of(self, row):
        if self.labels is not None:
            return self.labels[row]
        return str(self.ids[row])


@dataclass(frozen=True, eq=False)
class CorrelationCurve:
    """Per-k correlation values between two columns on top-k sets."""

    ks: tuple
    kendall: np.ndarray
    spearman: np.ndarray
    reference_column: str


def _pair(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise InvalidArgument("vectors must share one length")
    if len(a) < 2:
        raise InvalidArgument("correlation needs at least two items")
    # a constant argument zeroes a tie-correction factor, so the
    # coefficient is 0/0 regardless of the other argument
    if (a == a[0]).all() or (b == b[0]).all():
        raise UndefinedCorrelation("correlation undefined for a constant vector")
    return a, b


def _merge_count_inversions(values):
    # bottom-up merge sort counting strictly descending pairs
    n = len(values)
    src = list(values)
    dst = [None] * n
    count = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if src[j] < src[i]:
                    dst[k] = src[j]
                    j += 1
                    count += mid - i
                else:
                    dst[k] = src[i]
                    i += 1
                k += 1
            while i < mid:
                dst[k] = src[i]
                i += 1
                k += 1
            while j < hi:
                dst[k] = src[j]
                j += 1
                k += 1
        src, dst = dst, src
        width *= 2
    return count


def _tie_pairs(run_breaks, n):
    # run_breaks: boolean array marking where sorted adjacent entries differ
    bounds = np.concatenate(([0], np.flatnonzero(run_breaks) + 1, [n]))
    lengths = np.diff(bounds)
    return int((lengths * (lengths - 1) // 2).sum())


def kendall_tau(a, b) -> float:
    """Tie-corrected Kendall coefficient (tau-b) between two score vectors.

    Counted exactly: after sorting rows by (a, b), discordant pairs are
    the strict inversions of the b sequence, found by merge counting in
    O(n log n); tie corrections come from run lengths.  When both
    corrected pair counts coincide the denominator is used directly
    instead of through a square root, so perfectly concordant inputs
    with matching tie patterns score exactly 1.
    """
    a, b = _pair(a, b)
    n = len(a)
    order = np.lexsort((b, a))
    a_sorted = a[order]
    b_sorted = b[order]
    n0 = n * (n - 1) // 2
    n1 = _tie_pairs(np.diff(a_sorted) != 0, n)
    n2 = _tie_pairs(np.diff(np.sort(b)) != 0, n)
    joint = _tie_pairs((np.diff(a_sorted) != 0) | (np.diff(b_sorted) != 0), n)
    discordant = _merge_count_inversions(b_sorted.tolist())
    numerator = n0 - n1 - n2 + joint - 2 * discordant
    d1, d2 = n0 - n1, n0 - n2
    if d1 == d2:
        denominator = float(d1)
    else:
        denominator = math.sqrt(float(d1)) * math.sqrt(float(d2))
    return max(-1.0, min(1.0, numerator / denominator))


def spearman_rho(a, b) -> float:
    """Spearman coefficient: Pearson correlation of mid-ranks.

    Ties get their average rank.  The same denominator shortcut as in
    :func:`kendall_tau` applies when both rank vectors have equal
    variance, so identical rankings score exactly 1.
    """
    a, b = _pair(a, b)
    ra = rankdata(a, method="average")
    rb = rankdata(b, method="average")
    da = ra - ra.mean()
    db = rb - rb.mean()
    numerator = float(da @ db)
    va = float(da @ da)
    vb = float(db @ db)
    if va == vb:
        denominator = va
    else:
        denominator = math.sqrt(va) * math.sqrt(vb)
    return max(-1.0, min(1.0, numerator / denominator))


def _ranked_rows(table: ScoreTable, col: str) -> np.ndarray:
    scores = table.column(col)
    ids = np.asarray(table.ids)
    return np.lexsort((ids, -scores))


def topk_curve(table: ScoreTable, ref_col: str, other_col: str, ks, mode: str = "reference") -> CorrelationCurve:
    """Correlations of two columns restricted to top-k item sets.

    For each k the item set is the reference column's k best rows
    (descending score, ties by ascending id); with ``mode="union"`` it
    is the union of both columns' top-k rows instead.  A k whose
    restricted columns leave either side constant has no defined
    coefficient; such entries are nan rather than an error, so one
    degenerate slice does not void the rest of the curve.

    Raises
    ------
    InvalidArgument
        On an unknown column, a k below 2 or above the row count, or a
        ks sequence that is not strictly increasing.
    """
    if mode not in ("reference", "union"):
        raise InvalidArgument(f"unknown top-k mode {mode!r}")
    ks = [int(k) for k in ks]
    if any(k < 2 or k > len(table.ids) for k in ks):
        raise InvalidArgument("each k must lie in [2, number of items]")
    if any(ks[i] >= ks[i + 1] for i in range(len(ks) - 1)):
        raise InvalidArgument("ks must be strictly increasing")
    ref = table.column(ref_col)
    other = table.column(other_col)
    by_ref = _ranked_rows(table, ref_col)
    by_other = _ranked_rows(table, other_col)

    kendall = []
    spearman = []
    for k in ks:
        if mode == "reference":
            rows = by_ref[:k]
        else:
            rows = np.union1d(by_ref[:k], by_other[:k])
        a, b = ref[rows], other[rows]
        if (a == a[0]).all() or (b == b[0]).all():
            kendall.append(np.nan)
            spearman.append(np.nan)
        else:
            kendall.append(kendall_tau(a, b))
            spearman.append(spearman_rho(a, b))
    return CorrelationCurve(
        ks=tuple(ks),
        kendall=np.array(kendall),
        spearman=np.array(spearman),
        reference_column=ref_col,
    )


def top_labels(table: ScoreTable, col: str, k: int):
    """Labels of the k best rows of a column, descending, ties by ascending id."""
    if k < 0 or k > len(table.ids):
        raise InvalidArgument(f"k must lie in [0, {len(table.ids)}]")
    rows = _ranked_rows(table, col)[:k]
    return tuple(table.label_of(int(r)) for r in rows)


def scatter_export(table: ScoreTable, x_col: str, y_col: str):
    """CSV rows ``id,label,x,y`` at full precision, ordered by id.

    Floats are written with their shortest round-trip representation, so
    parsing the rows back recovers the two columns exactly.
    """
    xs = table.column(x_col)
    ys = table.column(y_col)
    order = np.argsort(np.asarray(table.ids), kind="stable")
    rows = ["id,label,x,y"]
    for r in order:
        r = int(r)
        rows.append(f"{table.ids[r]},{table.label_of(r)},{float(xs[r])!r},{float(ys[r])!r}")
    return rows

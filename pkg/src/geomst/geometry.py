"""Point storage and the symmetric distance functions that define edge weights.

Every distance in the package funnels through one vectorized row-vs-block
routine, so a given unordered pair always produces the same 64-bit value no
matter which code path asks for it (dense kernel, oracle, scalar API, any
subset). numpy reduces each row independently of the block it sits in, and
all five metrics are written as bitwise-commutative formulas (differences
are squared or absed, products commute), which together make the exact
edge-set equalities asserted by the test suite possible.
"""

from __future__ import annotations

import numpy as np

from .errors import DataError, MetricDomainError, UsageError
from .stats import RunStats

METRIC_NAMES = (
    "euclidean",
    "squared_euclidean",
    "manhattan",
    "chebyshev",
    "cosine_distance",
)


class PointSet:
    """Immutable set of n points in R^d with global vertex ids.

    coords is an (n, d) float64 C-contiguous read-only array. ids defaults to
    0..n-1 and must be distinct non-negative integers; they are the vertex
    names every edge in the package carries.
    """

    __slots__ = ("_coords", "_ids", "_norms", "_units")

    def __init__(self, coords, ids=None):
        arr = np.array(coords, dtype=np.float64, order="C", copy=True)
        if arr.ndim != 2:
            raise UsageError(f"coords must be two-dimensional, got shape {arr.shape}")
        if arr.shape[1] < 1:
            raise UsageError("points need at least one dimension")
        finite_rows = np.isfinite(arr).all(axis=1)
        if not finite_rows.all():
            bad = int(np.flatnonzero(~finite_rows)[0])
            raise DataError(f"non-finite coordinate in point {bad}")
        if ids is None:
            id_arr = np.arange(arr.shape[0], dtype=np.int64)
        else:
            id_arr = np.array(ids, dtype=np.int64, copy=True)
            if id_arr.shape != (arr.shape[0],):
                raise UsageError("ids must be one id per point")
            if id_arr.size and id_arr.min() < 0:
                raise UsageError("ids must be non-negative")
            if np.unique(id_arr).size != id_arr.size:
                raise UsageError("ids must be pairwise distinct")
        arr.setflags(write=False)
        id_arr.setflags(write=False)
        self._coords = arr
        self._ids = id_arr
        self._norms = None
        self._units = None

    @property
    def count(self) -> int:
        return self._coords.shape[0]

    @property
    def dim(self) -> int:
        return self._coords.shape[1]

    @property
    def coords(self) -> np.ndarray:
        return self._coords

    @property
    def ids(self) -> np.ndarray:
        return self._ids

    @property
    def norms(self) -> np.ndarray:
        """Euclidean norm of every point, computed once and cached."""
        if self._norms is None:
            sq = self._coords * self._coords
            norms = np.sqrt(np.sum(sq, axis=1))
            norms.setflags(write=False)
            self._norms = norms
        return self._norms

    @property
    def unit_coords(self) -> np.ndarray:
        """Rows scaled to unit norm; zero-norm rows stay zero.

        Zero rows are never evaluated: metric domain checks raise before any
        cosine evaluation can touch them.
        """
        if self._units is None:
            norms = self.norms
            divisor = np.where(norms == 0.0, 1.0, norms)
            units = self._coords / divisor[:, None]
            units.setflags(write=False)
            self._units = units
        return self._units

    def __repr__(self) -> str:
        return f"PointSet(count={self.count}, dim={self.dim})"


def subset_indices(points: PointSet, subset) -> np.ndarray:
    """Validate a row-index subset of a PointSet and return it as int64."""
    idx = np.asarray(subset, dtype=np.int64)
    if idx.ndim != 1:
        raise UsageError(f"subset must be a flat index sequence, got shape {idx.shape}")
    if idx.size:
        if idx.min() < 0 or idx.max() >= points.count:
            raise UsageError(f"subset index out of range for {points.count} points")
        if np.unique(idx).size != idx.size:
            raise UsageError("subset indices must be distinct")
    return idx


class Metric:
    """One of the shipped symmetric distance functions, selected by name.

    Only symmetry is promised (and relied upon downstream); none of the MST
    machinery assumes the triangle inequality or non-negativity, although all
    shipped metrics happen to be non-negative.
    """

    __slots__ = ("kind",)

    def __init__(self, kind: str):
        if kind not in METRIC_NAMES:
            raise UsageError(f"unknown metric {kind!r}; choose from {', '.join(METRIC_NAMES)}")
        self.kind = kind

    def __repr__(self) -> str:
        return f"Metric({self.kind!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Metric) and other.kind == self.kind

    def __hash__(self) -> int:
        return hash((Metric, self.kind))

    def prepared(self, points: PointSet) -> np.ndarray:
        """The coordinate matrix kernels should slice rows from.

        cosine_distance works on unit-normalized rows (its value is half the
        squared euclidean distance of the normalized vectors, which equals
        one minus the cosine similarity and is exactly zero for identical
        inputs); every other metric works on the raw coordinates.
        """
        if self.kind == "cosine_distance":
            return points.unit_coords
        return points.coords

    def check_domain(self, points: PointSet, indices: np.ndarray | None = None) -> None:
        """Raise MetricDomainError if any participating point is out of domain."""
        if self.kind != "cosine_distance":
            return
        norms = points.norms if indices is None else points.norms[indices]
        zero = np.flatnonzero(norms == 0.0)
        if zero.size:
            ids = points.ids if indices is None else points.ids[indices]
            raise MetricDomainError(
                f"cosine_distance is undefined for the zero vector (point id {int(ids[zero[0]])})"
            )

    def block(self, a: np.ndarray, rows: np.ndarray) -> np.ndarray:
        """Distances from one prepared row to a block of prepared rows.

        This is the single evaluation routine behind every distance in the
        package; see the module docstring for why that matters.
        """
        kind = self.kind
        if kind == "euclidean":
            diff = rows - a
            diff *= diff
            return np.sqrt(np.sum(diff, axis=1))
        if kind == "squared_euclidean":
            diff = rows - a
            diff *= diff
            return np.sum(diff, axis=1)
        if kind == "manhattan":
            return np.sum(np.abs(rows - a), axis=1)
        if kind == "chebyshev":
            return np.max(np.abs(rows - a), axis=1)
        # cosine_distance, on unit rows
        diff = rows - a
        diff *= diff
        return 0.5 * np.sum(diff, axis=1)


def distance(metric: Metric, a, b, stats: RunStats | None = None) -> float:
    """Metric value for one pair of raw vectors.

    Increments stats.distance_evals by exactly 1 when a stats accumulator is
    supplied. Raises UsageError on dimension mismatch and MetricDomainError
    for a zero-norm vector under cosine_distance.
    """
    av = np.asarray(a, dtype=np.float64)
    bv = np.asarray(b, dtype=np.float64)
    if av.ndim != 1 or bv.ndim != 1:
        raise UsageError("distance expects flat vectors")
    if av.shape != bv.shape:
        raise UsageError(f"dimension mismatch: {av.shape[0]} vs {bv.shape[0]}")
    if av.size == 0:
        raise UsageError("vectors need at least one dimension")
    if metric.kind == "cosine_distance":
        na = float(np.sqrt(np.sum(av * av)))
        nb = float(np.sqrt(np.sum(bv * bv)))
        if na == 0.0 or nb == 0.0:
            raise MetricDomainError("cosine_distance is undefined for the zero vector")
        av = av / na
        bv = bv / nb
    value = float(metric.block(av, bv.reshape(1, -1))[0])
    if stats is not None:
        stats.distance_evals += 1
    return value

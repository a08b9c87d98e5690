"""Brute-force ground truth: materialize every pair, then Kruskal.

Deliberately a different algorithm from the dense kernel (which is Prim and
never stores the candidate edges), sharing only the edge total order, so
agreement between the two is evidence rather than tautology. Being slow is
fine here; a cap guards against accidentally materializing huge graphs.
"""

from __future__ import annotations

import numpy as np

from .errors import UsageError
from .geometry import Metric, PointSet, subset_indices
from .graph import Edge, EdgeList, kruskal

DEFAULT_MAX_POINTS = 2048


def oracle_mst(
    points: PointSet,
    metric: Metric,
    subset=None,
    max_points: int = DEFAULT_MAX_POINTS,
) -> EdgeList:
    """MSF of the explicit complete graph on points[subset], sorted by edge_key."""
    if subset is None:
        idx = np.arange(points.count, dtype=np.int64)
    else:
        idx = subset_indices(points, subset)
    m = int(idx.size)
    if m > max_points:
        raise UsageError(
            f"oracle refuses {m} points (cap {max_points}); pass max_points to override"
        )
    if m <= 1:
        return EdgeList([], points.count)
    metric.check_domain(points, idx)
    mat = metric.prepared(points)[idx]
    gid = points.ids[idx]
    edges = []
    for a in range(m - 1):
        weights = metric.block(mat[a], mat[a + 1 :])
        ga = int(gid[a])
        edges.extend(
            Edge(ga, int(gb), float(wab)) for gb, wab in zip(gid[a + 1 :], weights)
        )
    return kruskal(edges, int(points.ids.max()) + 1)


def induced_mst(points: PointSet, metric: Metric, subset, max_points: int = DEFAULT_MAX_POINTS) -> EdgeList:
    """Oracle MSF of the complete graph restricted to subset, global ids preserved."""
    return oracle_mst(points, metric, subset=subset_indices(points, subset), max_points=max_points)


def check_substructure(points: PointSet, metric: Metric, subset) -> bool:
    """True iff every whole-graph MSF edge inside subset appears in the subset's own MSF.

    A False return is a failed optimal-substructure property, never expected
    behavior under the tie-break total order.
    """
    idx = subset_indices(points, subset)
    whole = oracle_mst(points, metric)
    inside = set(points.ids[idx].tolist())
    restricted = [e for e in whole.edges if e.u in inside and e.v in inside]
    sub = set(induced_mst(points, metric, idx).edges)
    return all(e in sub for e in restricted)

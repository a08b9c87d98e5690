"""Exact MST of the implicit complete graph on a point set (the dense kernel).

Prim with a nearest-outside-tree array: no heap, no materialized adjacency,
and every unordered pair is evaluated exactly once, so the distance counter
is m*(m-1)/2 by construction. Weight ties fall back to the canonical (u, v)
pair, both when updating a frontier candidate and when selecting the next
vertex, which keeps the result identical to Kruskal under the same total
order.
"""

from __future__ import annotations

import numpy as np

from .geometry import Metric, PointSet, subset_indices
from .graph import Edge, EdgeList, edge_key
from .stats import RunStats


def dense_mst(
    points: PointSet,
    metric: Metric,
    stats: RunStats | None = None,
    subset=None,
) -> EdgeList:
    """MST edges, carrying global ids, of the complete graph on points[subset].

    subset is a sequence of row indices (the whole set when omitted); the
    kernel copies those rows into a private working array, so callers can
    share one immutable PointSet across concurrent invocations.
    """
    if subset is None:
        idx = np.arange(points.count, dtype=np.int64)
    else:
        idx = subset_indices(points, subset)
    m = int(idx.size)
    if m <= 1:
        return EdgeList([], points.count)
    metric.check_domain(points, idx)
    work = metric.prepared(points)[idx]
    gid = points.ids[idx].copy()

    # Rows are physically reordered as vertices join the tree: positions
    # [0, t) are in-tree, [t, m) are outside, so the frontier is always a
    # contiguous slice and per-row distance bits never depend on position.
    best_w = np.empty(m, dtype=np.float64)
    best_from = np.empty(m, dtype=np.int64)
    best_w[1:] = metric.block(work[0], work[1:])
    best_from[1:] = gid[0]
    evals = m - 1

    out = []
    for t in range(1, m):
        q = t + _argmin_candidate(best_w[t:], best_from[t:], gid[t:])
        out.append(Edge(int(best_from[q]), int(gid[q]), float(best_w[q])))
        if q != t:
            work[[t, q]] = work[[q, t]]
            gid[[t, q]] = gid[[q, t]]
            best_w[[t, q]] = best_w[[q, t]]
            best_from[[t, q]] = best_from[[q, t]]
        rest = m - t - 1
        if rest:
            fresh = metric.block(work[t], work[t + 1 :])
            evals += rest
            tail_w = best_w[t + 1 :]
            improve = fresh < tail_w
            ties = fresh == tail_w
            if ties.any():
                g_new = gid[t]
                gx = gid[t + 1 :]
                bf = best_from[t + 1 :]
                u_new = np.minimum(g_new, gx)
                v_new = np.maximum(g_new, gx)
                u_old = np.minimum(bf, gx)
                v_old = np.maximum(bf, gx)
                improve |= ties & ((u_new < u_old) | ((u_new == u_old) & (v_new < v_old)))
            tail_w[improve] = fresh[improve]
            best_from[t + 1 :][improve] = gid[t]

    if stats is not None:
        stats.distance_evals += evals
    out.sort(key=edge_key)
    return EdgeList(out, points.count)


def _argmin_candidate(w: np.ndarray, frm: np.ndarray, gx: np.ndarray) -> int:
    """Index of the frontier candidate minimal under (w, u, v)."""
    q = int(np.argmin(w))
    ties = np.flatnonzero(w == w[q])
    if ties.size == 1:
        return q
    u = np.minimum(frm[ties], gx[ties])
    v = np.maximum(frm[ties], gx[ties])
    return int(ties[np.lexsort((v, u))[0]])

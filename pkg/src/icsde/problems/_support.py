"""Shared helpers for benchmark-suite construction and PF sampling."""

from __future__ import annotations

import numpy as np

from ..indicators import non_dominated_mask


def strict_front(points: np.ndarray) -> np.ndarray:
    """Non-dominated, duplicate-free subset sorted lexicographically.

    For 2-objective sets the result is strictly increasing in f1 and
    strictly decreasing in f2.
    """
    points = np.asarray(points, dtype=float)
    points = points[non_dominated_mask(points)]
    points = np.unique(points, axis=0)  # also sorts lexicographically
    if points.shape[1] == 2:
        keep = np.ones(len(points), dtype=bool)
        best_f2 = np.inf
        for i in range(len(points)):
            if points[i, 1] < best_f2:
                best_f2 = points[i, 1]
            else:
                keep[i] = False
        points = points[keep]
    return points


def subsample(front: np.ndarray, k: int) -> np.ndarray:
    """Pick k points evenly (by sorted index, endpoints included)."""
    front = np.asarray(front, dtype=float)
    if k >= len(front):
        return front.copy()
    idx = np.unique(np.round(np.linspace(0, len(front) - 1, k)).astype(int))
    return front[idx]


def simplex_lattice(m: int, min_points: int) -> np.ndarray:
    """Das-Dennis simplex-lattice weight vectors with at least min_points rows."""
    from math import comb

    h = 1
    while comb(h + m - 1, m - 1) < min_points:
        h += 1
    rows = []

    def rec(prefix, left, depth):
        if depth == m - 1:
            rows.append(prefix + [left])
            return
        for v in range(left + 1):
            rec(prefix + [v], left - v, depth + 1)

    rec([], h, 0)
    return np.array(rows, dtype=float) / h


def sphere_directions(m: int, min_points: int) -> np.ndarray:
    """Unit-sphere directions in the positive orthant (normalized lattice)."""
    dirs = simplex_lattice(m, min_points)
    norms = np.linalg.norm(dirs, axis=1, keepdims=True)
    return dirs / norms

"""Hypervolume evaluation pipeline.

Objective vectors are normalized against a reference front (ideal point
clamped to the origin, nadir from the front, headroom scale 1.1), points
falling outside the unit box are discarded, and the exact hypervolume of
the remaining non-dominated set is computed against the all-ones reference
point: a direct sweep for m=2, a sweep over f3 slabs for m=3, and a
WFG-style recursion for m=5.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class UnsupportedDimension(ValueError):
    pass


def non_dominated_mask(F: np.ndarray) -> np.ndarray:
    """Boolean mask of the non-dominated rows (minimization).

    Duplicates are kept (they dominate each other only weakly).
    """
    F = np.asarray(F, dtype=float)
    n = F.shape[0]
    mask = np.ones(n, dtype=bool)
    for i in range(n):
        if not mask[i]:
            continue
        le = np.all(F <= F[i], axis=1)
        lt = np.any(F < F[i], axis=1)
        dominators = le & lt
        if dominators.any():
            mask[i] = False
    return mask


def _hv2(points: np.ndarray) -> float:
    """Exact 2-D hypervolume w.r.t. reference point (1, 1), sweep on f1."""
    pts = points[np.lexsort((points[:, 1], points[:, 0]))]
    total = 0.0
    best_f2 = 1.0
    for f1, f2 in pts:
        if f2 < best_f2:
            total += (1.0 - f1) * (best_f2 - f2)
            best_f2 = f2
    return total


def _staircase_area(stairs: list) -> float:
    """Area dominated (w.r.t. (1,1)) by a staircase sorted by f1 asc, f2 desc."""
    area = 0.0
    for i, (x, y) in enumerate(stairs):
        x_next = stairs[i + 1][0] if i + 1 < len(stairs) else 1.0
        area += (x_next - x) * (1.0 - y)
    return area


def _hv3(points: np.ndarray) -> float:
    """Exact 3-D hypervolume w.r.t. (1,1,1): sweep slabs along f3.

    Maintains the 2-D staircase of points seen so far; each slab between
    consecutive f3 levels contributes staircase-area x slab height.
    """
    pts = points[np.argsort(points[:, 2])]
    stairs: list = []  # (f1, f2) sorted by f1 ascending, f2 strictly descending
    total = 0.0
    for i in range(len(pts)):
        a, b, z = pts[i]
        dominated = any(x <= a and y <= b for x, y in stairs)
        if not dominated:
            stairs = [(x, y) for x, y in stairs if not (a <= x and b <= y)]
            stairs.append((a, b))
            stairs.sort()
        top = pts[i + 1, 2] if i + 1 < len(pts) else 1.0
        if top > z:
            total += _staircase_area(stairs) * (top - z)
    return total


def _box_volume(p: np.ndarray, ref: np.ndarray) -> float:
    return float(np.prod(ref - p))


def _hv_wfg(points: np.ndarray, ref: np.ndarray) -> float:
    """Exact hypervolume by the WFG exclusive-volume recursion."""
    pts = points[points[:, 0].argsort()]
    total = 0.0
    for i in range(len(pts)):
        total += _exclusive_wfg(pts[i], pts[i + 1 :], ref)
    return total


def _exclusive_wfg(p: np.ndarray, s: np.ndarray, ref: np.ndarray) -> float:
    v = _box_volume(p, ref)
    if len(s) == 0:
        return v
    limited = np.maximum(s, p)
    limited = limited[non_dominated_mask(limited)]
    if len(limited) == 1:
        return v - _box_volume(limited[0], ref)
    return v - _hv_wfg(limited, ref)


def hypervolume_unit(points: np.ndarray, m: int) -> float:
    """Exact HV of already-normalized points in the unit box, ref (1,...,1)."""
    points = np.asarray(points, dtype=float).reshape(-1, m)
    if len(points) == 0:
        return 0.0
    points = points[non_dominated_mask(points)]
    if m == 2:
        return _hv2(points)
    if m == 3:
        return _hv3(points)
    if m == 5:
        return _hv_wfg(points, np.ones(m))
    raise UnsupportedDimension(f"hypervolume supports m in {{2, 3, 5}}, got {m}")


@dataclass
class HvConfig:
    """Normalization protocol for hypervolume evaluation.

    The ideal point is the componentwise minimum of the reference front,
    clamped to be at most zero; the nadir is the front's componentwise
    maximum. Points are mapped through
    (f - ideal) / ((nadir - ideal) * scale) and anything outside the unit
    box is discarded before the exact computation against (1, ..., 1).
    """

    reference_front: np.ndarray
    scale: float = 1.1
    clamp_ideal_to_origin: bool = True
    ideal: np.ndarray = field(init=False)
    nadir: np.ndarray = field(init=False)

    def __post_init__(self):
        front = np.asarray(self.reference_front, dtype=float)
        if front.ndim != 2 or front.shape[0] == 0:
            raise ValueError("reference_front must be a non-empty 2-D array")
        if self.scale <= 1.0:
            raise ValueError("scale must exceed 1")
        self.reference_front = front
        ideal = front.min(axis=0)
        if self.clamp_ideal_to_origin:
            ideal = np.minimum(ideal, 0.0)
        self.ideal = ideal
        self.nadir = front.max(axis=0)

    @property
    def m(self) -> int:
        return self.reference_front.shape[1]

    def normalize(self, points: np.ndarray) -> np.ndarray:
        """Map raw objective vectors into the unit box, dropping outliers."""
        points = np.asarray(points, dtype=float).reshape(-1, self.m)
        span = (self.nadir - self.ideal) * self.scale
        span = np.where(span > 0, span, 1.0)
        normed = (points - self.ideal) / span
        normed = normed[~np.any(normed >= 1.0, axis=1)]
        return np.maximum(normed, 0.0)


def hv(points: np.ndarray, cfg: HvConfig) -> float:
    """Normalized exact hypervolume of a point set (0.0 for an empty set)."""
    points = np.asarray(points, dtype=float)
    if points.size == 0:
        return 0.0
    if not np.all(np.isfinite(points)):
        raise ValueError("hv: non-finite objective values")
    normed = cfg.normalize(points)
    if len(normed) == 0:
        return 0.0
    return hypervolume_unit(normed, cfg.m)

"""Fitness assignment: sum-of-objectives scalarization, shift-based density,
and the constrained fitness built on the lexicographic (CV, SOB) ranking.

The core idea: members are ordered by constraint violation first and
sum-of-normalized-objectives second; each member's fitness derives from its
distance to the nearest better-ranked peer after shifting that peer onto it
in every coordinate where the peer is ahead. Crowded or dominated members
score low, the best-ranked member scores 1.0.

Two distinct scalings are involved, and keeping them apart matters. The SOB
ranking uses per-objective min-max normalization so no objective dominates
the ordering by range alone. The shift distances, however, are measured in
the original objective geometry (rescaled only by a single population-wide
scalar so the result is unit-free): flattening every objective to [0, 1]
before measuring distances erases the selection pressure along whichever
objective carries the largest spread, which is exactly the direction an
unconverged population still needs to travel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ContractViolation, normalize_objectives
from .kernels import min_shifted_distances


def sob(norm_row: np.ndarray) -> float:
    """Sum of normalized objectives (unit-weight scalarization)."""
    return float(np.asarray(norm_row, dtype=float).sum())


def shift(reference: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Shifted location of `target` as seen from `reference`.

    Every coordinate where the target beats the reference is moved onto the
    reference's coordinate; other coordinates are left untouched.
    """
    reference = np.asarray(reference, dtype=float)
    target = np.asarray(target, dtype=float)
    if reference.shape != target.shape:
        raise ContractViolation("shift: length mismatch")
    return np.where(target < reference, reference, target)


def isde_fitness(pop_norm: np.ndarray) -> np.ndarray:
    """Raw shift-based density of each member against all other members.

    Returns, per member x, the minimum Euclidean distance from x to the
    shifted location of every other member (unclamped).
    """
    pop_norm = np.asarray(pop_norm, dtype=float)
    n = pop_norm.shape[0]
    if n < 2:
        raise ContractViolation("isde_fitness needs at least two members")
    out = np.empty(n)
    for i in range(n):
        diff = np.maximum(pop_norm - pop_norm[i], 0.0)
        d2 = (diff * diff).sum(axis=1)
        d2[i] = np.inf
        out[i] = np.sqrt(d2.min())
    return out


@dataclass
class RankedIndex:
    """Stable lexicographic (cv, sob) ordering of a population.

    The ordering is a total order: exact (cv, sob) ties are broken by input
    position, and every member's better-ranked peers are simply the members
    at earlier sort positions. Treating tied members as mutually
    incomparable instead would hand an entire tied-best group the maximal
    fitness at once, letting duplicated members flood the survivor set; in
    the total order the second copy of a duplicate sits at shift distance 0
    from the first and is culled, which is what preserves diversity.

    `order[p]` is the original index of the member at rank position p.
    `group_start[p]` is the position of the first member sharing position
    p's exact (cv, sob) key (exposed for introspection; the fitness path
    compares against the full prefix, not the key group).
    """

    order: np.ndarray
    group_start: np.ndarray
    key_cv: np.ndarray
    key_sob: np.ndarray


def rank_cv_sob(cvs: np.ndarray, sobs: np.ndarray) -> RankedIndex:
    """Sort members by (cv ascending, sob ascending), stable on input order."""
    cvs = np.asarray(cvs, dtype=float)
    sobs = np.asarray(sobs, dtype=float)
    if cvs.size == 0:
        raise ContractViolation("rank_cv_sob: empty population")
    order = np.lexsort((np.arange(cvs.size), sobs, cvs))
    cv_o = cvs[order]
    sob_o = sobs[order]
    group_start = np.empty(cvs.size, dtype=np.intp)
    group_start[0] = 0
    for p in range(1, cvs.size):
        if cv_o[p] == cv_o[p - 1] and sob_o[p] == sob_o[p - 1]:
            group_start[p] = group_start[p - 1]
        else:
            group_start[p] = p
    return RankedIndex(order=order, group_start=group_start, key_cv=cv_o, key_sob=sob_o)


def icsde_fitness(F: np.ndarray, cvs: np.ndarray) -> np.ndarray:
    """Constrained fitness vector, aligned with the input member order.

    Pipeline: normalize objectives over the whole population and compute
    SOB from the normalized rows; rank lexicographically by (cv, sob);
    measure each member's minimum shifted distance d to the members at
    earlier rank positions in the original objective geometry, divided by the
    Euclidean norm of the population's per-objective ranges so the result
    is invariant to uniform rescaling; map d monotonically into [0, 1) via
    d / (1 + d). The rank-1 member (and any member without strictly better
    peers) gets exactly 1.0, the unique maximum.

    The map d / (1 + d) is strictly increasing, so any selection scheme
    that only compares fitness values behaves identically to one fed the
    raw distances. Dominated-by-better members keep fitness exactly 0.

    Ignoring constraints entirely is the same computation with all cv set
    to zero — callers wanting the unconstrained variant pass zeros.
    """
    F = np.asarray(F, dtype=float)
    cvs = np.asarray(cvs, dtype=float)
    if F.ndim != 2 or F.shape[0] == 0:
        raise ContractViolation("icsde_fitness: empty population")
    if F.shape[0] != cvs.size:
        raise ContractViolation("icsde_fitness: cv/objective length mismatch")
    norm = normalize_objectives(F)
    sobs = norm.sum(axis=1)
    scale = float(np.linalg.norm(F.max(axis=0) - F.min(axis=0)))
    scaled = F / scale if scale > 0.0 else F
    ranked = rank_cv_sob(cvs, sobs)
    scaled_ordered = np.ascontiguousarray(scaled[ranked.order])
    prefix = np.arange(F.shape[0], dtype=np.intp)
    dist = min_shifted_distances(scaled_ordered, prefix)
    with np.errstate(invalid="ignore"):
        fit_ordered = np.where(np.isinf(dist), 1.0, dist / (1.0 + dist))
    fitness = np.empty_like(fit_ordered)
    fitness[ranked.order] = fit_ordered
    return fitness

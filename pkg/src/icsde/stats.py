"""Nonparametric comparison tooling: paired Wilcoxon signed-rank marks
('+'/'-'/'=') and Friedman average ranks over instances-by-algorithms
mean-quality tables.
"""

from __future__ import annotations

import numpy as np

from .core import ContractViolation


def _average_ranks(values: np.ndarray) -> np.ndarray:
    """Average (midrank) ranks, 1-based, ascending in value."""
    values = np.asarray(values, dtype=float)
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values))
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _exact_signed_rank_p(ranks: np.ndarray, w: float) -> float:
    """Two-sided p-value of the signed-rank statistic by exact enumeration.

    Works on doubled ranks (integers even with midrank ties) via polynomial
    convolution over all 2^n sign assignments.
    """
    doubled = np.round(2.0 * ranks).astype(int)
    total = doubled.sum()
    # counts[s] = number of sign assignments with doubled statistic s
    counts = np.zeros(total + 1)
    counts[0] = 1.0
    for r in doubled:
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[: counts.size - r]
        counts = counts + shifted
    w2 = int(round(2.0 * w))
    lo = min(w2, total - w2)
    p = (counts[: lo + 1].sum() + counts[total - lo :].sum()) / counts.sum()
    return min(1.0, float(p))


def wilcoxon_signed_rank(a, b, alpha: float = 0.05) -> str:
    """Paired two-sided signed-rank decision mark.

    '+' : a significantly larger, '-' : significantly smaller, '=' : no
    significant difference at the given alpha. Zero differences are
    dropped; tied absolute differences receive average ranks. Exact null
    distribution for n <= 25, normal approximation with tie correction and
    continuity correction beyond.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ContractViolation("wilcoxon: samples must be equal-length vectors")
    if not 0.0 < alpha < 1.0:
        raise ContractViolation("alpha must lie in (0, 1)")
    d = a - b
    d = d[d != 0.0]
    n = d.size
    if n == 0:
        return "="
    ranks = _average_ranks(np.abs(d))
    w_plus = float(ranks[d > 0].sum())
    if n <= 25:
        p = _exact_signed_rank_p(ranks, w_plus)
    else:
        mean = n * (n + 1) / 4.0
        var = n * (n + 1) * (2 * n + 1) / 24.0
        # tie correction
        _, tie_counts = np.unique(ranks, return_counts=True)
        var -= np.sum(tie_counts**3 - tie_counts) / 48.0
        if var <= 0:
            return "="
        z = (w_plus - mean - 0.5 * np.sign(w_plus - mean)) / np.sqrt(var)
        p = 2.0 * _norm_sf(abs(z))
    if p >= alpha:
        return "="
    return "+" if np.median(d) > 0 else "-"


def _norm_sf(z: float) -> float:
    from math import erfc, sqrt

    return 0.5 * erfc(z / sqrt(2.0))


def friedman_ranks(table) -> np.ndarray:
    """Average rank per algorithm over an instances x algorithms table.

    Larger values get larger ranks; equal values share the average rank.
    Returns the column means (one average rank per algorithm).
    """
    table = np.asarray(table, dtype=float)
    if table.ndim != 2 or table.shape[0] < 1 or table.shape[1] < 2:
        raise ContractViolation("friedman_ranks needs >= 1 row and >= 2 columns")
    ranks = np.vstack([_average_ranks(row) for row in table])
    return ranks.mean(axis=0)

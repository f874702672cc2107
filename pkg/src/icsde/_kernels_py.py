"""Pure-numpy fallback for the compiled fitness kernel."""

import numpy as np


def min_shifted_distances(norm: np.ndarray, start: np.ndarray) -> np.ndarray:
    """Minimum shifted distance of each rank-ordered row to the rows ahead.

    Mirrors the compiled kernel: shift clamps every coordinate of a peer
    that beats row i onto row i, so the distance is the norm of the
    positive part of (peer - row). Rows with no better-ranked peer
    (start[i] == 0) get +inf.
    """
    n = norm.shape[0]
    out = np.empty(n)
    for i in range(n):
        s = start[i]
        if s == 0:
            out[i] = np.inf
            continue
        diff = np.maximum(norm[:s] - norm[i], 0.0)
        out[i] = np.sqrt((diff * diff).sum(axis=1).min())
    return out

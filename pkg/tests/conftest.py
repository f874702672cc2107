"""Shared test helpers: independently written oracles kept deliberately
simple (plain Python loops) so they cannot share bugs with the vectorized
implementations they check.
"""

from __future__ import annotations

import math

import numpy as np
import pytest


def oracle_fitness(F, cvs) -> list:
    """Brute-force re-implementation of the constrained fitness assignment.

    Semantics under test: per-objective min-max normalization feeds the
    sum-of-objectives ranking key only; members are totally ordered by
    (cv, sob, input position); each member's density is the minimum
    shifted Euclidean distance to the members at earlier positions,
    measured on raw objectives divided by the Euclidean norm of the
    per-objective ranges; fitness = d / (1 + d), with the first-ranked
    member (empty comparison set) at exactly 1.0.
    """
    F = [[float(v) for v in row] for row in np.asarray(F, dtype=float)]
    cvs = [float(c) for c in np.asarray(cvs, dtype=float)]
    n, m = len(F), len(F[0])
    mins = [min(row[j] for row in F) for j in range(m)]
    maxs = [max(row[j] for row in F) for j in range(m)]
    sobs = []
    for row in F:
        s = 0.0
        for j in range(m):
            if maxs[j] > mins[j]:
                s += (row[j] - mins[j]) / (maxs[j] - mins[j])
        sobs.append(s)
    scale = math.sqrt(sum((maxs[j] - mins[j]) ** 2 for j in range(m)))
    if scale <= 0.0:
        scale = 1.0
    order = sorted(range(n), key=lambda i: (cvs[i], sobs[i], i))
    fit = [0.0] * n
    for pos, i in enumerate(order):
        if pos == 0:
            fit[i] = 1.0
            continue
        best = math.inf
        for prev in range(pos):
            j = order[prev]
            d = math.sqrt(
                sum(
                    max(0.0, (F[j][k] - F[i][k]) / scale) ** 2
                    for k in range(m)
                )
            )
            best = min(best, d)
        fit[i] = best / (1.0 + best)
    return fit


def random_population(rng, n_max=20, m_max=3, feasible_fraction=0.5):
    """Random objective matrix and cv vector with mixed feasibility."""
    n = int(rng.integers(2, n_max + 1))
    m = int(rng.integers(2, m_max + 1))
    F = rng.random((n, m)) * rng.uniform(0.5, 10.0)
    cvs = np.where(rng.random(n) < feasible_fraction, 0.0, rng.random(n) * 5.0)
    return F, cvs


@pytest.fixture
def rng():
    return np.random.default_rng(12345)

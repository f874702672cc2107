"""Variation operators: simulated binary crossover, polynomial mutation,
and DE/rand/1 with binomial crossover. All outputs are clamped to bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class OperatorConfig:
    """Operator kind plus the standard parameter set.

    kind "GA": SBX + polynomial mutation. kind "DE": DE/rand/1 trial vectors
    followed by polynomial mutation.
    """

    kind: str = "GA"
    pc: float = 1.0
    eta_c: float = 20.0
    pm: float | None = None  # defaults to 1/n at call time
    eta_m: float = 20.0
    F: float = 0.5
    CR: float = 1.0

    def __post_init__(self):
        if self.kind not in ("GA", "DE"):
            raise ValueError(f"unknown operator kind: {self.kind}")
        if not (0.0 <= self.pc <= 1.0 and 0.0 <= self.CR <= 1.0):
            raise ValueError("probabilities must lie in [0, 1]")
        if self.eta_c <= 0 or self.eta_m <= 0:
            raise ValueError("distribution indices must be positive")
        if not (0.0 <= self.F <= 2.0):
            raise ValueError("F must lie in [0, 2]")


def _clamp(x: np.ndarray, lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    return np.minimum(np.maximum(x, lower), upper)


def sbx(parent1, parent2, lower, upper, cfg: OperatorConfig, rng) -> tuple:
    """Simulated binary crossover producing two offspring.

    The whole pair is crossed with probability pc; within a crossed pair
    each variable recombines with probability 0.5 (standard protocol),
    otherwise it is copied through unchanged. Which child receives the
    lower/upper recombined value is additionally swapped per variable with
    probability 0.5 — without that swap each child hugs one whole parent
    vector (the spread factor concentrates near 1), so variable subsets
    from the two parents would never mix.
    """
    p1 = np.asarray(parent1, dtype=float)
    p2 = np.asarray(parent2, dtype=float)
    c1, c2 = p1.copy(), p2.copy()
    if rng.random() <= cfg.pc:
        u = rng.random(p1.size)
        beta = np.where(
            u <= 0.5,
            (2.0 * u) ** (1.0 / (cfg.eta_c + 1.0)),
            (1.0 / (2.0 * (1.0 - u))) ** (1.0 / (cfg.eta_c + 1.0)),
        )
        cross = rng.random(p1.size) <= 0.5
        swap = rng.random(p1.size) <= 0.5
        half_sum = 0.5 * (p1 + p2)
        half_diff = 0.5 * beta * (p1 - p2)
        lo_child = half_sum - half_diff
        hi_child = half_sum + half_diff
        c1 = np.where(cross, np.where(swap, hi_child, lo_child), p1)
        c2 = np.where(cross, np.where(swap, lo_child, hi_child), p2)
    return _clamp(c1, lower, upper), _clamp(c2, lower, upper)


def polynomial_mutation(x, lower, upper, cfg: OperatorConfig, rng) -> np.ndarray:
    """Polynomial mutation, each variable independently with probability pm."""
    x = np.asarray(x, dtype=float)
    pm = cfg.pm if cfg.pm is not None else 1.0 / x.size
    out = x.copy()
    mask = rng.random(x.size) < pm
    if not mask.any():
        return out
    span = upper - lower
    idx = np.where(mask & (span > 0))[0]
    if idx.size == 0:
        return out
    u = rng.random(idx.size)
    delta1 = (x[idx] - lower[idx]) / span[idx]
    delta2 = (upper[idx] - x[idx]) / span[idx]
    exponent = 1.0 / (cfg.eta_m + 1.0)
    lo = u < 0.5
    deltaq = np.empty(idx.size)
    val = 2.0 * u[lo] + (1.0 - 2.0 * u[lo]) * (1.0 - delta1[lo]) ** (cfg.eta_m + 1.0)
    deltaq[lo] = val**exponent - 1.0
    hi = ~lo
    val = 2.0 * (1.0 - u[hi]) + 2.0 * (u[hi] - 0.5) * (1.0 - delta2[hi]) ** (
        cfg.eta_m + 1.0
    )
    deltaq[hi] = 1.0 - val**exponent
    out[idx] = x[idx] + deltaq * span[idx]
    return _clamp(out, lower, upper)


def de_rand_1(base, r1, r2, lower, upper, cfg: OperatorConfig, rng) -> np.ndarray:
    """DE/rand/1 trial vector with binomial crossover against the base.

    trial_j = base_j + F * (r1_j - r2_j) with probability CR (one index
    always forced), else base_j; the trial is clamped to bounds.
    """
    base = np.asarray(base, dtype=float)
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    mutant = base + cfg.F * (r1 - r2)
    take = rng.random(base.size) < cfg.CR
    take[rng.integers(base.size)] = True
    return _clamp(np.where(take, mutant, base), lower, upper)

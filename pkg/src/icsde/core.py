"""Core domain types shared by the whole toolkit.

Defines solutions, populations, the problem-evaluation contract, overall
constraint violation, per-population objective normalization, and the
seeded random-stream plumbing used to keep every run reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


class EvaluationError(ValueError):
    """Raised when an evaluator produces or receives non-finite data."""


class ContractViolation(ValueError):
    """Raised when a caller breaks a documented precondition."""


class BudgetExhausted(RuntimeError):
    """Signals that the function-evaluation budget has been spent."""


def transform_equality(h_value: float, epsilon: float) -> float:
    """Convert an equality-constraint value into relaxed inequality form.

    Returns ``|h| - epsilon``; the result is <= 0 exactly when the equality
    is satisfied within the relaxation tolerance.
    """
    if not np.isfinite(h_value):
        raise EvaluationError(f"non-finite equality constraint value: {h_value}")
    if epsilon <= 0:
        raise ContractViolation("epsilon must be positive")
    return abs(h_value) - epsilon


def constraint_violation(g) -> float:
    """Overall constraint violation: sum of positive inequality excesses.

    Zero means feasible; constraint boundaries (g_i == 0) count as feasible.
    """
    g = np.asarray(g, dtype=float)
    if g.size and not np.all(np.isfinite(g)):
        raise EvaluationError("non-finite constraint value")
    if g.size == 0:
        return 0.0
    return float(np.maximum(g, 0.0).sum())


def constraint_violation_batch(G: np.ndarray) -> np.ndarray:
    """Vectorized `constraint_violation` for a (k, q) constraint matrix."""
    if G.size == 0:
        return np.zeros(G.shape[0])
    if not np.all(np.isfinite(G)):
        raise EvaluationError("non-finite constraint value")
    return np.maximum(G, 0.0).sum(axis=1)


def normalize_objectives(F: np.ndarray) -> np.ndarray:
    """Rescale each objective to [0, 1] over all rows (population members).

    Min/max are taken over every member, feasible and infeasible alike.
    A degenerate column (max == min) maps to all zeros so that it stops
    discriminating without breaking downstream sums.
    """
    F = np.asarray(F, dtype=float)
    if F.ndim != 2 or F.shape[0] == 0:
        raise ContractViolation("normalize_objectives needs a non-empty 2-D matrix")
    if not np.all(np.isfinite(F)):
        raise EvaluationError("non-finite objective value")
    fmin = F.min(axis=0)
    frange = F.max(axis=0) - fmin
    out = np.zeros_like(F)
    ok = frange > 0
    out[:, ok] = (F[:, ok] - fmin[ok]) / frange[ok]
    return out


@dataclass
class Solution:
    """One evaluated candidate: decision vector, objectives, constraints."""

    x: np.ndarray
    f: np.ndarray
    g: np.ndarray
    cv: float
    fitness: Optional[float] = None

    @property
    def feasible(self) -> bool:
        return self.cv == 0.0


@dataclass
class ProblemSpec:
    """Contract a benchmark problem exposes to the engine.

    `evaluator` maps a (k, n) decision matrix to an ((k, m), (k, q)) pair of
    objective and inequality-constraint matrices (g <= 0 means satisfied).
    `pf_sampler(k)` returns k mutually non-dominated points on the true
    constrained Pareto front, used for hypervolume normalization.
    """

    name: str
    n: int
    m: int
    q: int
    bounds: np.ndarray  # shape (n, 2)
    evaluator: Callable[[np.ndarray], tuple]
    pf_sampler: Callable[[int], np.ndarray]
    epsilon_eq: float = 1e-6

    def __post_init__(self):
        self.bounds = np.asarray(self.bounds, dtype=float)
        if self.bounds.shape != (self.n, 2):
            raise ContractViolation("bounds must have shape (n, 2)")
        if self.epsilon_eq <= 0:
            raise ContractViolation("epsilon_eq must be positive")

    @property
    def lower(self) -> np.ndarray:
        return self.bounds[:, 0]

    @property
    def upper(self) -> np.ndarray:
        return self.bounds[:, 1]


class FeBudget:
    """Function-evaluation counter with a hard cap."""

    def __init__(self, limit: int):
        if limit < 1:
            raise ContractViolation("budget limit must be >= 1")
        self.limit = int(limit)
        self.used = 0

    @property
    def remaining(self) -> int:
        return self.limit - self.used

    def charge(self, count: int = 1) -> None:
        if self.used + count > self.limit:
            raise BudgetExhausted(
                f"budget exhausted: {self.used}+{count} > {self.limit}"
            )
        self.used += count


def evaluate_batch(spec: ProblemSpec, X: np.ndarray, budget: FeBudget) -> list:
    """Evaluate a batch of in-bounds decision vectors, charging one FE each."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != spec.n:
        raise ContractViolation(f"decision dimension {X.shape[1]} != {spec.n}")
    if np.any(X < spec.lower - 1e-12) or np.any(X > spec.upper + 1e-12):
        raise ContractViolation("decision vector out of bounds")
    budget.charge(X.shape[0])
    F, G = spec.evaluator(X)
    F = np.asarray(F, dtype=float)
    G = np.asarray(G, dtype=float).reshape(X.shape[0], spec.q)
    if not np.all(np.isfinite(F)):
        raise EvaluationError(f"{spec.name}: non-finite objective")
    cvs = constraint_violation_batch(G)
    return [Solution(X[i].copy(), F[i], G[i], float(cvs[i])) for i in range(X.shape[0])]


def evaluate(spec: ProblemSpec, x: np.ndarray, budget: FeBudget) -> Solution:
    """Evaluate a single decision vector (one FE)."""
    return evaluate_batch(spec, np.asarray(x, dtype=float)[None, :], budget)[0]


@dataclass
class Population:
    """Ordered collection of solutions with a survivor capacity."""

    capacity: int
    members: list = field(default_factory=list)

    def __post_init__(self):
        if self.capacity < 1:
            raise ContractViolation("capacity must be >= 1")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def objectives(self) -> np.ndarray:
        return np.array([s.f for s in self.members])

    def cvs(self) -> np.ndarray:
        return np.array([s.cv for s in self.members])

    def decision_matrix(self) -> np.ndarray:
        return np.array([s.x for s in self.members])


class RandomStream:
    """Splittable seeded RNG wrapper around numpy's SeedSequence.

    Identical seeds yield identical generator streams, and child streams
    (one per run / instance) are statistically independent, so parallel
    runs never share state.
    """

    def __init__(self, seed: int, _seq: Optional[np.random.SeedSequence] = None):
        self.seed = int(seed)
        self._seq = _seq if _seq is not None else np.random.SeedSequence(self.seed)
        self.rng = np.random.Generator(np.random.PCG64(self._seq))

    def split(self, count: int) -> list:
        children = self._seq.spawn(count)
        return [RandomStream(self.seed, _seq=c) for c in children]

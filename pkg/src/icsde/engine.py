"""Single-population evolutionary loop.

Each generation: binary-tournament mating selection on fitness, variation
(GA or DE path), fitness assignment over the parent+offspring union, and
survivor truncation by descending fitness with random tie-breaking at the
cut. The hypervolume of the feasible non-dominated survivors is recorded
every generation.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from .core import (
    BudgetExhausted,
    ContractViolation,
    FeBudget,
    Population,
    ProblemSpec,
    RandomStream,
    evaluate_batch,
)
from .fitness import icsde_fitness
from .indicators import HvConfig, hv, non_dominated_mask
from .operators import OperatorConfig, de_rand_1, polynomial_mutation, sbx

VARIANTS = ("ICSDE", "ISDE_PLUS", "CDP_BASELINE")


@dataclass
class AlgorithmConfig:
    population_size: int
    max_fes: int
    operator: OperatorConfig = field(default_factory=OperatorConfig)
    variant: str = "ICSDE"

    def __post_init__(self):
        if self.population_size < 2:
            raise ContractViolation("population size must be >= 2")
        if self.max_fes < self.population_size:
            raise ContractViolation("max_fes must cover the initial population")
        if self.variant not in VARIANTS:
            raise ContractViolation(f"unknown variant: {self.variant}")


@dataclass
class RunRecord:
    problem: str
    variant: str
    operator_kind: str
    seed: int
    population_size: int
    fes_used: int
    wall_time_ms: float
    hv_trajectory: list
    final_population: list  # dicts with x, f, cv
    error: str | None = None

    def final_hv(self) -> float:
        return self.hv_trajectory[-1] if self.hv_trajectory else 0.0

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "RunRecord":
        return cls(**json.loads(line))


def _cdp_better(cv_a, f_a, cv_b, f_b) -> bool:
    """Constrained dominance: feasibility first, Pareto dominance second."""
    if cv_a != cv_b:
        return cv_a < cv_b
    return bool(np.all(f_a <= f_b) and np.any(f_a < f_b))


def cdp_fitness(F: np.ndarray, cvs: np.ndarray) -> np.ndarray:
    """Scalar fitness for the sanity baseline: constrained non-dominated
    sorting with crowding-distance tie-breaking, mapped onto [0, 1] so the
    engine's fitness-maximizing selection machinery applies unchanged.
    """
    n = len(F)
    if n == 1:
        return np.ones(1)
    # Constrained-domination matrix: dom[i, j] == True when i beats j
    # (smaller cv, or equal cv and Pareto dominance).
    cv_lt = cvs[:, None] < cvs[None, :]
    cv_eq = cvs[:, None] == cvs[None, :]
    le = np.all(F[:, None, :] <= F[None, :, :], axis=2)
    lt = np.any(F[:, None, :] < F[None, :, :], axis=2)
    dom = cv_lt | (cv_eq & le & lt)
    # Front ranks by repeatedly peeling the currently undominated members.
    rank = np.full(n, -1, dtype=int)
    alive = np.ones(n, dtype=bool)
    level = 0
    while alive.any():
        dominated = dom[alive].any(axis=0)
        front = alive & ~dominated
        if not front.any():  # cyclic ties cannot happen, but never loop forever
            front = alive.copy()
        rank[front] = level
        alive &= ~front
        level += 1
    # Crowding distance within each front.
    crowd = np.zeros(n)
    for lvl in range(level):
        idx = np.where(rank == lvl)[0]
        if idx.size <= 2:
            crowd[idx] = np.inf
            continue
        for j in range(F.shape[1]):
            order = idx[np.argsort(F[idx, j], kind="stable")]
            crowd[order[0]] = crowd[order[-1]] = np.inf
            span = F[order[-1], j] - F[order[0], j]
            if span > 0:
                crowd[order[1:-1]] += (F[order[2:], j] - F[order[:-2], j]) / span
    # Position in the (rank asc, crowding desc) order -> fitness in [0, 1].
    key = np.lexsort((np.arange(n), -np.where(np.isinf(crowd), 1e18, crowd), rank))
    fitness = np.empty(n)
    fitness[key] = 1.0 - np.arange(n) / (n - 1)
    return fitness


def assign_fitness(F: np.ndarray, cvs: np.ndarray, variant: str) -> np.ndarray:
    if variant == "ICSDE":
        return icsde_fitness(F, cvs)
    if variant == "ISDE_PLUS":
        return icsde_fitness(F, np.zeros_like(cvs))
    if variant == "CDP_BASELINE":
        return cdp_fitness(np.asarray(F, dtype=float), np.asarray(cvs, dtype=float))
    raise ContractViolation(f"unknown variant: {variant}")


def initialize(spec: ProblemSpec, N: int, budget: FeBudget, rng) -> Population:
    X = spec.lower + rng.random((N, spec.n)) * (spec.upper - spec.lower)
    pop = Population(capacity=N, members=evaluate_batch(spec, X, budget))
    return pop


def mating_selection(fitness: np.ndarray, N: int, rng) -> np.ndarray:
    """N binary tournaments; strictly greater fitness wins, ties go to the
    second pick. Returns selected member indices."""
    pool = np.empty(N, dtype=int)
    n = len(fitness)
    for t in range(N):
        i = int(rng.integers(n))
        j = int(rng.integers(n))
        while n > 1 and j == i:
            j = int(rng.integers(n))
        pool[t] = i if fitness[i] > fitness[j] else j
    return pool


def environmental_selection(members: list, fitness: np.ndarray, N: int, rng):
    """Keep the N highest-fitness members; resolve ties at the cut uniformly
    at random. Fitness values travel with the survivors (no recomputation)."""
    if len(members) < N:
        raise ContractViolation("environmental_selection: union smaller than N")
    fitness = np.asarray(fitness, dtype=float)
    order = np.argsort(-fitness, kind="stable")
    cut_value = fitness[order[N - 1]]
    above = [i for i in order if fitness[i] > cut_value]
    tied = np.array([i for i in order if fitness[i] == cut_value], dtype=int)
    need = N - len(above)
    chosen = rng.choice(tied, size=need, replace=False) if need else []
    keep = np.array(above + list(chosen), dtype=int)
    return [members[i] for i in keep], fitness[keep]


def _variation(pool_X: np.ndarray, count: int, spec: ProblemSpec, cfg, rng):
    """Produce `count` offspring decision vectors from the mating pool."""
    op: OperatorConfig = cfg.operator
    lower, upper = spec.lower, spec.upper
    n_pool = pool_X.shape[0]
    children = []
    if op.kind == "GA":
        i = 0
        while len(children) < count:
            p1 = pool_X[i % n_pool]
            p2 = pool_X[(i + 1) % n_pool]
            c1, c2 = sbx(p1, p2, lower, upper, op, rng)
            children.append(polynomial_mutation(c1, lower, upper, op, rng))
            if len(children) < count:
                children.append(polynomial_mutation(c2, lower, upper, op, rng))
            i += 2
    else:
        for i in range(count):
            r1 = int(rng.integers(n_pool))
            r2 = int(rng.integers(n_pool))
            for _ in range(100):
                if n_pool < 3 or (r1 != r2 and r1 != i % n_pool and r2 != i % n_pool):
                    break
                r1 = int(rng.integers(n_pool))
                r2 = int(rng.integers(n_pool))
            trial = de_rand_1(
                pool_X[i % n_pool], pool_X[r1], pool_X[r2], lower, upper, op, rng
            )
            children.append(polynomial_mutation(trial, lower, upper, op, rng))
    return np.array(children)


def _population_hv(members: list, hv_cfg: HvConfig) -> float:
    feasible = [s for s in members if s.cv == 0.0]
    if not feasible:
        return 0.0
    F = np.array([s.f for s in feasible])
    return hv(F[non_dominated_mask(F)], hv_cfg)


def run(
    spec: ProblemSpec,
    cfg: AlgorithmConfig,
    seed: int,
    hv_cfg: HvConfig | None = None,
    reference_points: int = 10000,
) -> RunRecord:
    """Execute one full optimization run; deterministic in (spec, cfg, seed)."""
    t0 = time.perf_counter()
    stream = RandomStream(seed)
    rng = stream.rng
    N = cfg.population_size
    budget = FeBudget(cfg.max_fes)
    if hv_cfg is None:
        hv_cfg = HvConfig(reference_front=spec.pf_sampler(reference_points))
    trajectory = []
    error = None
    try:
        pop = initialize(spec, N, budget, rng)
        F = pop.objectives()
        cvs = pop.cvs()
        fitness = assign_fitness(F, cvs, cfg.variant)
        members = pop.members
        trajectory.append(_population_hv(members, hv_cfg))
        while budget.remaining > 0:
            pool = mating_selection(fitness, N, rng)
            pool_X = np.array([members[i].x for i in pool])
            n_off = min(N, budget.remaining)
            child_X = _variation(pool_X, n_off, spec, cfg, rng)
            offspring = evaluate_batch(spec, child_X, budget)
            union = members + offspring
            F = np.array([s.f for s in union])
            cvs = np.array([s.cv for s in union])
            fitness_union = assign_fitness(F, cvs, cfg.variant)
            members, fitness = environmental_selection(union, fitness_union, N, rng)
            trajectory.append(_population_hv(members, hv_cfg))
    except BudgetExhausted:
        pass
    except (ContractViolation, ValueError) as exc:
        error = f"{type(exc).__name__}: {exc}"
        members = locals().get("members", [])
    wall_ms = (time.perf_counter() - t0) * 1000.0
    final = [
        {"x": s.x.tolist(), "f": s.f.tolist(), "cv": s.cv} for s in members
    ]
    return RunRecord(
        problem=spec.name,
        variant=cfg.variant,
        operator_kind=cfg.operator.kind,
        seed=seed,
        population_size=N,
        fes_used=budget.used,
        wall_time_ms=wall_ms,
        hv_trajectory=trajectory,
        final_population=final,
        error=error,
    )

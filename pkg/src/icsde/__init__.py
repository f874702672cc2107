"""Constrained multi-objective evolutionary optimization toolkit.

Fitness assignment couples constraint violation, a sum-of-normalized-
objectives scalarization, and shift-based density estimation inside a
single-population generational loop, with benchmark suites, an exact
hypervolume pipeline, nonparametric comparison statistics, and an
experiment CLI.
"""

from .core import (
    BudgetExhausted,
    ContractViolation,
    EvaluationError,
    FeBudget,
    Population,
    ProblemSpec,
    RandomStream,
    Solution,
    constraint_violation,
    evaluate,
    evaluate_batch,
    normalize_objectives,
    transform_equality,
)
from .engine import AlgorithmConfig, RunRecord, assign_fitness, run
from .fitness import icsde_fitness, isde_fitness, rank_cv_sob, shift, sob
from .indicators import HvConfig, hv, hypervolume_unit, non_dominated_mask
from .kernels import BACKEND
from .operators import OperatorConfig, de_rand_1, polynomial_mutation, sbx
from .stats import friedman_ranks, wilcoxon_signed_rank

__version__ = "1.0.0"

__all__ = [
    "AlgorithmConfig", "BACKEND", "BudgetExhausted", "ContractViolation",
    "EvaluationError", "FeBudget", "HvConfig", "OperatorConfig", "Population",
    "ProblemSpec", "RandomStream", "RunRecord", "Solution",
    "assign_fitness", "constraint_violation", "de_rand_1", "evaluate",
    "evaluate_batch", "friedman_ranks", "hv", "hypervolume_unit",
    "icsde_fitness", "isde_fitness", "non_dominated_mask",
    "normalize_objectives", "polynomial_mutation", "rank_cv_sob", "run",
    "sbx", "shift", "sob", "transform_equality", "wilcoxon_signed_rank",
]

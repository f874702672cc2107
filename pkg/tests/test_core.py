"""Core domain types: constraint handling, normalization, evaluation."""

import numpy as np
import pytest

from icsde.core import (
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


def _toy_spec(q=1):
    """Bi-objective toy problem: f=(x1, 1-x1), constraint x2 - 0.5 <= 0."""

    def evaluator(X):
        F = np.stack([X[:, 0], 1.0 - X[:, 0]], axis=1)
        G = (X[:, 1] - 0.5)[:, None] if q else np.empty((X.shape[0], 0))
        return F, G

    def pf_sampler(k):
        t = np.linspace(0, 1, k)
        return np.stack([t, 1.0 - t], axis=1)

    return ProblemSpec(
        name="toy", n=2, m=2, q=q, bounds=[[0, 1], [0, 1]],
        evaluator=evaluator, pf_sampler=pf_sampler,
    )


class TestTransformEquality:
    def test_zero_residual(self):
        assert transform_equality(0.0, 1e-6) == -1e-6

    def test_violated(self):
        assert transform_equality(2e-6, 1e-6) == pytest.approx(1e-6)

    def test_within_relaxation(self):
        assert transform_equality(-5e-7, 1e-6) == pytest.approx(-5e-7)

    def test_satisfied_iff_within_epsilon(self, rng):
        for _ in range(200):
            h = float(rng.normal() * 1e-5)
            eps = float(rng.uniform(1e-8, 1e-4))
            assert (transform_equality(h, eps) <= 0) == (abs(h) <= eps)

    def test_nonfinite_rejected(self):
        with pytest.raises(EvaluationError):
            transform_equality(float("nan"), 1e-6)

    def test_bad_epsilon_rejected(self):
        with pytest.raises(ContractViolation):
            transform_equality(0.0, 0.0)


class TestConstraintViolation:
    def test_single_positive_term(self):
        assert constraint_violation([-1.0, 0.5, 0.0]) == 0.5

    def test_all_satisfied(self):
        assert constraint_violation([-0.3, -2.0]) == 0.0

    def test_sum_of_positives(self):
        assert constraint_violation([0.1, 0.2, 0.3]) == pytest.approx(0.6)

    def test_empty_is_feasible(self):
        assert constraint_violation([]) == 0.0

    def test_boundary_is_feasible(self):
        assert constraint_violation([0.0, -1.0]) == 0.0

    def test_monotone_in_each_component(self, rng):
        for _ in range(200):
            g = rng.normal(size=5)
            bumped = g + rng.random(5) * 0.5
            assert constraint_violation(bumped) >= constraint_violation(g)

    def test_nonfinite_rejected(self):
        with pytest.raises(EvaluationError):
            constraint_violation([np.inf, 0.0])


class TestNormalizeObjectives:
    def test_affine_map(self):
        out = normalize_objectives(np.array([[0, 2], [1, 1], [2, 0]], float))
        np.testing.assert_allclose(out, [[0, 1], [0.5, 0.5], [1, 0]])

    def test_singleton_degenerates_to_zero(self):
        np.testing.assert_array_equal(
            normalize_objectives(np.array([[3.0, 7.0]])), [[0.0, 0.0]]
        )

    def test_constant_column_zeroed(self):
        out = normalize_objectives(np.array([[1, 5], [1, 9]], float))
        np.testing.assert_allclose(out, [[0, 0], [0, 1]])

    def test_empty_rejected(self):
        with pytest.raises(ContractViolation):
            normalize_objectives(np.empty((0, 2)))

    def test_idempotent_on_full_range_output(self, rng):
        F = rng.random((12, 3)) * 40 - 7
        once = normalize_objectives(F)
        np.testing.assert_allclose(normalize_objectives(once), once, atol=1e-12)

    def test_order_preserving_per_objective(self, rng):
        for _ in range(50):
            F = rng.random((10, 2)) * 100
            out = normalize_objectives(F)
            for j in range(2):
                order = np.argsort(F[:, j])
                diffs = np.diff(out[order, j])
                assert np.all(diffs >= 0)
                if F[:, j].max() > F[:, j].min():
                    assert np.all(diffs[np.diff(F[order, j]) > 0] > 0)


class TestEvaluate:
    def test_budget_charged_exactly_once(self):
        spec = _toy_spec()
        budget = FeBudget(5)
        sol = evaluate(spec, np.array([0.25, 0.1]), budget)
        assert budget.used == 1
        np.testing.assert_allclose(sol.f, [0.25, 0.75])
        assert sol.cv == 0.0 and sol.feasible

    def test_infeasible_cv(self):
        sol = evaluate(_toy_spec(), np.array([0.5, 0.9]), FeBudget(1))
        assert sol.cv == pytest.approx(0.4)
        assert not sol.feasible

    def test_constraint_boundary_is_feasible(self):
        sol = evaluate(_toy_spec(), np.array([0.3, 0.5]), FeBudget(1))
        assert sol.cv == 0.0

    def test_budget_exhausted(self):
        budget = FeBudget(1)
        evaluate(_toy_spec(), np.array([0.1, 0.1]), budget)
        with pytest.raises(BudgetExhausted):
            evaluate(_toy_spec(), np.array([0.1, 0.1]), budget)

    def test_out_of_bounds_rejected(self):
        with pytest.raises(ContractViolation):
            evaluate(_toy_spec(), np.array([1.5, 0.0]), FeBudget(1))

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ContractViolation):
            evaluate(_toy_spec(), np.array([0.5]), FeBudget(1))

    def test_deterministic(self):
        x = np.array([0.123, 0.456])
        a = evaluate(_toy_spec(), x, FeBudget(1))
        b = evaluate(_toy_spec(), x, FeBudget(1))
        np.testing.assert_array_equal(a.f, b.f)
        np.testing.assert_array_equal(a.g, b.g)
        assert a.cv == b.cv

    def test_batch_charges_per_row(self):
        budget = FeBudget(10)
        sols = evaluate_batch(_toy_spec(), np.random.default_rng(0).random((4, 2)), budget)
        assert len(sols) == 4 and budget.used == 4

    def test_unconstrained_problem(self):
        sol = evaluate(_toy_spec(q=0), np.array([0.5, 0.9]), FeBudget(1))
        assert sol.cv == 0.0 and sol.g.size == 0


class TestBudgetAndTypes:
    def test_budget_remaining(self):
        b = FeBudget(10)
        b.charge(7)
        assert b.remaining == 3
        with pytest.raises(BudgetExhausted):
            b.charge(4)
        assert b.used == 7  # failed charge must not consume budget

    def test_budget_requires_positive_limit(self):
        with pytest.raises(ContractViolation):
            FeBudget(0)

    def test_population_accessors(self):
        sols = [
            Solution(np.array([0.1]), np.array([1.0, 2.0]), np.array([-1.0]), 0.0),
            Solution(np.array([0.2]), np.array([3.0, 4.0]), np.array([0.5]), 0.5),
        ]
        pop = Population(capacity=2, members=sols)
        assert len(pop) == 2
        np.testing.assert_array_equal(pop.objectives(), [[1, 2], [3, 4]])
        np.testing.assert_array_equal(pop.cvs(), [0.0, 0.5])
        np.testing.assert_array_equal(pop.decision_matrix(), [[0.1], [0.2]])

    def test_spec_validates_bounds_shape(self):
        with pytest.raises(ContractViolation):
            ProblemSpec(
                name="bad", n=3, m=2, q=0, bounds=[[0, 1]],
                evaluator=lambda X: None, pf_sampler=lambda k: None,
            )


class TestRandomStream:
    def test_same_seed_same_stream(self):
        a = RandomStream(7).rng.random(100)
        b = RandomStream(7).rng.random(100)
        np.testing.assert_array_equal(a, b)

    def test_different_seeds_differ(self):
        assert not np.array_equal(
            RandomStream(1).rng.random(50), RandomStream(2).rng.random(50)
        )

    def test_split_children_independent_and_reproducible(self):
        kids1 = RandomStream(3).split(4)
        kids2 = RandomStream(3).split(4)
        draws1 = [k.rng.random(20) for k in kids1]
        draws2 = [k.rng.random(20) for k in kids2]
        for d1, d2 in zip(draws1, draws2):
            np.testing.assert_array_equal(d1, d2)
        for i in range(4):
            for j in range(i + 1, 4):
                assert not np.array_equal(draws1[i], draws1[j])

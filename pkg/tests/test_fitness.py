"""Fitness assignment: scalarization, shift distances, ranking, and the
constrained fitness vector checked against an independent brute-force oracle.
"""

import math

import numpy as np
import pytest

from conftest import oracle_fitness, random_population
from icsde.core import ContractViolation
from icsde.fitness import icsde_fitness, isde_fitness, rank_cv_sob, shift, sob


class TestSob:
    def test_sum(self):
        assert sob(np.array([0.0, 1.0])) == 1.0
        assert sob(np.array([0.0, 0.0, 0.0])) == 0.0
        assert sob(np.array([0.5, 0.5])) == 1.0


class TestShift:
    def test_componentwise(self):
        np.testing.assert_array_equal(shift([1, 2], [2, 1]), [2, 2])

    def test_dominating_peer_lands_on_reference(self):
        np.testing.assert_array_equal(shift([1, 1], [0, 0]), [1, 1])

    def test_no_component_shifted(self):
        np.testing.assert_array_equal(shift([1, 2], [3, 4]), [3, 4])

    def test_length_mismatch(self):
        with pytest.raises(ContractViolation):
            shift([1, 2], [1, 2, 3])


class TestIsdeFitness:
    def test_symmetric_nondominated_pair(self):
        out = isde_fitness(np.array([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(out, [1.0, 1.0])

    def test_dominated_point_scores_zero(self):
        out = isde_fitness(np.array([[0.0, 0.0], [1.0, 1.0]]))
        np.testing.assert_allclose(out, [math.sqrt(2.0), 0.0])

    def test_duplicates_zero_each_other(self):
        out = isde_fitness(np.array([[0.5, 0.5], [0.5, 0.5]]))
        np.testing.assert_allclose(out, [0.0, 0.0])

    def test_singleton_rejected(self):
        with pytest.raises(ContractViolation):
            isde_fitness(np.array([[0.5, 0.5]]))


class TestRankCvSob:
    def test_lexicographic(self):
        ranked = rank_cv_sob(np.array([0.0, 1.0, 0.0]), np.array([2.0, 0.0, 1.0]))
        np.testing.assert_array_equal(ranked.order, [2, 0, 1])

    def test_stable_tie_break(self):
        ranked = rank_cv_sob(np.zeros(3), np.array([1.0, 1.0, 2.0]))
        np.testing.assert_array_equal(ranked.order, [0, 1, 2])

    def test_feasible_first_regardless_of_sob(self):
        ranked = rank_cv_sob(np.array([3.0, 2.0, 2.0, 0.0]), np.array([0.0, 0.0, 0.0, 9.0]))
        assert ranked.order[0] == 3

    def test_empty_rejected(self):
        with pytest.raises(ContractViolation):
            rank_cv_sob(np.array([]), np.array([]))

    def test_total_order_is_bijection(self, rng):
        for _ in range(100):
            F, cvs = random_population(rng)
            ranked = rank_cv_sob(cvs, F.sum(axis=1))
            assert sorted(ranked.order) == list(range(len(cvs)))

    def test_group_start_marks_equal_keys(self):
        ranked = rank_cv_sob(np.array([0.0, 0.0, 0.0]), np.array([1.0, 1.0, 2.0]))
        np.testing.assert_array_equal(ranked.group_start, [0, 0, 2])


class TestIcsdeFitnessFixtures:
    def test_dominated_and_infeasible_score_zero(self):
        # a=(0,0) feasible; b=(2,2) feasible; c=(1,1) infeasible: a is ahead
        # of both and beats them in every coordinate, so both collapse to 0.
        F = np.array([[0.0, 0.0], [2.0, 2.0], [1.0, 1.0]])
        cvs = np.array([0.0, 0.0, 1.0])
        np.testing.assert_allclose(icsde_fitness(F, cvs), [1.0, 0.0, 0.0], atol=1e-12)

    def test_three_member_front_exact_values(self):
        # a=(0,3), b=(3,0), c=(2,2), all feasible. Ranked a, b, c (stable sob
        # tie). Ranges are (3,3) so the distance scale is 3*sqrt(2):
        #   b sees a shifted onto it at distance 1/sqrt(2)
        #   c sees both peers at distance 1/(3*sqrt(2))
        F = np.array([[0.0, 3.0], [3.0, 0.0], [2.0, 2.0]])
        d_b = 1.0 / math.sqrt(2.0)
        d_c = 1.0 / (3.0 * math.sqrt(2.0))
        expected = [1.0, d_b / (1.0 + d_b), d_c / (1.0 + d_c)]
        np.testing.assert_allclose(icsde_fitness(F, np.zeros(3)), expected, atol=1e-12)

    def test_duplicate_of_the_best_is_culled(self):
        F = np.array([[1.0, 1.0], [1.0, 1.0], [2.0, 3.0]])
        fit = icsde_fitness(F, np.zeros(3))
        assert fit[0] == 1.0
        assert fit[1] == 0.0  # second copy sits at shift distance zero

    def test_empty_population_rejected(self):
        with pytest.raises(ContractViolation):
            icsde_fitness(np.empty((0, 2)), np.array([]))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ContractViolation):
            icsde_fitness(np.zeros((3, 2)), np.zeros(2))


class TestIcsdeFitnessProperties:
    def test_oracle_equivalence(self, rng):
        for _ in range(200):
            F, cvs = random_population(rng)
            np.testing.assert_allclose(
                icsde_fitness(F, cvs), oracle_fitness(F, cvs), atol=1e-12
            )

    def test_range_and_unique_maximum(self, rng):
        for _ in range(100):
            F, cvs = random_population(rng)
            fit = icsde_fitness(F, cvs)
            assert np.all(fit >= 0.0) and np.all(fit <= 1.0)
            assert np.sum(fit == 1.0) == 1  # exactly the first-ranked member

    def test_constraint_blind_path_is_same_code_with_zero_cv(self, rng):
        for _ in range(50):
            F, _ = random_population(rng)
            a = icsde_fitness(F, np.zeros(len(F)))
            b = icsde_fitness(F.copy(), np.zeros(len(F)))
            np.testing.assert_array_equal(a, b)

    def test_dominated_by_earlier_ranked_scores_zero(self, rng):
        for _ in range(100):
            F, cvs = random_population(rng, feasible_fraction=1.0)
            # Append a member weakly dominated by the best-ranked member.
            fit0 = icsde_fitness(F, cvs)
            best = int(np.argmax(fit0))
            F2 = np.vstack([F, F[best] + 0.1])
            cvs2 = np.append(cvs, 0.0)
            assert icsde_fitness(F2, cvs2)[-1] == 0.0

    def test_permutation_equivariance_with_distinct_keys(self, rng):
        for _ in range(50):
            F, cvs = random_population(rng)
            keys = list(zip(cvs.tolist(), F.sum(axis=1).tolist()))
            if len(set(keys)) != len(keys):
                continue
            perm = rng.permutation(len(F))
            base = icsde_fitness(F, cvs)
            permuted = icsde_fitness(F[perm], cvs[perm])
            np.testing.assert_allclose(permuted, base[perm], atol=1e-12)

    def test_uniform_scale_invariance(self, rng):
        for scale in (1e-3, 7.0, 1e4):
            F, cvs = random_population(rng)
            np.testing.assert_allclose(
                icsde_fitness(F * scale, cvs), icsde_fitness(F, cvs), atol=1e-12
            )

    def test_feasible_never_ranked_behind_infeasible(self, rng):
        for _ in range(200):
            F, cvs = random_population(rng)
            ranked = rank_cv_sob(cvs, F.sum(axis=1))
            seen_infeasible = False
            for idx in ranked.order:
                if cvs[idx] > 0:
                    seen_infeasible = True
                elif seen_infeasible:
                    pytest.fail("feasible member ranked behind an infeasible one")

    def test_infeasible_detour_member_keeps_selection_pressure(self):
        # A feasible cluster plus a remote infeasible member with smaller
        # objective values: the infeasible member is ranked last but is not
        # shifted onto by anyone, so it must keep a strictly positive score.
        F = np.array([[5.0, 5.0], [5.1, 5.1], [0.0, 0.0]])
        cvs = np.array([0.0, 0.0, 1.0])
        fit = icsde_fitness(F, cvs)
        assert fit[2] > 0.0

from fractions import Fraction

import pytest

from cutjoin.hurwitz import (
    BudgetExceededError,
    branch_count,
    canonical_permutation,
    elsv_check,
    elsv_value,
    hurwitz_bruteforce,
    hurwitz_connected,
    hurwitz_cutjoin_check,
    hurwitz_disconnected,
    linear_hodge_factor,
    solve_hodge_from_hurwitz,
    transpositions,
)
from cutjoin.partitions import Partition, enumerate_partitions

P = Partition


class TestBruteForce:
    def test_spec_anchors(self):
        assert hurwitz_bruteforce(3, P([2]), transitive_only=True) == Fraction(1, 2)
        assert hurwitz_bruteforce(2, P([3]), transitive_only=True) == 1
        assert hurwitz_bruteforce(2, P([1])) == 0  # no transpositions in S_1
        assert hurwitz_bruteforce(0, P([1]), transitive_only=True) == 1

    def test_budget_guard(self):
        with pytest.raises(BudgetExceededError):
            hurwitz_bruteforce(8, P([4]), budget=10)

    def test_transpositions_and_canonical_permutation(self):
        assert len(transpositions(4)) == 6
        assert canonical_permutation(P([3, 2])) == (1, 2, 0, 4, 3)


class TestCharacterFormula:
    def test_spec_values(self):
        assert hurwitz_disconnected(0, P([1, 1])) == Fraction(1, 2)
        assert hurwitz_disconnected(1, P([2])) == Fraction(1, 2)
        assert hurwitz_disconnected(2, P([3])) == 1

    def test_matches_bruteforce(self):
        for d in range(1, 4):
            for mu in enumerate_partitions(d):
                for r in range(6):
                    assert hurwitz_disconnected(r, mu) == hurwitz_bruteforce(r, mu)

    def test_parity_vanishing(self):
        for d in range(1, 5):
            for mu in enumerate_partitions(d):
                for r in range(7):
                    if (r - d - mu.length) % 2 != 0:
                        assert hurwitz_disconnected(r, mu) == 0

    def test_nonnegative(self):
        for d in range(1, 5):
            for mu in enumerate_partitions(d):
                for r in range(7):
                    assert hurwitz_disconnected(r, mu) >= 0


class TestConnected:
    def test_anchors(self):
        assert hurwitz_connected(0, P([2])) == Fraction(1, 2)
        assert hurwitz_connected(0, P([3])) == 1
        assert hurwitz_connected(1, P([2])) == Fraction(1, 2)
        assert hurwitz_connected(0, P([2, 2])) == 12

    def test_negative_branch_count_is_zero(self):
        assert branch_count(0, P([1])) == 0
        assert hurwitz_connected(-1, P([1])) == 0

    def test_matches_transitive_bruteforce(self):
        for d in range(1, 4):
            for mu in enumerate_partitions(d):
                for g in range(3):
                    r = branch_count(g, mu)
                    if 0 <= r <= 5:
                        assert hurwitz_connected(g, mu) == hurwitz_bruteforce(
                            r, mu, transitive_only=True
                        )


class TestElsv:
    def test_hodge_factor_values(self):
        assert linear_hodge_factor(0, P([3])) == Fraction(1, 9)
        assert linear_hodge_factor(0, P([2, 1])) == Fraction(1, 3)
        assert linear_hodge_factor(1, P([2])) == Fraction(1, 24)  # (d-1)/24
        assert linear_hodge_factor(1, P([3])) == Fraction(2, 24)
        assert linear_hodge_factor(1, P([1, 1])) == Fraction(1, 24)
        with pytest.raises(ValueError):
            linear_hodge_factor(2, P([1]))

    def test_values(self):
        assert elsv_value(0, P([3])) == 1
        assert elsv_value(0, P([2, 2])) == 12
        assert elsv_value(1, P([2])) == Fraction(1, 2)

    def test_checks(self):
        for d in range(1, 6):
            for mu in enumerate_partitions(d):
                assert elsv_check(0, mu), mu
        for mu in (P([2]), P([3]), P([4]), P([1, 1])):
            assert elsv_check(1, mu), mu
        with pytest.raises(ValueError):
            elsv_check(2, P([2]))

    def test_reverse_solve(self):
        assert solve_hodge_from_hurwitz(1, [2, 3]) == {
            "psi": Fraction(1, 24),
            "lambda": Fraction(1, 24),
        }
        assert solve_hodge_from_hurwitz(1, [2, 3, 4]) == {
            "psi": Fraction(1, 24),
            "lambda": Fraction(1, 24),
        }

    def test_reverse_solve_genus0_closed_form(self):
        out = solve_hodge_from_hurwitz(0, [2, 3])
        assert out == {
            "hodge_factor_d2": Fraction(1, 4),
            "hodge_factor_d3": Fraction(1, 9),
        }

    def test_reverse_solve_needs_two_degrees(self):
        with pytest.raises(ValueError, match="two degrees"):
            solve_hodge_from_hurwitz(1, [2])


class TestCutJoinRecursion:
    def test_worked_examples(self):
        assert hurwitz_cutjoin_check(0, P([2]))
        assert hurwitz_cutjoin_check(0, P([3]))
        assert hurwitz_cutjoin_check(1, P([2]))

    def test_range(self):
        for g in range(3):
            for d in range(1, 5):
                for mu in enumerate_partitions(d):
                    assert hurwitz_cutjoin_check(g, mu), (g, mu)

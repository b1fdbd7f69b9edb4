import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cutjoin.genfun import PartitionSeries, cut_join_linear
from cutjoin.partitions import (
    CUT,
    EMPTY,
    JOIN,
    Partition,
    cut_join_incoming,
    cut_join_neighbors,
    enumerate_partitions,
    partition_count,
    split_contributions,
)

partitions_st = st.integers(0, 8).map(
    lambda n: enumerate_partitions(n)
).flatmap(st.sampled_from)


def euler_partition_count(n: int) -> int:
    """Pentagonal-number recurrence; the independent counting oracle."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


class TestBasics:
    def test_canonical_and_validation(self):
        assert Partition([1, 3, 2]).parts == (3, 2, 1)
        with pytest.raises(ValueError):
            Partition([2, 0])
        assert EMPTY.size == 0 and EMPTY.length == 0

    def test_parse_and_str(self):
        assert Partition.parse("3,2,1") == Partition([3, 2, 1])
        assert Partition.parse("") == EMPTY
        assert str(Partition([3, 2, 1])) == "3,2,1"
        assert Partition([3, 1]).to_json() == [3, 1]

    def test_enumeration_examples(self):
        assert enumerate_partitions(0) == (EMPTY,)
        assert [p.parts for p in enumerate_partitions(4)] == [
            (4,),
            (3, 1),
            (2, 2),
            (2, 1, 1),
            (1, 1, 1, 1),
        ]
        assert partition_count(10) == 42

    def test_counts_against_euler_recurrence(self):
        for n in range(26):
            assert partition_count(n) == euler_partition_count(n)

    @given(partitions_st)
    def test_transpose_involution(self, mu):
        assert mu.transpose().transpose() == mu

    def test_kappa_examples(self):
        assert Partition([1]).kappa() == 0
        assert Partition([2]).kappa() == 2
        assert Partition([1, 1]).kappa() == -2
        assert Partition([3, 1]).kappa() == 4

    def test_kappa_identities(self):
        for d in range(13):
            for mu in enumerate_partitions(d):
                tr = mu.transpose()
                assert mu.kappa() + tr.kappa() == 0
                assert mu.kappa() == 2 * (tr.n_weight() - mu.n_weight())

    def test_hooks_examples(self):
        assert sorted(Partition([1]).hooks()) == [1]
        assert sorted(Partition([2, 1]).hooks()) == [1, 1, 3]
        assert sorted(Partition([3, 2]).hooks()) == [1, 1, 2, 3, 4]

    def test_hook_sum_identity(self):
        for d in range(13):
            for nu in enumerate_partitions(d):
                expected = nu.n_weight() + nu.transpose().n_weight() + nu.size
                assert sum(nu.hooks()) == expected

    def test_hook_product_divides_factorial(self):
        for d in range(1, 11):
            for nu in enumerate_partitions(d):
                prod = 1
                for h in nu.hooks():
                    prod *= h
                assert factorial(d) % prod == 0

    def test_half_hook_kappa_relation(self):
        # sum(h)/2 - n(nu) = kappa/4 + |nu|/2
        for d in range(1, 13):
            for nu in enumerate_partitions(d):
                lhs = Fraction(sum(nu.hooks()), 2) - nu.n_weight()
                assert lhs == Fraction(nu.kappa(), 4) + Fraction(nu.size, 2)

    def test_n_weight(self):
        for k in range(1, 6):
            assert Partition([k]).n_weight() == 0
        assert Partition([2, 1]).n_weight() == 1
        assert Partition([1, 1, 1]).n_weight() == 3

    @given(partitions_st)
    def test_n_weight_column_form(self, eta):
        cols = eta.transpose()
        assert eta.n_weight() == sum(c * (c - 1) // 2 for c in cols)

    def test_z_and_aut(self):
        mu = Partition([2, 2, 1])
        assert mu.aut_order() == 2
        assert mu.z() == 2 * 4 * 1  # 2! * 2^2 * 1! * 1^1
        prod_parts = 1
        for p in mu:
            prod_parts *= p
        assert mu.z() == mu.aut_order() * prod_parts


class TestClassSizes:
    def test_enumeration_oracle(self):
        # count permutations of each cycle type directly, d <= 6
        for d in range(1, 7):
            counts = {}
            for perm in itertools.permutations(range(d)):
                seen = [False] * d
                cycle_type = []
                for i in range(d):
                    if seen[i]:
                        continue
                    n, j = 0, i
                    while not seen[j]:
                        seen[j] = True
                        j = perm[j]
                        n += 1
                    cycle_type.append(n)
                key = Partition(cycle_type)
                counts[key] = counts.get(key, 0) + 1
            for mu in enumerate_partitions(d):
                assert counts[mu] * mu.z() == factorial(d)

    def test_centralizer_sum(self):
        for d in range(1, 11):
            assert sum(Fraction(1, mu.z()) for mu in enumerate_partitions(d)) == 1
            for mu in enumerate_partitions(d):
                assert factorial(d) % mu.z() == 0


class TestCutJoin:
    def test_examples(self):
        assert cut_join_neighbors(Partition([2])) == [
            (Partition([1, 1]), CUT, Fraction(1)),
        ]
        assert cut_join_neighbors(Partition([1, 1])) == [
            (Partition([2]), JOIN, Fraction(1)),
        ]
        nbs = cut_join_neighbors(Partition([2, 1]))
        assert (Partition([3]), JOIN, Fraction(2)) in nbs
        assert (Partition([1, 1, 1]), CUT, Fraction(1)) in nbs
        assert len(nbs) == 2

    def test_operator_oracle(self):
        # the genfun operator is the oracle for the edge coefficients
        for d in range(1, 8):
            for mu in enumerate_partitions(d):
                image = cut_join_linear(
                    PartitionSeries.monomial(mu, Fraction(1), d)
                ).scale(Fraction(1, 2))
                from_edges = PartitionSeries(
                    {nb.target: nb.coefficient for nb in cut_join_neighbors(mu)}, d
                )
                assert image == from_edges, mu

    def test_edge_involution(self):
        for d in range(1, 9):
            for mu in enumerate_partitions(d):
                for nb in cut_join_neighbors(mu):
                    back_kinds = [
                        b.kind
                        for b in cut_join_neighbors(nb.target)
                        if b.target == mu
                    ]
                    assert (CUT if nb.kind == JOIN else JOIN) in back_kinds

    def test_incoming(self):
        joins_into, cuts_into = cut_join_incoming(Partition([2]))
        assert joins_into == []
        assert cuts_into == [(Partition([1, 1]), Fraction(1))]

    def test_split_contributions(self):
        terms = split_contributions(Partition([2]))
        assert len(terms) == 1
        t = terms[0]
        assert (t.nu1, t.i, t.nu2, t.j, t.weight) == (
            Partition([1]),
            1,
            Partition([1]),
            1,
            1,
        )
        # splitting a 3-row: ordered (1,2) and (2,1)
        terms3 = split_contributions(Partition([3]))
        assert {(t.i, t.j) for t in terms3} == {(1, 2), (2, 1)}
        assert all(t.weight == 2 for t in terms3)

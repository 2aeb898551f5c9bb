import math
import random

import pytest

from nsq.errors import GcdNotOne, NoMatchingRow
from nsq.quotient import (QuotientSpec, enumerate_Tp, frobenius_quotient,
                          generates_quotient, generators_thm,
                          minimal_quotient_generators, quotient_membership,
                          table1_generators, verify_generators)
from nsq.semigroup import (GeneratorList, build_membership, frobenius,
                           minimal_generators, semigroup_equal)


def Q(gens, p):
    return QuotientSpec(GeneratorList.of(*gens), p)


def random_coprime(rng, n, amax):
    while True:
        gens = sorted(set(rng.randint(2, amax) for _ in range(n)))
        if len(gens) >= 2 and math.gcd(*gens) == 1:
            return gens


class TestQuotientMembership:
    def test_5_6_by_3_members(self):
        t = quotient_membership(Q((5, 6), 3), 6)
        assert t.members() == [0, 2, 4, 5, 6]

    def test_p_one_is_identity(self):
        A = GeneratorList.of(3, 5)
        t1 = quotient_membership(QuotientSpec(A, 1), 10)
        t0 = build_membership(A, B=10)
        assert t1.bits == t0.bits

    def test_3_5_by_2(self):
        t = quotient_membership(Q((3, 5), 2), 6)
        assert t.members() == [0, 3, 4, 5, 6]

    def test_gcd_required(self):
        with pytest.raises(GcdNotOne):
            QuotientSpec(GeneratorList.of(4, 6), 2)


class TestEnumerateTp:
    def test_mixed_residue_pair_p3(self):
        ts = enumerate_Tp(Q((4, 11), 3))  # t = (1, 2)
        assert set(ts.tuples) == {(1, 1), (2, 2)}

    def test_equal_residue_pair_p3(self):
        ts = enumerate_Tp(Q((4, 7), 3))  # t = (1, 1)
        assert set(ts.tuples) == {(1, 2), (2, 1)}
        ts = enumerate_Tp(Q((5, 8), 3))  # t = (2, 2)
        assert set(ts.tuples) == {(1, 2), (2, 1)}

    def test_odd_pair_p2(self):
        ts = enumerate_Tp(Q((3, 5), 2))
        assert ts.tuples == ((1, 1),)
        assert ts.values == (4,)

    def test_p_one_empty(self):
        ts = enumerate_Tp(Q((3, 5), 1))
        assert ts.tuples == ()

    def test_values_are_members(self):
        rng = random.Random(31)
        for _ in range(20):
            gens = random_coprime(rng, rng.randint(2, 3), 30)
            p = rng.randint(2, 5)
            q = Q(gens, p)
            ts = enumerate_Tp(q)
            bound = max(ts.values, default=1)
            t = quotient_membership(q, bound)
            assert all(t.member(v) for v in ts.values)


class TestGeneratorsThm:
    def test_5_6_by_3_generators(self):
        assert generators_thm(Q((5, 6), 3)) == [2, 5]

    def test_even_odd_pair_p2(self):
        assert generators_thm(Q((4, 7), 2)) == [2, 7]

    def test_table1_row_4_11_14(self):
        gens = generators_thm(Q((4, 11, 14), 3))
        assert {4, 11, 14, 5, 6, 12, 13} <= set(gens)
        assert generates_quotient(gens, Q((4, 11, 14), 3))

    def test_quotient_by_member_is_naturals(self):
        report = verify_generators(Q((3, 5), 8))
        assert report.ok
        assert 1 in report.generators


class TestMinimalQuotientGenerators:
    def test_examples(self):
        assert minimal_quotient_generators(Q((5, 6), 3)) == [2, 5]
        assert minimal_quotient_generators(Q((3, 5), 2)) == [3, 4, 5]

    def test_p_one(self):
        A = GeneratorList.of(2, 4, 5)
        assert (minimal_quotient_generators(QuotientSpec(A, 1))
                == minimal_generators(A))

    def test_subset_of_thm_semigroup(self):
        rng = random.Random(37)
        for _ in range(10):
            gens = random_coprime(rng, 2, 25)
            p = rng.randint(2, 4)
            q = Q(gens, p)
            mg = minimal_quotient_generators(q)
            assert generates_quotient(mg, q)
            assert semigroup_equal(GeneratorList.from_iter(mg),
                                   GeneratorList.from_iter(generators_thm(q)))


class TestFrobeniusQuotient:
    def test_examples(self):
        assert frobenius_quotient(Q((5, 6), 3)) == 3
        assert frobenius_quotient(Q((5, 6), 4)) == 2
        assert frobenius_quotient(Q((3, 5), 8)) is None


class TestVerifyGenerators:
    def test_random_suite(self):
        rng = random.Random(41)
        for _ in range(40):
            n = rng.randint(2, 4)
            p = rng.randint(2, 6)
            gens = random_coprime(rng, n, 40)
            q = Q(gens, p)
            report = verify_generators(q)
            assert report.ok, (gens, p, report)

    def test_containment_and_naturals_iff(self):
        rng = random.Random(43)
        for _ in range(30):
            gens = random_coprime(rng, rng.randint(2, 3), 30)
            p = rng.randint(2, 6)
            A = GeneratorList.from_iter(gens)
            q = QuotientSpec(A, p)
            base = build_membership(A)
            f = frobenius(A)
            bound = (f or 0) + max(gens) + 1
            qt = quotient_membership(q, bound)
            assert all(qt.member(n) for n in range(bound + 1) if base.member(n))
            quotient_is_n = frobenius_quotient(q) is None
            assert quotient_is_n == base.member(p)


class TestTable1:
    def test_known_rows(self):
        assert table1_generators(Q((3, 5, 7), 2)) == [3, 4, 5, 6, 7]
        assert table1_generators(Q((3, 6, 7), 3)) == [1, 2, 7]
        assert table1_generators(Q((6, 7, 11), 3)) == [2, 6, 7, 11]

    def test_no_matching_row(self):
        with pytest.raises(NoMatchingRow):
            table1_generators(Q((3, 5, 7), 5))
        with pytest.raises(NoMatchingRow):
            table1_generators(Q((3, 5), 2))

    def test_rows_generate_quotient(self):
        rng = random.Random(47)
        cases = 0
        while cases < 30:
            p = rng.choice((2, 3))
            gens = sorted(set(rng.randint(2, 60) for _ in range(3)))
            if len(gens) != 3 or math.gcd(*gens) != 1:
                continue
            if all(a % p == 0 for a in gens):
                continue
            q = Q(gens, p)
            assert generates_quotient(table1_generators(q), q)
            cases += 1

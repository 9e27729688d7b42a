import math
from functools import reduce

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from numsgps import (
    EmptySemigroupComplement,
    InfiniteComplement,
    NotClosed,
    Semigroup,
    from_gaps,
    from_generators,
    gaps_label,
    gens_label,
    intersect,
    invariants,
    minimal_generators,
    parse_int_list,
    parse_label,
    pseudo_frobenius,
    schubert_index,
)

from conftest import brute_gap_sets, brute_pf, closure_holds

gen_lists = st.lists(st.integers(min_value=2, max_value=40), min_size=1, max_size=5)


def coprime(gens):
    return reduce(math.gcd, gens) == 1


class TestFromGenerators:
    def test_worked_example(self):
        assert from_generators([5, 7, 11, 13]).gaps == (1, 2, 3, 4, 6, 8, 9)

    def test_full_monoid(self):
        s = from_generators([1])
        assert s.is_natural and s.gaps == () and s.conductor == 0

    def test_common_factor_rejected(self):
        with pytest.raises(InfiniteComplement):
            from_generators([2, 4])

    def test_duplicates_dropped(self):
        assert from_generators([5, 5, 7, 7, 11, 13]) == from_generators([5, 7, 11, 13])

    def test_no_coprime_pair(self):
        s = from_generators([6, 10, 15])
        assert s.frobenius == 29
        assert closure_holds(s)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            from_generators([])
        with pytest.raises(ValueError):
            from_generators([0, 3])


class TestFromGaps:
    def test_worked_example(self):
        s = from_gaps([1, 2, 3, 4, 6, 8, 9])
        assert minimal_generators(s) == (5, 7, 11, 13)

    def test_empty(self):
        assert from_gaps([]).is_natural

    def test_not_closed(self):
        with pytest.raises(NotClosed):
            from_gaps([2])

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            from_gaps([3, 1])
        with pytest.raises(ValueError):
            from_gaps([0, 1])


class TestInvariants:
    def test_5_6_14(self):
        inv = invariants(from_generators([5, 6, 14]))
        assert inv == type(inv)(5, 8, 13, 14, 2)
        # matches 2g - 2t + 1 despite not having the PF profile
        assert inv.frobenius == 2 * inv.genus - 2 * inv.type + 1

    def test_full_monoid_conventions(self):
        inv = invariants(from_gaps([]))
        assert (inv.multiplicity, inv.genus, inv.frobenius, inv.conductor,
                inv.type) == (1, 0, -1, 0, 0)

    def test_2_3(self):
        inv = invariants(from_generators([2, 3]))
        assert (inv.multiplicity, inv.genus, inv.frobenius, inv.conductor,
                inv.type) == (2, 1, 1, 2, 1)


class TestPseudoFrobenius:
    def test_5_6_14(self):
        assert pseudo_frobenius(from_generators([5, 6, 14])) == (9, 13)

    def test_intersection_example(self):
        assert pseudo_frobenius(from_gaps([1, 2, 3, 4, 6, 8, 9])) == (6, 8, 9)

    def test_2_3(self):
        assert pseudo_frobenius(from_generators([2, 3])) == (1,)

    def test_full_monoid_raises(self):
        with pytest.raises(EmptySemigroupComplement):
            pseudo_frobenius(from_gaps([]))

    def test_against_brute_force(self, small_semigroups):
        for s in small_semigroups:
            if not s.is_natural:
                assert pseudo_frobenius(s) == brute_pf(s)
                assert set(s.pf) <= set(s.gaps)
                assert max(s.pf) == s.frobenius


class TestMinimalGenerators:
    def test_examples(self):
        assert minimal_generators(from_gaps([1, 2, 3, 4, 6, 8, 9])) == (5, 7, 11, 13)
        assert minimal_generators(from_gaps([])) == (1,)
        assert minimal_generators(from_gaps([1, 3])) == (2, 5)

    def test_round_trip_and_minimality(self, small_semigroups):
        for s in small_semigroups:
            gens = minimal_generators(s)
            assert from_generators(gens) == s
            for i in range(len(gens)):
                rest = gens[:i] + gens[i + 1:]
                if rest and reduce(math.gcd, rest) == 1:
                    assert from_generators(rest) != s


class TestIntersect:
    def test_three_way_example(self):
        parts = [from_gaps(g) for g in
                 ((1, 2, 3, 6), (1, 2, 3, 4, 8), (1, 2, 3, 4, 9))]
        assert reduce(intersect, parts) == from_generators([5, 7, 11, 13])

    def test_identity_and_idempotence(self):
        s = from_generators([5, 7, 11, 13])
        assert intersect(s, from_gaps([])) == s
        assert intersect(s, s) == s

    def test_gap_union_exhaustive_small(self):
        pool = [from_gaps(c) for g in range(6) for c in brute_gap_sets(g)]
        for a in pool:
            for b in pool:
                r = intersect(a, b)
                assert set(r.gaps) == set(a.gaps) | set(b.gaps)
        # commutative / associative on a sample triple
        a, b, c = pool[3], pool[10], pool[20]
        assert intersect(a, b) == intersect(b, a)
        assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))


class TestSchubertIndex:
    def test_examples(self):
        assert schubert_index(from_gaps([1, 2, 3, 4, 6, 8, 9])) == (0, 0, 0, 0, 1, 2, 2)
        assert schubert_index(from_gaps(range(1, 8))) == (0,) * 7
        assert schubert_index(from_gaps([1, 3])) == (0, 1)

    def test_weakly_increasing(self, small_semigroups):
        for s in small_semigroups:
            alpha = schubert_index(s)
            assert all(x >= 0 for x in alpha)
            assert all(p <= q for p, q in zip(alpha, alpha[1:]))


class TestSemigroupBasics:
    def test_membership_and_closure(self, small_semigroups):
        for s in small_semigroups:
            assert 0 in s
            assert closure_holds(s)
            assert len(s.gaps) == s.genus
            if not s.is_natural:
                assert s.frobenius == s.gaps[-1]
                assert s.conductor - 1 not in s

    def test_equality_hash(self):
        a = from_generators([3, 5])
        b = from_gaps([1, 2, 4, 7])
        assert a == b and hash(a) == hash(b)
        assert a != from_generators([3, 7])


@settings(max_examples=80, deadline=None)
@given(gen_lists)
def test_roundtrip_property(gens):
    assume(coprime(gens))
    s = from_generators(gens)
    assert from_gaps(s.gaps) == s
    assert from_gaps(s.gaps).gaps == s.gaps
    assert all(g in s for g in gens)


@settings(max_examples=60, deadline=None)
@given(gen_lists, gen_lists)
def test_intersection_property(ga, gb):
    assume(coprime(ga) and coprime(gb))
    a, b = from_generators(ga), from_generators(gb)
    r = intersect(a, b)
    assert set(r.gaps) == set(a.gaps) | set(b.gaps)
    assert intersect(a, b) == intersect(b, a)


class TestEncodings:
    def test_labels(self):
        s = from_generators([5, 7, 11, 13])
        assert gaps_label(s) == "gaps:1,2,3,4,6,8,9"
        assert gens_label(s) == "gens:5,7,11,13"
        assert parse_label(gaps_label(s)) == s
        assert parse_label(gens_label(s)) == s
        assert parse_label("gaps:").is_natural

    def test_strict_int_lists(self):
        assert parse_int_list("5,7,11") == (5, 7, 11)
        for bad in ("5, 7", "5;7", "a", "", "5,", "-3", "5 7"):
            with pytest.raises(ValueError):
                parse_int_list(bad)

import pytest

from numsgps import (
    EmptySemigroupComplement,
    GenusTooSmall,
    buchweitz_test,
    build_pf_semigroup,
    from_gaps,
    from_generators,
    gap_sumset,
    iter_semigroups,
)

from conftest import brute_sumset


class TestGapSumset:
    def test_n1_identity(self):
        s = from_gaps([1, 2, 3, 4, 6, 8, 9])
        assert gap_sumset(s, 1) == [1, 2, 3, 4, 6, 8, 9]

    def test_pairs_small(self):
        assert gap_sumset(from_gaps([1, 3]), 2) == [2, 4, 6]

    def test_paper_double_sumset_at_genus_26(self):
        # family member of (7,1,2,1); closed form of its doubled gap set
        g = 26
        s = build_pf_semigroup((7, 1, 2, 1), g)
        expected = sorted(set(range(2, 3 * g - 14 + 1))
                          | {4 * g - 40, 4 * g - 33, 4 * g - 32, 4 * g - 30, 4 * g - 29}
                          | set(range(4 * g - 26, 4 * g - 18 + 1)))
        assert gap_sumset(s, 2) == expected

    def test_matches_brute_force(self):
        for s in iter_semigroups(10):
            if s.is_natural:
                continue
            for n in (2, 3):
                assert gap_sumset(s, n) == brute_sumset(s.gaps, n)
            two = gap_sumset(s, 2)
            assert two[0] == 2 and two[-1] == 2 * s.frobenius

    def test_errors(self):
        with pytest.raises(EmptySemigroupComplement):
            gap_sumset(from_gaps([]), 2)
        with pytest.raises(ValueError):
            gap_sumset(from_gaps([1]), 0)


class TestBuchweitzTest:
    @pytest.mark.parametrize("g", range(2, 13))
    def test_ordinary_never_certifies(self, g):
        rep = buchweitz_test(from_gaps(range(1, g + 1)), 2)
        assert rep.cardinality == 2 * g - 1
        assert rep.threshold == 3 * (g - 1)
        assert not rep.is_buchweitz

    def test_known_positive_genus_16(self):
        s = from_gaps(tuple(range(1, 13)) + (19, 21, 24, 25))
        assert s.genus == 16
        assert buchweitz_test(s, 2).is_buchweitz

    def test_known_positive_fourfold_genus_99(self):
        g = 99
        s = from_gaps(tuple(range(1, g - 2)) + (2 * g - 29, 2 * g - 9, 2 * g - 5))
        assert s.genus == g
        assert buchweitz_test(s, 4).is_buchweitz

    def test_report_consistency(self):
        rep = buchweitz_test(from_gaps([1, 2, 3, 4, 6, 8, 9]), 2)
        assert rep.is_buchweitz == (rep.cardinality > rep.threshold)
        assert rep.threshold == 3 * (7 - 1)

    def test_small_genus_rejected(self):
        with pytest.raises(GenusTooSmall):
            buchweitz_test(from_generators([2, 3]), 2)
        with pytest.raises(GenusTooSmall):
            buchweitz_test(from_gaps([]), 2)

    def test_n_below_two_rejected(self):
        with pytest.raises(ValueError):
            buchweitz_test(from_gaps([1, 3]), 1)

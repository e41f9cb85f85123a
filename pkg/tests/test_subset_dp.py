import itertools

import pytest

from rsdh.field import gf
from rsdh.poly import symmetric_profile
from rsdh.subset_dp import subset_symmetric_dp


def brute_profiles(F, D, t):
    """All (e1, e2) realised by t-subsets of D, with the smallest subset for each."""
    found = {}
    for subset in itertools.combinations(sorted(D), t):
        prof = symmetric_profile(F, subset)
        found.setdefault((prof.e1, prof.e2), list(subset))
    return found


def test_empty_subset():
    assert subset_symmetric_dp(gf(5), range(5), 0, 0) == (True, [])
    assert subset_symmetric_dp(gf(5), range(5), 0, 0, 0) == (True, [])


def test_pair_summing_to_zero_in_gf4_does_not_exist():
    assert subset_symmetric_dp(gf(4), range(4), 2, 0) == (False, None)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_complement_of_one_point(q):
    F = gf(q)
    for b in range(q):
        ok, w = subset_symmetric_dp(F, range(q), q - 1, b)
        assert ok and w == [x for x in range(q) if x != F.neg(b)]


def test_gf3_pair_with_prescribed_products():
    assert subset_symmetric_dp(gf(3), range(3), 2, 0, 2) == (True, [1, 2])


@pytest.mark.parametrize("q,D", [(5, range(5)), (7, range(1, 7)), (8, range(8)), (9, [0, 2, 3, 5, 7, 8])])
def test_dp_matches_enumeration(q, D):
    F = gf(q)
    D = list(D)
    for t in range(len(D) + 1):
        expected = brute_profiles(F, D, t)
        for e1, e2 in itertools.product(range(q), repeat=2):
            ok, w = subset_symmetric_dp(F, D, t, e1, e2)
            assert ok == ((e1, e2) in expected)
            if ok:
                assert w == expected[(e1, e2)]  # lexicographically smallest
        sums = {e1 for e1, _ in expected}
        for e1 in range(q):
            assert subset_symmetric_dp(F, D, t, e1)[0] == (e1 in sums)


def test_t_out_of_range():
    with pytest.raises(ValueError):
        subset_symmetric_dp(gf(5), range(5), 6, 0)

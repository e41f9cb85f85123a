import itertools

import pytest

from rsdh.constructions import (
    FULL,
    STRICT,
    UNITS,
    WEAK,
    ConstructionSpec,
    all_units_pair_products,
    build_witness,
    discriminant,
    discriminant_witness,
    full_field_power_sums,
    in_target_set,
    power_sums,
    witness_pair_products,
    witness_pair_products_zero,
    witness_power_sums,
    witness_sum,
)
from rsdh.errors import NoWitness, OutOfRange
from rsdh.field import gf
from rsdh.poly import symmetric_profile
from rsdh.subset_dp import subset_symmetric_dp
from rsdh.sweep import construction_sweep, dp_realises


def test_sum_examples():
    assert witness_sum(gf(7), FULL, 2, 3) == [0, 3]
    assert witness_sum(gf(5), FULL, 3, 0) == [0, 1, 4]
    with pytest.raises(NoWitness):
        witness_sum(gf(4), FULL, 2, 0)
    for q in (4, 5, 7, 8, 9):
        with pytest.raises(NoWitness):
            witness_sum(gf(q), UNITS, q - 2, 0)
    with pytest.raises(OutOfRange):
        witness_sum(gf(5), UNITS, 5, 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_sum_impossibility_matches_dp(q):
    F = gf(q)
    for domain, D in ((FULL, range(q)), (UNITS, range(1, q))):
        for t in range(1, len(D) + 1):
            for b in range(q):
                exists, _ = subset_symmetric_dp(F, D, t, b)
                try:
                    w = witness_sum(F, domain, t, b)
                except NoWitness:
                    assert not exists, (domain, t, b)
                    continue
                assert exists
                assert len(set(w)) == t and set(w) <= set(D)
                assert symmetric_profile(F, w).e1 == b


def test_pair_products_small_example():
    F = gf(4)
    # enumerate pairs: {g, g^2} = {2, 3} is the only pair of units with product 1
    pairs = [s for s in itertools.combinations(range(1, 4), 2) if F.mul(*s) == 1]
    assert pairs == [(2, 3)]
    assert sorted(witness_pair_products(F, 2, 1, STRICT)) == [2, 3]


def test_pair_products_gf8():
    F = gf(8)
    w = witness_pair_products(F, 3, 1, STRICT)
    assert len(set(w)) == 3 and symmetric_profile(F, w).e2 == 1
    for c in range(1, 8):
        w = witness_pair_products(F, 4, c, WEAK)
        assert symmetric_profile(F, w).weak_e2(F) == c


def test_pair_products_ranges():
    with pytest.raises(OutOfRange):
        witness_pair_products(gf(7), 2, 1)
    with pytest.raises(OutOfRange):
        witness_pair_products(gf(8), 7, 1, STRICT)
    with pytest.raises(OutOfRange):
        witness_pair_products(gf(8), 6, 1, WEAK)
    with pytest.raises(OutOfRange):
        witness_pair_products(gf(8), 3, 0)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 16, 25])
def test_all_units_have_zero_pair_products(q):
    assert symmetric_profile(gf(q), all_units_pair_products(gf(q))).e2 == 0


def test_pair_products_zero_examples():
    F16 = gf(16)
    w = witness_pair_products_zero(F16, 4)
    assert len(set(w)) == 4 and 0 not in w and symmetric_profile(F16, w).e2 == 0
    assert subset_symmetric_dp(F16, range(1, 16), 4, symmetric_profile(F16, w).e1, 0)[0]
    F9 = gf(9)
    w = witness_pair_products_zero(F9, 3)
    assert len(set(w)) == 3 and 0 not in w and symmetric_profile(F9, w).e2 == 0
    w = witness_pair_products_zero(F16, 11)
    assert len(set(w)) == 11 and symmetric_profile(F16, w).weak_e2(F16) == 0
    with pytest.raises(OutOfRange):
        witness_pair_products_zero(F16, 6)
    with pytest.raises(OutOfRange):
        witness_pair_products_zero(F16, 8)


def test_power_sums_examples():
    F = gf(11)
    # exhaustive existence check over 4-subsets of GF(11)
    assert any(power_sums(F, s) == (0, 1) for s in itertools.combinations(range(11), 4))
    w = witness_power_sums(F, 4, 1)
    assert len(set(w)) == 4 and power_sums(F, w) == (0, 1)
    w = witness_power_sums(F, 7, 1)
    assert len(set(w)) == 7 and power_sums(F, w) == (0, 1)
    for q in (5, 7, 9, 11, 13):
        assert full_field_power_sums(gf(q)) == (0, 0)
    with pytest.raises(OutOfRange):
        witness_power_sums(F, 5, 1)  # (q-1)/2
    with pytest.raises(OutOfRange):
        witness_power_sums(gf(8), 4, 1)
    with pytest.raises(OutOfRange):
        witness_power_sums(gf(13), 5, 1, require_p_divides=True)


def test_discriminant_examples():
    F = gf(11)
    w = discriminant_witness(F, 4, 1, 1, 1, 0, 0)
    assert len(set(w)) == 4 and 0 not in w
    m_sq_minus_n = discriminant(F, w, 1)
    assert F.quadratic_character(m_sq_minus_n) != -1
    F13 = gf(13)
    for r, b, c in [(2, 5, 7), (3, 0, 11), (11, 4, 4)]:
        mu = F13.add(1, r)
        w = discriminant_witness(F13, 4, r, r, mu, b, c)
        assert in_target_set(F13, discriminant(F13, w, r), r, r, mu, b, c)
    with pytest.raises(OutOfRange):
        discriminant_witness(F, 3, 1, 1, 1, 0, 0)


def test_target_set_membership_by_enumeration():
    F = gf(7)
    for r, r1, mu, b, c in [(1, 1, 1, 0, 0), (2, 3, 5, 1, 4), (6, 2, 3, 5, 5)]:
        A = {F.add(F.sub(F.div(F.mul(a, a), mu), F.div(F.mul(F.mul(b, b), F.mul(r, r)), mu)),
                   F.mul(F.scalar(2), F.mul(c, r1))) for a in range(7)}
        assert {v for v in range(7) if in_target_set(F, v, r, r1, mu, b, c)} == A


def test_spec_dispatch_and_tags():
    F = gf(16)
    spec = ConstructionSpec("L6", F, 4)
    w = build_witness(spec)
    assert spec.check(w) and dp_realises(spec)
    assert ConstructionSpec("Thm1-Sum", gf(5), 3, {"b": 0}).build() == [0, 1, 4]
    with pytest.raises(OutOfRange):
        ConstructionSpec("L7", F, 4)
    with pytest.raises(OutOfRange):
        ConstructionSpec("cor1", F, 4).build()
    with pytest.raises(OutOfRange):
        ConstructionSpec("l6", F, 4, {"b": 1})


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16])
def test_construction_sweep_agrees_with_dp(q):
    rows = construction_sweep(q)
    assert rows and all(row.agree for row in rows)

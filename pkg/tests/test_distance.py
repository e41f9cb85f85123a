import itertools
import random

import pytest

from rsdh.code import RSCode, encode, hamming_distance, top_word
from rsdh.distance import (
    classify_deep_hole,
    consistency_check,
    distance_deg_k1,
    distance_deg_k2,
    dp_distance,
    error_distance,
    max_agreement_oracle,
    verify_witness,
)
from rsdh.errors import DegreeMismatch, InconsistencyDetected, TooLarge
from rsdh.field import gf
from rsdh.poly import Poly
from rsdh.results import EXACT, exact


def codeword_scan(code, u):
    """Distance by listing all q^k codewords."""
    return min(hamming_distance(encode(code, m), u)
               for m in itertools.product(range(code.q), repeat=code.k))


@pytest.mark.parametrize("q,k", [(4, 1), (4, 2), (5, 2), (7, 2), (8, 2)])
def test_oracle_matches_codeword_scan(q, k):
    F = gf(q)
    rng = random.Random(q * 10 + k)
    for code in (RSCode.standard(F, k), RSCode.primitive(F, k)):
        for _ in range(25):
            u = code.word([rng.randrange(q) for _ in range(code.n)])
            res = max_agreement_oracle(code, u)
            assert res.d == codeword_scan(code, u)
            assert verify_witness(code, u, res)


def test_oracle_cap(monkeypatch):
    code = RSCode.standard(gf(16), 8)
    u = top_word(code, 0)
    with pytest.raises(TooLarge):
        max_agreement_oracle(code, u, cap=100)
    monkeypatch.setenv("RSDH_ORACLE_CAP", "10")
    with pytest.raises(TooLarge):
        max_agreement_oracle(code, u)


def test_trivial_degrees():
    F = gf(3)
    code = RSCode.standard(F, 1)
    assert error_distance(code, code.word([2, 2, 2])).d == 0
    res = error_distance(code, code.word([0, 1, 2]))
    assert res.verdict == EXACT and res.d == 2


def test_x_cubed_over_gf5():
    F = gf(5)
    code = RSCode.standard(F, 2)
    u = code.word_from_poly(Poly.monomial(F, 3))
    res = error_distance(code, u)
    assert res.is_exact and res.d == 2
    assert max_agreement_oracle(code, u).d == 2
    is_deep, _ = classify_deep_hole(code, u)
    assert not is_deep


def test_degree_mismatch():
    F = gf(7)
    code = RSCode.standard(F, 2)
    with pytest.raises(DegreeMismatch):
        distance_deg_k1(code, top_word(code, 1, 1))
    with pytest.raises(DegreeMismatch):
        distance_deg_k2(code, top_word(code, 1))


@pytest.mark.parametrize("q", [5, 7, 8, 9])
def test_subset_route_matches_oracle(q):
    F = gf(q)
    rng = random.Random(q)
    for k in range(1, q - 2):
        for code in (RSCode.standard(F, k), RSCode.primitive(F, k)):
            for _ in range(6):
                r = rng.choice([r for r in (1, 2) if k + r <= code.n - 1])
                coeffs = [rng.randrange(q) for _ in range(k + r)] + [rng.randrange(1, q)]
                u = code.word_from_poly(Poly(F, coeffs))
                dp = dp_distance(code, u)
                assert dp.d == max_agreement_oracle(code, u).d
                assert verify_witness(code, u, dp)


def test_generalized_code_route():
    F = gf(8)
    code = RSCode.generalized(F, [1, 2, 3, 5, 6, 7], 2)
    for b, c in itertools.product(range(8), repeat=2):
        u = top_word(code, b, c)
        assert dp_distance(code, u).d == max_agreement_oracle(code, u).d


def test_deep_hole_of_degree_k():
    F = gf(7)
    code = RSCode.standard(F, 3)
    assert classify_deep_hole(code, code.word_from_poly(Poly.monomial(F, 3)))[0]


def test_codeword_is_consistent_everywhere():
    F = gf(7)
    code = RSCode.standard(F, 3)
    report = consistency_check(code, encode(code, [1, 2, 3]))
    assert report.ok
    assert all(r.d == 0 for r in report.verdicts.values())


def test_all_monic_quartics_over_gf7_are_consistent():
    F = gf(7)
    code = RSCode.standard(F, 2)
    for low in itertools.product(range(7), repeat=4):
        u = code.word_from_poly(Poly(F, list(low) + [1]))
        assert consistency_check(code, u).ok


def test_fault_injection_is_detected():
    F = gf(7)
    code = RSCode.standard(F, 2)
    u = top_word(code, 1)

    def perturbed(case):
        # the true value here is q-k-1
        return exact(case.q - case.k, "ClosedForm", "perturbed")

    with pytest.raises(InconsistencyDetected) as info:
        consistency_check(code, u, closed_form=perturbed)
    assert not info.value.report.ok

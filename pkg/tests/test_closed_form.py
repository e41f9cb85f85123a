import pytest

from rsdh.closed_form import ClosedFormCase, closed_form_distance
from rsdh.code import RSCode, top_word
from rsdh.distance import distance_deg_k1_from_top, distance_deg_k2_from_top, max_agreement_oracle
from rsdh.errors import OutOfTheoremRange
from rsdh.field import gf
from rsdh.results import EXACT, UNKNOWN, UPPER_BOUND


def verdict(kind, q, k, b, c=None, literal=False):
    F = gf(q)
    code = RSCode.standard(F, k) if kind == "standard" else RSCode.primitive(F, k)
    return closed_form_distance(ClosedFormCase.for_code(code, b, c), literal=literal)


def oracle(kind, q, k, b, c=None):
    F = gf(q)
    code = RSCode.standard(F, k) if kind == "standard" else RSCode.primitive(F, k)
    return max_agreement_oracle(code, top_word(code, b, c)).d


@pytest.mark.parametrize("kind,q,k,b,d", [
    ("standard", 4, 1, 0, 3),
    ("standard", 8, 5, 0, 3),
    ("primitive", 7, 4, 0, 2),
])
def test_degree_k1_special_clauses(kind, q, k, b, d):
    res = verdict(kind, q, k, b)
    assert res.verdict == EXACT and res.d == d == oracle(kind, q, k, b)


def test_degree_k1_generic_odd_characteristic():
    for q in (5, 7, 9):
        for k in range(1, q - 1):
            for b in range(q):
                assert verdict("standard", q, k, b).d == q - k - 1


def test_last_row_clauses():
    # k + 2 = q - 1 over GF(5)
    res = verdict("standard", 5, 2, 1, 1)
    assert res.verdict == EXACT and res.d == 1 == oracle("standard", 5, 2, 1, 1)
    res = verdict("standard", 5, 2, 1, 0)
    assert res.verdict == EXACT and res.d == 2 == oracle("standard", 5, 2, 1, 0)


def test_gf8_degree_three_deep_hole_is_found_by_dp():
    F = gf(8)
    code = RSCode.standard(F, 1)
    g = F.primitive_element()
    b, c = g, F.mul(g, g)
    assert distance_deg_k2_from_top(code, b, c).d == 7 == oracle("standard", 8, 1, b, c)


def test_characteristic_three_square_clause():
    F = gf(9)
    nonsquares = [c for c in range(1, 9) if F.quadratic_character(F.neg(c)) == -1]
    for c in nonsquares:
        res = verdict("standard", 9, 1, 0, c)
        assert res.verdict == EXACT and res.d == 8 == oracle("standard", 9, 1, 0, c)


def test_four_divides_k_plus_one_with_c_nonzero():
    for c in range(1, 8):
        res = verdict("standard", 8, 3, 5, c)
        assert res.verdict == EXACT and res.d == 3 == oracle("standard", 8, 3, 5, c)


def test_odd_characteristic_upper_bound():
    res = verdict("standard", 7, 2, 3, 1)
    assert res.verdict == UPPER_BOUND and res.d == 4
    assert oracle("standard", 7, 2, 3, 1) <= 4


def test_cubes_permuting_the_field_break_the_literal_bound():
    # x^3 permutes GF(5), so x^3 - b x^2 + c x can be a deep hole at k = 1
    literal = [verdict("standard", 5, 1, 0, c, literal=True) for c in range(5)]
    truth = [oracle("standard", 5, 1, 0, c) for c in range(5)]
    assert truth == [4, 2, 3, 3, 2]
    assert all(r.verdict == UPPER_BOUND and r.d == 3 for r in literal)
    assert not all(r.admits(d) for r, d in zip(literal, truth))
    assert all(verdict("standard", 5, 1, 0, c).verdict == UNKNOWN for c in range(5))


def test_out_of_range():
    with pytest.raises(OutOfTheoremRange):
        verdict("primitive", 5, 1, 0)
    with pytest.raises(OutOfTheoremRange):
        verdict("primitive", 7, 2, 0, 1)
    with pytest.raises(OutOfTheoremRange):
        verdict("standard", 7, 5, 0, 1)


def test_dp_agrees_with_exact_clauses_over_gf16():
    for k in range(1, 15):
        code = RSCode.standard(gf(16), k)
        for b in range(16):
            assert verdict("standard", 16, k, b).d == distance_deg_k1_from_top(code, b).d

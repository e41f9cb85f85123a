import random

import pytest

from rsdh.constructions import QuadraticForm, brute_force_count, quadratic_form_count
from rsdh.errors import CharacteristicTwo, ZeroCoefficient
from rsdh.field import gf


def test_examples():
    assert quadratic_form_count(QuadraticForm(gf(5), (1,), 0)) == 1
    form = QuadraticForm(gf(3), (1, 1), 1)
    assert brute_force_count(form) == quadratic_form_count(form) == 4
    # x^2 + y^2 + z^2 = 0 over GF(5): 25 + 5 * eta(0) = 25
    form = QuadraticForm(gf(5), (1, 1, 1), 0)
    assert brute_force_count(form) == quadratic_form_count(form) == 25


def test_invalid_forms():
    with pytest.raises(CharacteristicTwo):
        QuadraticForm(gf(4), (1,), 0)
    with pytest.raises(ZeroCoefficient):
        QuadraticForm(gf(5), (1, 0), 0)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_formula_matches_brute_force(q, n):
    F = gf(q)
    rng = random.Random(q * 100 + n)
    vectors = [(1,) * n] + [tuple(rng.randrange(1, q) for _ in range(n)) for _ in range(20)]
    for coeffs in vectors:
        for b in range(q):
            form = QuadraticForm(F, coeffs, b)
            assert quadratic_form_count(form) == brute_force_count(form)

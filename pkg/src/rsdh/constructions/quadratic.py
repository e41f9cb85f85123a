"""Number of solutions of a1 x1^2 + ... + an xn^2 = b over F_q, q odd."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import CharacteristicTwo, TooLarge, ZeroCoefficient
from ..field import Field

BRUTE_FORCE_CAP = 10**6


@dataclass(frozen=True)
class QuadraticForm:
    field: Field
    coeffs: tuple[int, ...]
    rhs: int

    def __post_init__(self):
        F = self.field
        if F.p == 2:
            raise CharacteristicTwo("diagonal quadratic form counts need odd characteristic")
        coeffs = tuple(F.coerce(a) for a in self.coeffs)
        if not coeffs:
            raise ValueError("a quadratic form needs at least one variable")
        if 0 in coeffs:
            raise ZeroCoefficient(f"coefficients must be nonzero, got {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "rhs", F.coerce(self.rhs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __call__(self, xs) -> int:
        F = self.field
        return F.sum(F.mul(a, F.mul(x, x)) for a, x in zip(self.coeffs, xs))


def _v(q: int, b: int) -> int:
    return q - 1 if b == 0 else -1


def quadratic_form_count(form: QuadraticForm) -> int:
    """Closed-form solution count.

    n odd:  q^{n-1} + q^{(n-1)/2} eta((-1)^{(n-1)/2} b a1...an)
    n even: q^{n-1} + v(b) q^{(n-2)/2} eta((-1)^{n/2} a1...an),
    with eta the quadratic character (eta(0) = 0), v(0) = q-1 and v(b) = -1
    otherwise.
    """
    F = form.field
    q, n = F.q, form.n
    det = 1
    for a in form.coeffs:
        det = F.mul(det, a)
    if n % 2:
        sign = F.pow(F.neg(1), (n - 1) // 2)
        eta = F.quadratic_character(F.mul(sign, F.mul(form.rhs, det)))
        return q ** (n - 1) + q ** ((n - 1) // 2) * eta
    sign = F.pow(F.neg(1), n // 2)
    eta = F.quadratic_character(F.mul(sign, det))
    return q ** (n - 1) + _v(q, form.rhs) * q ** ((n - 2) // 2) * eta


def brute_force_count(form: QuadraticForm, cap: int = BRUTE_FORCE_CAP) -> int:
    """Count solutions by trying all q^n tuples."""
    F = form.field
    total = F.q ** form.n
    if total > cap:
        raise TooLarge(f"q^n = {total} exceeds the brute-force cap {cap}")
    return sum(1 for xs in itertools.product(range(F.q), repeat=form.n) if form(xs) == form.rhs)

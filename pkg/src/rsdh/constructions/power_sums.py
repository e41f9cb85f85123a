"""Distinct elements with sum 0 and a prescribed sum of squares (p odd).

Small even t uses the symmetric family alpha, -alpha, y, -y, yg, -yg, ...,
y g^{t/2-2}, -y g^{t/2-2}: its sum is 0 and its sum of squares is
2 (alpha^2 + y^2 (1 - g^{t-2}) / (1 - g^2)).  The pair (alpha, y) is found
by an ascending scan.  Small odd t appends 0 to a witness of size t-1.
Large t takes the complement in F_q of a small witness for -zeta, because
all of F_q has sum 0 and sum of squares 0 once q > 3.
"""

from __future__ import annotations

from ..errors import OutOfRange
from ..field import Field
from ..poly import symmetric_profile


def power_sums(F: Field, elements) -> tuple[int, int]:
    """(sum x, sum x^2) of the given elements."""
    prof = symmetric_profile(F, elements)
    return prof.psum1, prof.psum2


def _verify(F, out, t, zeta):
    if len(out) != t or len(set(out)) != t:
        raise AssertionError(f"construction produced an invalid set {out}")
    got = power_sums(F, out)
    if got != (0, zeta):
        raise AssertionError(f"power sums {got}, expected (0, {zeta})")


def _symmetric_family(F: Field, t: int, zeta: int) -> list[int]:
    g = F.primitive_element()
    half = t // 2
    for alpha in range(1, F.q):
        for y in range(1, F.q):
            out = [alpha, F.neg(alpha)]
            for i in range(half - 1):
                v = F.mul(y, F.pow(g, i))
                out += [v, F.neg(v)]
            if len(set(out)) == t and power_sums(F, out) == (0, zeta):
                return out
    raise AssertionError(f"no (alpha, y) found for q={F.q}, t={t}, zeta={zeta}")


def _small_witness(F: Field, t: int, zeta: int) -> list[int]:
    if t % 2 == 0:
        return _symmetric_family(F, t, zeta)
    return [0] + _symmetric_family(F, t - 1, zeta)


def witness_power_sums(field: Field, t: int, zeta: int, require_p_divides: bool = False) -> list[int]:
    """t distinct elements of F_q with sum 0 and sum of squares zeta != 0.

    Requires p odd, 3 < t < q-3 and t not in {(q-1)/2, (q+1)/2}.  With
    ``require_p_divides`` the size must also be a multiple of p.
    """
    F = field
    zeta = F.coerce(zeta)
    q = F.q
    if F.p == 2:
        raise OutOfRange("power-sum witnesses need odd characteristic")
    if zeta == 0:
        raise OutOfRange("zeta must be nonzero")
    if not 3 < t < q - 3:
        raise OutOfRange(f"t={t} outside (3, {q - 3})")
    if 2 * t in (q - 1, q + 1):
        raise OutOfRange(f"t={t} equals (q-1)/2 or (q+1)/2")
    if require_p_divides and t % F.p:
        raise OutOfRange(f"t={t} is not a multiple of p={F.p}")
    if 2 * t < q - 1:
        out = _small_witness(F, t, zeta)
    else:
        small = set(_small_witness(F, q - t, F.neg(zeta)))
        out = [x for x in range(q) if x not in small]
    _verify(F, out, t, zeta)
    return sorted(out)


def full_field_power_sums(field: Field) -> tuple[int, int]:
    """(sum x, sum x^2) over all of F_q; both vanish when q > 3."""
    return power_sums(field, range(field.q))

"""Even-size sets of units whose discriminant m^2 - r n lands in a target set.

For t distinct units with m = sum y_i and n = sum y_i^2, the goal is

    m^2 - r n  in  A = { alpha^2 / mu - b^2 r^2 / mu + 2 c r1 : alpha in F_q }.

A value v lies in A iff mu (v - 2 c r1) + b^2 r^2 is a square (0 included).
Two structured families are scanned in ascending order: the symmetric
progressions {+-y g, ..., +-y g^{t/2}}, and {+-alpha1, +-z1 g, ...,
+-z1 g^{(t-2)/2}}.  The first family alone yields (q-1)/2 values and a
suitable anchored member adds one more, so together they meet A, which
has (q+1)/2 elements.
"""

from __future__ import annotations

from ..errors import OutOfRange, SearchExhausted
from ..field import Field
from ..poly import symmetric_profile


def discriminant(F: Field, elements, r: int) -> int:
    prof = symmetric_profile(F, elements)
    return F.sub(F.mul(prof.psum1, prof.psum1), F.mul(r, prof.psum2))


def in_target_set(F: Field, v: int, r: int, r1: int, mu: int, b: int, c: int) -> bool:
    """Whether v = alpha^2/mu - b^2 r^2/mu + 2 c r1 for some alpha."""
    two = F.scalar(2)
    shifted = F.sub(v, F.mul(two, F.mul(c, r1)))
    radicand = F.add(F.mul(mu, shifted), F.mul(F.mul(b, b), F.mul(r, r)))
    return F.quadratic_character(radicand) != -1


def _progression_family(F, g, t):
    for y in range(1, F.q):
        out = []
        for i in range(1, t // 2 + 1):
            v = F.mul(y, F.pow(g, i))
            out += [v, F.neg(v)]
        yield out


def _anchored_family(F, g, t):
    for alpha in range(1, F.q):
        for z in range(1, F.q):
            out = [alpha, F.neg(alpha)]
            for i in range(1, (t - 2) // 2 + 1):
                v = F.mul(z, F.pow(g, i))
                out += [v, F.neg(v)]
            yield out


def discriminant_witness(field: Field, t: int, r: int, r1: int, mu: int, b: int, c: int) -> list[int]:
    """t distinct units with m^2 - r n in A; needs p odd, t even, 2 < t < (q+1)/2."""
    F = field
    r, r1, mu, b, c = (F.coerce(v) for v in (r, r1, mu, b, c))
    if F.p == 2:
        raise OutOfRange("discriminant witnesses need odd characteristic")
    if 0 in (r, r1, mu):
        raise OutOfRange("r, r1 and mu must be nonzero")
    if t % 2:
        raise OutOfRange(f"t={t} must be even")
    if not 2 < t < (F.q + 1) / 2:
        raise OutOfRange(f"t={t} outside (2, {(F.q + 1) / 2})")
    g = F.primitive_element()
    for family in (_progression_family, _anchored_family):
        for out in family(F, g, t):
            if len(set(out)) != t or 0 in out:
                continue
            if in_target_set(F, discriminant(F, out, r), r, r1, mu, b, c):
                return out
    raise SearchExhausted(f"no member of either family works for q={F.q}, t={t}")

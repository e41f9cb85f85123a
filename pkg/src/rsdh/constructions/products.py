"""Distinct units with a prescribed sum of pairwise products.

``witness_pair_products`` handles characteristic 2 with c != 0: a
geometric progression sigma, sigma g, ..., sigma g^{t-1} has pairwise
product sum sigma^2 K for an explicit constant K, and squaring is a
bijection, so sigma = sqrt(c / K).

``witness_pair_products_zero`` reaches the target 0: the set
z + phi, z + 1, z + g, ..., z + g^{t-2} has vanishing pairwise product sum
once z is solved for, and phi is picked by an ascending scan that avoids
the finitely many values making two elements coincide or one vanish.
Large t is handled by the complement inside F_q^*.
"""

from __future__ import annotations

from ..errors import DegenerateConstant, OutOfRange
from ..field import Field
from ..poly import symmetric_profile

STRICT = "strict"
WEAK = "weak"


def _check_units(out, t):
    if len(out) != t or len(set(out)) != t or 0 in out:
        raise AssertionError(f"construction produced an invalid set {out}")


def _pair_sum(F: Field, elements, mode: str) -> int:
    """Sum over i < j (strict) or i <= j (weak) of x_i x_j."""
    prof = symmetric_profile(F, elements)
    return prof.e2 if mode == STRICT else prof.weak_e2(F)


def pair_product_constant(F: Field, t: int, mode: str) -> int:
    """K with sum of g^{i+j} over the progression 1, g, ..., g^{t-1} equal to K."""
    g = F.primitive_element()
    one_g = F.sub(1, g)
    one_g2 = F.sub(1, F.mul(g, g))
    if one_g == 0 or one_g2 == 0:
        raise DegenerateConstant(f"1 - g or 1 - g^2 vanishes in GF({F.q})")
    if mode == STRICT:
        num = F.mul(g, F.mul(F.sub(1, F.pow(g, t - 1)), F.sub(1, F.pow(g, t))))
    elif mode == WEAK:
        num = F.mul(F.sub(1, F.pow(g, t + 1)), F.sub(1, F.pow(g, t)))
    else:
        raise ValueError(f"mode must be {STRICT!r} or {WEAK!r}, got {mode!r}")
    return F.div(num, F.mul(one_g, one_g2))


def witness_pair_products(field: Field, t: int, c: int, mode: str = STRICT) -> list[int]:
    """t distinct units in characteristic 2 whose pair-product sum is c != 0.

    ``strict`` sums over i < j and needs 2 <= t <= q-2; ``weak`` sums over
    i <= j and needs 2 <= t <= q-3.
    """
    F = field
    c = F.coerce(c)
    if F.p != 2:
        raise OutOfRange("pair-product progressions need characteristic 2")
    if c == 0:
        raise OutOfRange("target must be nonzero; use witness_pair_products_zero")
    top = F.q - 2 if mode == STRICT else F.q - 3
    if not 2 <= t <= top:
        raise OutOfRange(f"t={t} outside [2, {top}] for mode {mode}")
    K = pair_product_constant(F, t, mode)
    if K == 0:
        raise DegenerateConstant(f"K vanishes for q={F.q}, t={t}, mode={mode}")
    sigma = F.sqrt_char2(F.div(c, K))
    g = F.primitive_element()
    out = [F.mul(sigma, F.pow(g, i)) for i in range(t)]
    _check_units(out, t)
    if _pair_sum(F, out, mode) != c:
        raise AssertionError(f"progression gives {_pair_sum(F, out, mode)}, expected {c}")
    return out


def all_units_pair_products(field: Field) -> list[int]:
    """Every unit; for q >= 4 their pair-product sum is 0."""
    F = field
    if F.q < 4:
        raise OutOfRange(f"the pair-product sum over all units vanishes only for q >= 4, got q={F.q}")
    out = list(range(1, F.q))
    if symmetric_profile(F, out).e2 != 0:
        raise AssertionError("pair-product sum over F_q^* is nonzero")
    return out


def _zero_divisibility_ok(F: Field, t: int) -> bool:
    return t % 4 == 0 if F.p == 2 else t % F.p == 0


def _small_zero_witness(F: Field, t: int) -> list[int]:
    g = F.primitive_element()
    gp = [F.pow(g, i) for i in range(t - 1)]  # g^{i-2} for i = 2..t
    one_g = F.sub(1, g)
    one_g2 = F.sub(1, F.mul(g, g))
    M1 = F.div(F.sub(1, F.pow(g, t - 1)), one_g)
    M2 = F.div(F.mul(g, F.mul(F.sub(1, F.pow(g, t - 2)), F.sub(1, F.pow(g, t - 1)))),
               F.mul(one_g, one_g2))
    two = F.scalar(2)

    excluded = {F.neg(M1)} | set(gp)
    for h in gp:
        denom = F.add(h, M1)
        if denom != 0:
            excluded.add(F.neg(F.div(F.add(M2, F.mul(h, M1)), denom)))
    for phi in range(1, F.q):
        if phi in excluded:
            continue
        if F.add(F.add(F.mul(phi, phi), F.mul(two, F.mul(phi, M1))), M2) == 0:
            continue
        z = F.div(F.add(F.mul(phi, M1), M2), F.add(phi, M1))
        return [F.add(z, phi)] + [F.add(z, h) for h in gp]
    raise AssertionError(f"no admissible phi for q={F.q}, t={t}")


def witness_pair_products_zero(field: Field, t: int) -> list[int]:
    """t distinct units with vanishing pair-product sum.

    For t with q - 2 - 2t > 0 the sum is over i < j and t must be a multiple
    of 4 (p = 2) or of p (p odd).  For t > q/2 the sum is over i <= j and the
    same divisibility is required of q - 1 - t.
    """
    F = field
    q = F.q
    if q < 4:
        raise OutOfRange(f"needs q >= 4, got q={q}")
    if 1 <= t and q - 2 - 2 * t > 0:
        if not _zero_divisibility_ok(F, t):
            raise OutOfRange(f"t={t} must be divisible by {4 if F.p == 2 else F.p}")
        out = _small_zero_witness(F, t)
        mode = STRICT
    elif 2 * t > q and t <= q - 1:
        s = q - 1 - t
        if not _zero_divisibility_ok(F, s):
            raise OutOfRange(f"q-1-t={s} must be divisible by {4 if F.p == 2 else F.p}")
        small = set(_small_zero_witness(F, s)) if s else set()
        out = [x for x in range(1, q) if x not in small]
        mode = WEAK
    else:
        raise OutOfRange(f"t={t} outside both ranges for q={q}")
    _check_units(out, t)
    if _pair_sum(F, out, mode) != 0:
        raise AssertionError(f"{mode} pair-product sum is {_pair_sum(F, out, mode)}, expected 0")
    return sorted(out)

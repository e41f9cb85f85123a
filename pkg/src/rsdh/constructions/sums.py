"""t distinct elements of F_q or F_q^* with a prescribed sum.

Recipes, by case:

* b != 0: scale a geometric progression of the primitive element g so that
  it sums to b (with 0 appended over F_q).
* b == 0, p odd: pair x with -x, plus 0 for odd t over F_q; over F_q^*
  odd t starts from a zero-sum triple z1 + z2 + z3 = 0.
* b == 0, p == 2: {g, ..., g^{t-2}} is completed by two elements g^i, g^j
  with g + ... + g^{t-2} + g^i = g^j, which exist by counting when t <= q/2;
  larger t uses the complement of a small zero-sum set.
* t >= |domain| - 1: complements of a single element / the whole domain.
"""

from __future__ import annotations

from ..errors import NoWitness, OutOfRange
from ..field import Field
from ..poly import symmetric_profile

FULL = "F_q"
UNITS = "F_q*"


def domain_elements(field: Field, domain: str) -> list[int]:
    if domain == FULL:
        return list(range(field.q))
    if domain == UNITS:
        return list(range(1, field.q))
    raise ValueError(f"domain must be {FULL!r} or {UNITS!r}, got {domain!r}")


def _geometric_sum_witness(F: Field, t: int, b: int) -> list[int]:
    # t nonzero elements b/s, b g/s, ..., b g^{t-1}/s with s = 1 + g + ... + g^{t-1}
    g = F.primitive_element() if F.q > 2 else 1
    powers = [F.pow(g, i) for i in range(t)]
    s = F.sum(powers)
    if s == 0:
        raise AssertionError(f"geometric sum vanished for t={t} < q-1")
    scale = F.div(b, s)
    return [F.mul(scale, x) for x in powers]


def _pairs(F: Field, count: int, exclude=()) -> list[int]:
    # `count` pairs {x, -x} of nonzero elements, smallest encodings first
    used = set(exclude)
    out = []
    for x in range(1, F.q):
        if len(out) == 2 * count:
            break
        if x in used or F.neg(x) in used:
            continue
        out += [x, F.neg(x)]
        used.update((x, F.neg(x)))
    if len(out) < 2 * count:
        raise AssertionError("ran out of +/- pairs")
    return out


def _zero_triple(F: Field) -> list[int]:
    # distinct nonzero z1, z2, z3 with z1 + z2 + z3 = 0
    for z2 in range(1, F.q):
        bad = {z2, F.neg(z2), F.neg(F.add(z2, z2))}
        two = F.add(1, 1)
        if two:
            bad.add(F.neg(F.div(z2, two)))
        for z1 in range(1, F.q):
            if z1 not in bad:
                return [z1, z2, F.neg(F.add(z1, z2))]
    raise NoWitness(f"no zero-sum triple of distinct units in GF({F.q})")


def _char2_zero_sum(F: Field, t: int) -> list[int]:
    # 3 <= t <= q/2: g, ..., g^{t-2} plus g^i, g^j outside that run with g^j = s + g^i
    g = F.primitive_element()
    run = [F.pow(g, i) for i in range(1, t - 1)]
    s = F.sum(run)
    rest = set(range(1, F.q)) - set(run)
    for gi in sorted(rest):
        gj = F.add(s, gi)
        if gj in rest and gj != gi:
            return run + [gi, gj]
    raise AssertionError(f"counting argument failed for q={F.q}, t={t}")


def _zero_sum_units_char2(F: Field, t: int) -> list[int]:
    """t distinct units summing to 0 in characteristic 2, 3 <= t <= q-4."""
    q = F.q
    if 2 * t <= q:
        return _char2_zero_sum(F, t)
    small = set(_char2_zero_sum(F, q - 1 - t))
    return [x for x in range(1, q) if x not in small]


def witness_sum(field: Field, domain: str, t: int, b: int) -> list[int]:
    """t distinct elements of ``domain`` summing to b, or NoWitness when none exist."""
    F = field
    b = F.coerce(b)
    elems = domain_elements(F, domain)
    size = len(elems)
    if not 1 <= t <= size:
        raise OutOfRange(f"t={t} outside [1, {size}]")
    q, p = F.q, F.p
    units = domain == UNITS

    if t == size:
        out = elems
    elif t == size - 1:
        # drop the element x with total - x = b
        x = F.sub(F.sum(elems), b)
        if x not in elems:
            raise NoWitness(f"{size - 1} elements of {domain} cannot sum to {b}")
        out = [y for y in elems if y != x]
    elif t == 1:
        if units and b == 0:
            raise NoWitness("a single unit cannot be 0")
        out = [b]
    elif b != 0:
        if units:
            out = _geometric_sum_witness(F, t, b)
        else:
            out = [0] + _geometric_sum_witness(F, t - 1, b)
    elif p != 2:
        if t % 2 == 0:
            out = _pairs(F, t // 2)
        elif not units:
            out = [0] + _pairs(F, (t - 1) // 2)
        else:
            triple = _zero_triple(F)
            exclude = triple + [F.neg(z) for z in triple]
            out = triple + _pairs(F, (t - 3) // 2, exclude)
    else:
        # characteristic 2, b = 0
        if t == 2:
            raise NoWitness("x1 + x2 = 0 forces x1 = x2 in characteristic 2")
        if units and t == q - 3:
            raise NoWitness("the two leftover units would have to coincide")
        if not units and t == q - 2:
            raise NoWitness("the two leftover elements would have to coincide")
        if units:
            out = _zero_sum_units_char2(F, t)
        elif t == q - 3:
            out = [0] + _zero_sum_units_char2(F, t - 1)
        elif 2 * t <= q:
            out = _char2_zero_sum(F, t)
        else:
            small = set(_char2_zero_sum(F, q - t))
            out = [x for x in range(q) if x not in small]

    _verify_sum(F, elems, out, t, b)
    return sorted(out)


def _verify_sum(F, elems, out, t, b):
    if len(out) != t or len(set(out)) != t or not set(out) <= set(elems):
        raise AssertionError(f"construction produced an invalid set {out}")
    total = symmetric_profile(F, out).e1
    if total != b:
        if t == len(elems):
            raise NoWitness(f"the whole domain sums to {total}, not {b}")
        raise AssertionError(f"construction sums to {total}, expected {b}")

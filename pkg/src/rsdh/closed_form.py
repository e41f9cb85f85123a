"""Closed-form error distances for words of degree k+1 and k+2.

The word is described by its monic top coefficients,
x^{k+1} - b x^k + ... or x^{k+2} - b x^{k+1} + c x^k + ..., over a standard
(D = F_q) or primitive (D = F_q^*) code.  The theorems pin the distance in
some parameter cells, bound it in others and say nothing in the rest; the
verdict records which, together with the clause that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import PRIMITIVE, STANDARD, RSCode
from .errors import OutOfTheoremRange
from .field import Field
from .results import CLOSED_FORM, UNKNOWN, UPPER_BOUND, DistanceResult, exact

UNCOVERED = "uncovered"


@dataclass(frozen=True)
class ClosedFormCase:
    kind: str
    field: Field
    k: int
    b: int
    c: int | None = None

    @classmethod
    def for_code(cls, code: RSCode, b: int, c: int | None = None) -> "ClosedFormCase":
        return cls(code.kind, code.field, code.k, b, c)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def r(self) -> int:
        return (self.k + 1) % self.p

    @property
    def s(self) -> int:
        return (self.q - self.k - 1) % self.p


def _bound(d, case):
    return DistanceResult(UPPER_BOUND, d, CLOSED_FORM, case)


def _unknown(detail):
    return DistanceResult(UNKNOWN, None, CLOSED_FORM, f"{UNCOVERED}: {detail}")


def _degree_k1_standard(cf: ClosedFormCase) -> DistanceResult:
    q, p, k, b = cf.q, cf.p, cf.k, cf.b
    if not 1 <= k <= q - 2:
        raise OutOfTheoremRange(f"standard code, degree k+1 needs 1 <= k <= q-2, got k={k}")
    if b == 0 and p == 2 and k == 1:
        return exact(q - k, CLOSED_FORM, "Thm1(i)(a) b=0, p=2, k=1")
    if b == 0 and p == 2 and k == q - 3:
        return exact(q - k, CLOSED_FORM, "Thm1(i)(b) b=0, p=2, k=q-3")
    return exact(q - k - 1, CLOSED_FORM, "Thm1(i) otherwise")


def _degree_k1_primitive(cf: ClosedFormCase) -> DistanceResult:
    q, p, k, b = cf.q, cf.p, cf.k, cf.b
    if q <= 5:
        raise OutOfTheoremRange(f"primitive codes need q > 5, got q={q}")
    if not 1 <= k <= q - 3:
        raise OutOfTheoremRange(f"primitive code, degree k+1 needs 1 <= k <= q-3, got k={k}")
    if b == 0 and p == 2 and k == 1:
        return exact(q - k - 1, CLOSED_FORM, "Thm1(ii)(a) b=0, p=2, k=1")
    if b == 0 and p == 2 and k == q - 4:
        return exact(q - k - 1, CLOSED_FORM, "Thm1(ii)(b) b=0, p=2, k=q-4")
    if b == 0 and k == q - 3:
        return exact(q - k - 1, CLOSED_FORM, "Thm1(ii)(c) b=0, k=q-3")
    if k == q - 3:
        return exact(q - k - 2, CLOSED_FORM, "Thm1(ii) otherwise, k+1=q-2")
    return exact(q - k - 2, CLOSED_FORM, "Thm1(ii) otherwise")


def _degree_k2_char2(cf: ClosedFormCase, b2: int) -> DistanceResult:
    q, k, b, c = cf.q, cf.k, cf.b, cf.c
    half = q / 2
    if (k + 1) % 2 == 0 and (k + 1) % 4 != 0:
        if b2 != c:
            return exact(q - k - 2, CLOSED_FORM, "Thm2(ii)(a) 2|k+1, 4!|k+1, b^2!=c")
        if k + 2 > half:
            return exact(q - k - 2, CLOSED_FORM, "Thm2(ii)(a) 2|k+1, 4!|k+1, b^2=c, k+2>q/2")
        return _unknown("p=2, 2|k+1, 4!|k+1, b^2=c, k+2<=q/2")
    if (k + 1) % 4 == 0:
        if c != 0:
            return exact(q - k - 2, CLOSED_FORM, "Thm2(ii)(a) 4|k+1, c!=0")
        if k + 2 < half:
            return exact(q - k - 2, CLOSED_FORM, "Thm2(ii)(a) 4|k+1, c=0, k+2<q/2")
        return _bound(q - k - 1, "Thm2(ii)(b) 4|k+1, c=0, k+2>=q/2")
    # k even
    if k % 4 == 0:
        return _bound(q - k - 1, "Thm2(ii)(b) 4|k")
    if b != 0:
        return _bound(q - k - 1, "Thm2(ii)(b) 2|k, 4!|k, b!=0")
    if c != 0:
        return _bound(q - k - 1, "Thm2(ii)(b) 2|k, 4!|k, c!=0")
    if k + 1 > half:
        return _bound(q - k - 1, "Thm2(ii)(b) 2|k, 4!|k, b=c=0, k+1>q/2")
    return _unknown("p=2, 2|k, 4!|k, b=c=0, k+1<=q/2")


def _degree_k2_odd(cf: ClosedFormCase, literal: bool) -> DistanceResult:
    F = cf.field
    q, p, k, b, c = cf.q, cf.p, cf.k, cf.b, cf.c
    if (k + 2) % p != 0:
        # The bound's derivation needs k+1 > 2.  At k=1 it fails whenever x^3 permutes
        # F_q (q = 5, 11, ...), where x^3 - b x^2 + c x is a deep hole.
        if k == 1 and not literal:
            return _unknown("p odd, p!|k+2, k=1")
        return _bound(q - k - 1, "Thm2(iii) p!|k+2")
    if b != 0:
        return exact(q - k - 2, CLOSED_FORM, "Thm2(iii)(b) p|k+2, b!=0")
    if c != 0:
        minus_c_is_nonzero_square = F.quadratic_character(F.neg(c)) == 1
        if p == 3 and k + 2 == 3 and not minus_c_is_nonzero_square:
            return exact(q - k, CLOSED_FORM, "Thm2(iii)(c) p=3, k+2=3, -c not a nonzero square")
        if p == 3 and k + 2 == q - 3 and not minus_c_is_nonzero_square:
            return exact(q - k - 1, CLOSED_FORM, "Thm2(iii)(c) p=3, k+2=q-3, -c not a nonzero square")
        return exact(q - k - 2, CLOSED_FORM, "Thm2(iii)(c) p|k+2, b=0, c!=0 otherwise")
    if k + 2 > q / 2 + 1:
        return _bound(q - k - 1, "Thm2(iii)(a) p|k+2, b=c=0, k+2>q/2+1")
    return _unknown("p odd, p|k+2, b=c=0, k+2<=q/2+1")


def _degree_k2_standard(cf: ClosedFormCase, literal: bool) -> DistanceResult:
    F = cf.field
    q, k, b, c = cf.q, cf.k, cf.b, cf.c
    if cf.kind != STANDARD:
        raise OutOfTheoremRange("degree k+2 closed forms cover standard codes only")
    if not (k >= 1 and k + 2 <= q - 1):
        raise OutOfTheoremRange(f"degree k+2 needs k >= 1 and k+2 <= q-1, got k={k}, q={q}")
    b2 = F.mul(b, b)
    if k + 2 == q - 1:
        if b2 == c:
            return exact(q - k - 2, CLOSED_FORM, "Thm2(i) k+2=q-1, b^2=c")
        return exact(q - k - 1, CLOSED_FORM, "Thm2(i) k+2=q-1, b^2!=c")
    if cf.p == 2:
        return _degree_k2_char2(cf, b2)
    return _degree_k2_odd(cf, literal)


def closed_form_distance(case: ClosedFormCase, literal: bool = False) -> DistanceResult:
    """Verdict from the theorem table; Exact, UpperBound or Unknown with its clause.

    With ``literal=True`` every clause is applied exactly as stated, including
    the odd-characteristic p!|k+2 bound at k=1, which exhaustive search refutes
    for q in {5, 11}.  The default reports those cells as Unknown.
    """
    if case.c is None:
        if case.kind == STANDARD:
            return _degree_k1_standard(case)
        if case.kind == PRIMITIVE:
            return _degree_k1_primitive(case)
        raise OutOfTheoremRange(f"no closed form for {case.kind} codes")
    return _degree_k2_standard(case, literal)

"""Error distance d(u, C) of a received word to a Reed-Solomon code.

Three independent routes:

* ``max_agreement_oracle``: exhaustive over k-subsets of D.  Any codeword
  agreeing with u in at least k places is the interpolant of k of them, and
  some codeword always agrees in k places, so n minus the best agreement is
  the distance.
* ``distance_deg_k1`` / ``distance_deg_k2``: for deg u = k + r, r in {1, 2},
  d = n - k - r iff u - v splits as a product of k + r distinct linear
  factors over D for some v of degree < k, and d <= n - k - 1 iff a
  (k+1)-subset of D times one further monic linear factor (x - a) works.
  Both reduce to prescribing (e1, e2) of a subset, decided by the profile DP.
* ``closed_form_distance`` in :mod:`rsdh.closed_form`.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .code import RSCode, ReceivedWord, STANDARD, PRIMITIVE, hamming_distance, top_coefficients, word_degree
from .errors import DegreeMismatch, InconsistencyDetected, OutOfTheoremRange, TooLarge, Undecidable
from .closed_form import ClosedFormCase, closed_form_distance
from .poly import Poly, ZERO_DEGREE, monic_from_roots
from .results import CLOSED_FORM, ORACLE, SUBSET_DP, UPPER_BOUND, DistanceResult, Witness, exact
from .subset_dp import profile_table

DEFAULT_ORACLE_CAP = 10**7


def oracle_cap() -> int:
    return int(os.environ.get("RSDH_ORACLE_CAP", DEFAULT_ORACLE_CAP))


# -- exhaustive oracle ------------------------------------------------------------

def _agreement(F, xs, ys, subset):
    """Agreements between u and the interpolant of u on ``subset`` (Newton form)."""
    sx = [xs[i] for i in subset]
    coef = [ys[i] for i in subset]
    k = len(sx)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            coef[i] = F.div(F.sub(coef[i], coef[i - 1]), F.sub(sx[i], sx[i - level]))
    count = 0
    for x, y in zip(xs, ys):
        acc = coef[k - 1]
        for i in range(k - 2, -1, -1):
            acc = F.add(F.mul(acc, F.sub(x, sx[i])), coef[i])
        if acc == y:
            count += 1
    return count, coef, sx


def _newton_eval(F, coef, sx, x):
    acc = coef[-1]
    for i in range(len(coef) - 2, -1, -1):
        acc = F.add(F.mul(acc, F.sub(x, sx[i])), coef[i])
    return acc


def max_agreement_oracle(code: RSCode, u: ReceivedWord, cap: int | None = None) -> DistanceResult:
    """Exact distance by trying the interpolant through every k-subset of D."""
    cap = oracle_cap() if cap is None else cap
    n, k = code.n, code.k
    if math.comb(n, k) > cap:
        raise TooLarge(f"C({n},{k}) = {math.comb(n, k)} exceeds the oracle cap {cap}")
    F = code.field
    xs, ys = code.D, u.values
    best, best_fit = -1, None
    for subset in itertools.combinations(range(n), k):
        count, coef, sx = _agreement(F, xs, ys, subset)
        if count > best:
            best, best_fit = count, (coef, sx)
            if best == n:
                break
    coef, sx = best_fit
    nearest = tuple(_newton_eval(F, coef, sx, x) for x in xs)
    return exact(n - best, ORACLE, witness=Witness(codeword=nearest))


# -- subset characterisation ---------------------------------------------------------

def distance_deg_k1_from_top(code: RSCode, b: int) -> DistanceResult:
    k, n = code.k, code.n
    table = profile_table(code.field, tuple(sorted(code.D)), k + 1, False)
    w = table.witness(k + 1, b)
    if w is not None:
        return exact(n - k - 1, SUBSET_DP, witness=Witness(elements=tuple(w)))
    return exact(n - k, SUBSET_DP)


def distance_deg_k1(code: RSCode, u: ReceivedWord) -> DistanceResult:
    if word_degree(u) != code.k + 1:
        raise DegreeMismatch(f"expected deg(u) = k+1 = {code.k + 1}, got {word_degree(u)}")
    b, _ = top_coefficients(code, u)
    return distance_deg_k1_from_top(code, b)


def distance_deg_k2_from_top(code: RSCode, b: int, c: int) -> DistanceResult:
    F = code.field
    k, n = code.k, code.n
    table = profile_table(F, tuple(sorted(code.D)), k + 2, True)
    w = table.witness(k + 2, b, c)
    if w is not None:
        return exact(n - k - 2, SUBSET_DP, witness=Witness(elements=tuple(w)))
    # (x_1..x_{k+1}) and an extra root a: e1 = b - a, e2 = c - a (b - a)
    for a in range(F.q):
        e1 = F.sub(b, a)
        e2 = F.sub(c, F.mul(a, e1))
        if table.exists(k + 1, e1, e2):
            w = table.witness(k + 1, e1, e2)
            return exact(n - k - 1, SUBSET_DP,
                         witness=Witness(elements=tuple(w), extra_root=a, quotient=Poly(F, [F.neg(a), 1])))
    return exact(n - k, SUBSET_DP)


def distance_deg_k2(code: RSCode, u: ReceivedWord) -> DistanceResult:
    if word_degree(u) != code.k + 2:
        raise DegreeMismatch(f"expected deg(u) = k+2 = {code.k + 2}, got {word_degree(u)}")
    b, c = top_coefficients(code, u)
    return distance_deg_k2_from_top(code, b, c)


def _trivial_distance(code: RSCode, u: ReceivedWord, method: str) -> DistanceResult | None:
    deg = word_degree(u)
    if deg == ZERO_DEGREE or deg < code.k:
        return exact(0, method, "deg(u)<k codeword")
    if deg == code.k:
        return exact(code.n - code.k, method, "deg(u)=k deep hole")
    return None


def dp_distance(code: RSCode, u: ReceivedWord) -> DistanceResult:
    """Subset-characterisation distance for deg u <= k + 2."""
    trivial = _trivial_distance(code, u, SUBSET_DP)
    if trivial is not None:
        return trivial
    r = word_degree(u) - code.k
    if r == 1:
        return distance_deg_k1(code, u)
    if r == 2:
        return distance_deg_k2(code, u)
    raise DegreeMismatch(f"the subset route covers deg(u) <= k+2, got deg(u) = k+{r}")


# -- dispatch -----------------------------------------------------------------------------

def closed_form_for_word(code: RSCode, u: ReceivedWord, table: Callable | None = None) -> DistanceResult:
    trivial = _trivial_distance(code, u, CLOSED_FORM)
    if trivial is not None:
        return trivial
    r = word_degree(u) - code.k
    if r not in (1, 2) or code.kind not in (STANDARD, PRIMITIVE):
        raise OutOfTheoremRange(f"no closed form for kind={code.kind}, deg(u)=k+{r}")
    b, c = top_coefficients(code, u)
    case = ClosedFormCase.for_code(code, b, c)
    return (table or closed_form_distance)(case)


def error_distance(code: RSCode, u: ReceivedWord) -> DistanceResult:
    """Best available verdict: exact closed form, else DP, else oracle."""
    trivial = _trivial_distance(code, u, CLOSED_FORM)
    if trivial is not None:
        return trivial
    try:
        result = closed_form_for_word(code, u)
        if result.is_exact:
            return result
    except OutOfTheoremRange:
        pass
    if word_degree(u) - code.k in (1, 2):
        return dp_distance(code, u)
    try:
        return max_agreement_oracle(code, u)
    except TooLarge:
        lower, upper = code.n - word_degree(u), code.n - code.k
        return DistanceResult(UPPER_BOUND, upper, CLOSED_FORM, f"degree bounds [{lower}, {upper}]")


def classify_deep_hole(code: RSCode, u: ReceivedWord) -> tuple[bool, DistanceResult]:
    result = error_distance(code, u)
    if not result.is_exact:
        raise Undecidable(f"cannot decide whether u is a deep hole: {result.to_json()}")
    return result.d == code.n - code.k, result


# -- witnesses and cross-checks -----------------------------------------------------------

def verify_witness(code: RSCode, u: ReceivedWord, result: DistanceResult) -> bool:
    w = result.witness
    if w is None:
        return True
    F = code.field
    if w.codeword is not None:
        cw = code.word(w.codeword)
        return word_degree(cw) < code.k and hamming_distance(cw, u) == result.d
    elements = list(w.elements)
    if len(set(elements)) != len(elements) or not set(elements) <= set(code.D):
        return False
    product = monic_from_roots(F, elements)
    if w.quotient is not None:
        product = product * w.quotient
    elif w.extra_root is not None:
        product = product * Poly(F, [F.neg(w.extra_root), 1])
    if product.degree != word_degree(u):
        return False
    rest = u.interp.monic() - product
    if not (rest.is_zero or rest.degree <= code.k - 1):
        return False
    return result.d == code.n - len(elements)


@dataclass
class ConsistencyReport:
    verdicts: dict = dc_field(default_factory=dict)
    issues: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def to_json(self) -> dict:
        return {"ok": self.ok, "issues": list(self.issues),
                "verdicts": {m: r.to_json() for m, r in self.verdicts.items()}}


def consistency_check(code: RSCode, u: ReceivedWord, closed_form: Callable | None = None,
                      cap: int | None = None) -> ConsistencyReport:
    """Run every applicable method and check that they agree.

    ``closed_form`` replaces the theorem table, which is how fault injection
    is tested.  Raises InconsistencyDetected carrying the report.
    """
    report = ConsistencyReport()
    try:
        report.verdicts[ORACLE] = max_agreement_oracle(code, u, cap)
    except TooLarge:
        pass
    deg = word_degree(u)
    if deg == ZERO_DEGREE or deg <= code.k + 2:
        report.verdicts[SUBSET_DP] = dp_distance(code, u)
    try:
        report.verdicts[CLOSED_FORM] = closed_form_for_word(code, u, closed_form)
    except OutOfTheoremRange:
        pass

    exact_values = {m: r.d for m, r in report.verdicts.items() if r.is_exact}
    if len(set(exact_values.values())) > 1:
        report.issues.append(f"exact verdicts disagree: {exact_values}")
    if exact_values:
        truth = next(iter(exact_values.values()))
        for m, r in report.verdicts.items():
            if not r.admits(truth):
                report.issues.append(f"{m} verdict {r.verdict}:{r.d} excludes the distance {truth}")
        if deg != ZERO_DEGREE and deg >= code.k and not code.n - deg <= truth <= code.n - code.k:
            report.issues.append(f"distance {truth} violates [n - deg u, n - k]")
    for m, r in report.verdicts.items():
        if not verify_witness(code, u, r):
            report.issues.append(f"{m} witness does not certify d={r.d}")
    if report.issues:
        raise InconsistencyDetected("; ".join(report.issues), report)
    return report

"""Dense univariate polynomials over a finite field.

Coefficients are stored ascending as field encodings with no trailing zeros;
the zero polynomial has an empty coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateNode, FieldMismatch, ParseError
from .field import Field

ZERO_DEGREE = -math.inf


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        values = [field.coerce(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.field = field
        self.coeffs = tuple(values)

    @classmethod
    def monomial(cls, field: Field, degree: int, coef: int = 1) -> "Poly":
        return cls(field, [0] * degree + [coef])

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, [0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coef(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self.coef(i), other.coef(i)) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        F = self.field
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        F = self.field
        c = F.coerce(c)
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading))

    def __call__(self, x) -> int:
        return evaluate(self, x)

    def __repr__(self):
        return f"Poly({self.field!r}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def to_text(self) -> str:
        """Comma-separated ascending encodings, the CLI wire form."""
        return ",".join(map(str, self.coeffs)) or "0"


def evaluate(f: Poly, x) -> int:
    """Horner evaluation."""
    F = f.field
    x = F.coerce(x)
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def lagrange_interpolate(field: Field, points: Sequence[tuple]) -> Poly:
    """The unique polynomial of degree <= n-1 through ``points``.

    Built term by term as u_i * prod_{j != i} (x - x_j) / (x_i - x_j).
    """
    F = field
    xs = [F.coerce(x) for x, _ in points]
    ys = [F.coerce(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateNode("interpolation nodes must be pairwise distinct")
    total = [0] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = _mul_linear(F, basis, xj)
            denom = F.mul(denom, F.sub(xi, xj))
        scale = F.div(yi, denom)
        for d, c in enumerate(basis):
            total[d] = F.add(total[d], F.mul(scale, c))
    return Poly(F, total)


def _mul_linear(F: Field, coeffs: list[int], root: int) -> list[int]:
    # coeffs * (x - root)
    out = [0] * (len(coeffs) + 1)
    neg_root = F.neg(root)
    for d, c in enumerate(coeffs):
        out[d + 1] = F.add(out[d + 1], c)
        out[d] = F.add(out[d], F.mul(c, neg_root))
    return out


def monic_from_roots(field: Field, roots: Iterable) -> Poly:
    coeffs = [1]
    for r in roots:
        coeffs = _mul_linear(field, coeffs, field.coerce(r))
    return Poly(field, coeffs)


@dataclass(frozen=True)
class SymmetricProfile:
    """First two elementary symmetric functions and power sums of a value list."""

    t: int
    e1: int
    e2: int
    psum1: int
    psum2: int

    def weak_e2(self, field: Field) -> int:
        """sum_{i <= j} y_i y_j  =  e2 + psum2."""
        return field.add(self.e2, self.psum2)


def symmetric_profile(field: Field, values: Iterable) -> SymmetricProfile:
    F = field
    e1 = e2 = psum2 = 0
    t = 0
    for y in values:
        y = F.coerce(y)
        e2 = F.add(e2, F.mul(e1, y))
        e1 = F.add(e1, y)
        psum2 = F.add(psum2, F.mul(y, y))
        t += 1
    return SymmetricProfile(t=t, e1=e1, e2=e2, psum1=e1, psum2=psum2)


def parse_coefficients(field: Field, text: str) -> Poly:
    """Parse the comma-separated ascending-encoding form, e.g. ``"1,0,2"``."""
    parts = text.split(",")
    coeffs = []
    pos = 0
    for part in parts:
        token = part.strip()
        try:
            value = int(token)
        except ValueError:
            raise ParseError("expected an integer encoding", text, pos) from None
        if not 0 <= value < field.q:
            raise ParseError(f"encoding {value} outside [0, {field.q})", text, pos)
        coeffs.append(value)
        pos += len(part) + 1
    return Poly(field, coeffs)


"""Generalized, standard and primitive Reed-Solomon codes.

A code is an ordered evaluation set D of n distinct field points plus a
dimension k; codewords are the evaluations of polynomials of degree < k.
Received words keep their Lagrange interpolant, whose degree drives every
distance computation in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import DegreeOutOfRange, DuplicateNode, FieldMismatch, LengthMismatch
from .field import Field
from .poly import Poly, ZERO_DEGREE, evaluate, lagrange_interpolate

STANDARD = "standard"
PRIMITIVE = "primitive"
GENERALIZED = "generalized"


@dataclass(frozen=True)
class RSCode:
    field: Field
    D: tuple[int, ...]
    k: int
    kind: str = dc_field(init=False)

    def __post_init__(self):
        D = tuple(self.field.coerce(x) for x in self.D)
        object.__setattr__(self, "D", D)
        if len(set(D)) != len(D):
            raise DuplicateNode("evaluation points must be pairwise distinct")
        if not 1 <= self.k < len(D):
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={len(D)}")
        q = self.field.q
        points = sorted(D)
        if points == list(range(q)):
            kind = STANDARD
        elif points == list(range(1, q)):
            kind = PRIMITIVE
        else:
            kind = GENERALIZED
        object.__setattr__(self, "kind", kind)

    @classmethod
    def standard(cls, field: Field, k: int) -> "RSCode":
        return cls(field, tuple(range(field.q)), k)

    @classmethod
    def primitive(cls, field: Field, k: int) -> "RSCode":
        return cls(field, tuple(range(1, field.q)), k)

    @classmethod
    def generalized(cls, field: Field, D: Sequence[int], k: int) -> "RSCode":
        return cls(field, tuple(D), k)

    @property
    def n(self) -> int:
        return len(self.D)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def min_distance(self) -> int:
        return self.n - self.k + 1

    @property
    def covering_radius(self) -> int:
        return self.n - self.k

    def word(self, values: Sequence[int]) -> "ReceivedWord":
        values = tuple(self.field.coerce(v) for v in values)
        if len(values) != self.n:
            raise LengthMismatch(f"word has {len(values)} symbols, code length is {self.n}")
        interp = lagrange_interpolate(self.field, list(zip(self.D, values)))
        return ReceivedWord(values, interp)

    def word_from_poly(self, poly: Poly) -> "ReceivedWord":
        """The word (poly(x_1), ..., poly(x_n)); poly must have degree <= n-1."""
        if poly.field != self.field:
            raise FieldMismatch("polynomial over a different field")
        if poly.degree > self.n - 1:
            raise DegreeOutOfRange(
                f"degree {poly.degree} exceeds n-1={self.n - 1}; the word would not determine it")
        values = tuple(evaluate(poly, x) for x in self.D)
        return ReceivedWord(values, poly)

    def __repr__(self):
        return f"RSCode({self.field!r}, kind={self.kind}, n={self.n}, k={self.k})"


@dataclass(frozen=True)
class ReceivedWord:
    values: tuple[int, ...]
    interp: Poly

    @property
    def degree(self):
        return self.interp.degree

    def __len__(self):
        return len(self.values)


def encode(code: RSCode, message: Sequence[int]) -> ReceivedWord:
    """Evaluate the message polynomial a_0 + a_1 x + ... + a_{k-1} x^{k-1} on D."""
    if len(message) != code.k:
        raise LengthMismatch(f"message has {len(message)} symbols, k={code.k}")
    return code.word_from_poly(Poly(code.field, message))


def word_degree(u: ReceivedWord):
    """Degree of the interpolant; ``-inf`` for the all-zero word."""
    return u.interp.degree


def hamming_distance(a, b) -> int:
    va = a.values if isinstance(a, ReceivedWord) else tuple(a)
    vb = b.values if isinstance(b, ReceivedWord) else tuple(b)
    if len(va) != len(vb):
        raise LengthMismatch(f"lengths {len(va)} and {len(vb)} differ")
    return sum(x != y for x, y in zip(va, vb))


def degree_bounds(code: RSCode, u: ReceivedWord) -> tuple[int, int]:
    """(n - deg u, n - k), valid for k <= deg u <= n-1."""
    deg = word_degree(u)
    if deg == ZERO_DEGREE or deg < code.k:
        raise DegreeOutOfRange(f"deg(u)={deg} < k={code.k}: u is a codeword, distance 0")
    return code.n - deg, code.n - code.k


def top_coefficients(code: RSCode, u: ReceivedWord) -> tuple[int, int | None]:
    """(b, c) of the monic interpolant written x^{k+r} - b x^{k+r-1} + c x^{k+r-2} + ...

    Only meaningful for r in {1, 2}; c is None when deg u = k + 1.
    """
    deg = word_degree(u)
    r = deg - code.k
    if r not in (1, 2):
        raise DegreeOutOfRange(f"top coefficients need deg(u) in {{k+1, k+2}}, got {deg}")
    F = code.field
    monic = u.interp.monic()
    b = F.neg(monic.coef(deg - 1))
    c = monic.coef(deg - 2) if r == 2 else None
    return b, c


def top_word(code: RSCode, b: int, c: int | None = None) -> ReceivedWord:
    """The word of x^{k+1} - b x^k, or x^{k+2} - b x^{k+1} + c x^k when c is given."""
    F = code.field
    k = code.k
    if c is None:
        coeffs = [0] * k + [F.neg(b), 1]
    else:
        coeffs = [0] * k + [c, F.neg(b), 1]
    return code.word_from_poly(Poly(F, coeffs))

"""Arithmetic in GF(p^m).

Elements are plain integers in ``range(q)``: the element
c_0 + c_1 x + ... + c_{m-1} x^{m-1} (mod the field modulus) is encoded as
c_0 + c_1 p + ... + c_{m-1} p^{m-1}.  Encoding 0 is the additive identity and
1 the multiplicative identity.  ``FieldElement`` wraps an encoding together
with its field for operator-style use; the hot paths work on integers.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CharacteristicNotTwo,
    CharacteristicTwo,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    ReducibleModulus,
    TrivialField,
    ZeroElement,
)

MAX_ORDER = 1 << 16
_ADD_TABLE_MAX = 256
_NUMPY_TABLE_MAX = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p**m, or raise NotPrime."""
    factors = prime_factors(q) if q >= 2 else []
    if len(factors) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = factors[0]
    m = round(math.log(q, p))
    while p**m < q:
        m += 1
    while p**m > q:
        m -= 1
    return p, m


# -- polynomials over GF(p) as ascending coefficient tuples ------------------

def _gfp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mod(a, b, p):
    a = _gfp_trim(a)
    b = _gfp_trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        a = _gfp_trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _gfp_mod(modulus, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible (ascending coefficient tuple)."""
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        candidate = low + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class Field:
    """The finite field GF(p^m), with log/exp tables built at construction.

    Instances are immutable after ``__init__`` and compare equal when
    (p, m, modulus) agree.  Use :func:`build_field` rather than calling the
    constructor so that identical fields share their tables.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.q = p**m
        q = self.q

        self._neg = [self._raw_neg(a) for a in range(q)]
        self._add = None
        if p != 2 and m > 1 and q <= _ADD_TABLE_MAX:
            self._add = [[self._raw_add(a, b) for b in range(q)] for a in range(q)]

        self.generator = self._find_generator()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, self.generator)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log
        self._chi = None

    # -- identity ------------------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __len__(self):
        return self.q

    def __iter__(self):
        return iter(range(self.q))

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    def spec_string(self) -> str:
        base = f"{self.p}^{self.m}"
        if self.m == 1:
            return base
        return base + "/mod=" + ",".join(map(str, self.modulus))

    # -- encodings -----------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_digits(self, digits: Iterable[int]) -> int:
        value = 0
        for d in reversed(list(digits)):
            value = value * self.p + d % self.p
        return value

    def coerce(self, a) -> int:
        """Accept an encoding or a FieldElement of this field; return the encoding."""
        if isinstance(a, FieldElement):
            if a.field != self:
                raise FieldMismatch(f"{a!r} does not belong to {self!r}")
            return a.value
        if isinstance(a, (int, np.integer)) and not isinstance(a, bool):
            a = int(a)
            if 0 <= a < self.q:
                return a
            raise FieldMismatch(f"encoding {a} out of range for {self!r}")
        raise TypeError(f"cannot interpret {a!r} as an element of {self!r}")

    # -- raw arithmetic used to build the tables --------------------------------

    def _raw_add(self, a, b):
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.from_digits((x + y) % self.p for x, y in zip(da, db))

    def _raw_neg(self, a):
        return self.from_digits((-x) % self.p for x in self.digits(a))

    def _raw_mul(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _gfp_mod(prod, self.modulus, p)
        return self.from_digits(rem + [0] * (m - len(rem)))

    def _raw_pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _find_generator(self):
        q = self.q
        if q == 2:
            return 1
        cofactors = [(q - 1) // ell for ell in prime_factors(q - 1)]
        for a in range(2, q):
            if all(self._raw_pow(a, c) != 1 for c in cofactors):
                return a
        raise AssertionError(f"{self!r} has no primitive element; modulus reducible?")

    # -- field operations ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def scalar(self, n: int) -> int:
        """The image of the integer n in the prime subfield."""
        return n % self.p

    def sum(self, values: Iterable[int]) -> int:
        total = 0
        for v in values:
            total = self.add(total, v)
        return total

    def arith(self, op: str, *operands):
        """Dispatch ``op`` in {add, sub, mul, inv, neg, pow} on encodings or FieldElements."""
        if op == "pow":
            base, e = operands
            return self.pow(self.coerce(base), int(e))
        args = [self.coerce(a) for a in operands]
        fn = {"add": self.add, "sub": self.sub, "mul": self.mul,
              "inv": self.inv, "neg": self.neg, "div": self.div}.get(op)
        if fn is None:
            raise ValueError(f"unknown operation {op!r}")
        return fn(*args)

    # -- structure ---------------------------------------------------------------

    def primitive_element(self) -> int:
        if self.q == 2:
            raise TrivialField("GF(2): the multiplicative group is trivial", element=1)
        return self.generator

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("the order of 0 is undefined")
        return (self.q - 1) // math.gcd(self._log[a], self.q - 1)

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("log of 0")
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    def quadratic_character(self, a: int) -> int:
        if self.p == 2:
            raise CharacteristicTwo("the quadratic character needs odd characteristic")
        if self._chi is None:
            half = (self.q - 1) // 2
            minus_one = self._neg[1]
            table = [0] * self.q
            for x in range(1, self.q):
                r = self.pow(x, half)
                table[x] = 1 if r == 1 else -1 if r == minus_one else None
            self._chi = table
        return self._chi[a]

    def is_square(self, a: int) -> bool:
        if self.p == 2:
            return True
        return self.quadratic_character(a) >= 0

    def sqrt_char2(self, a: int) -> int:
        if self.p != 2:
            raise CharacteristicNotTwo("Frobenius square roots need characteristic 2")
        return self.pow(a, self.q // 2)

    def units(self) -> list[int]:
        return list(range(1, self.q))

    # -- numpy tables for vectorised dynamic programming -----------------------------

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        if self.q > _NUMPY_TABLE_MAX:
            raise FieldTooLarge(f"q={self.q} exceeds the table cap {_NUMPY_TABLE_MAX}")
        q = self.q
        return np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        if self.q > _NUMPY_TABLE_MAX:
            raise FieldTooLarge(f"q={self.q} exceeds the table cap {_NUMPY_TABLE_MAX}")
        q = self.q
        return np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)


class FieldElement:
    """An encoding bound to its field, with the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = field.coerce(value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def digits(self) -> list[int]:
        return self.field.digits(self.value)

    @property
    def encoding(self) -> int:
        return self.value

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field!r}({self.value})"


@functools.lru_cache(maxsize=None)
def _cached_field(p, m, modulus):
    return Field(p, m, modulus)


def build_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Validate parameters and return GF(p^m).

    Without ``modulus`` the lexicographically smallest monic irreducible of
    degree m is used (x for prime fields).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise FieldTooLarge(f"q = {p}^{m} exceeds the supported size {MAX_ORDER}")
    if modulus is None:
        modulus = smallest_irreducible(p, m)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1:
            raise DegreeMismatch(f"modulus {list(modulus)} does not have degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {p})")
        if modulus[-1] != 1:
            raise DegreeMismatch(f"modulus {list(modulus)} is not monic")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return _cached_field(p, m, tuple(modulus))


def gf(q: int) -> Field:
    """GF(q) with the default modulus."""
    p, m = prime_power(q)
    return build_field(p, m)


# Module-level conveniences mirroring the method names.

def primitive_element(field: Field) -> int:
    return field.primitive_element()


def element_order(field: Field, a: int) -> int:
    return field.element_order(field.coerce(a))


def quadratic_character(field: Field, a: int) -> int:
    return field.quadratic_character(field.coerce(a))


def sqrt_char2(field: Field, a: int) -> int:
    return field.sqrt_char2(field.coerce(a))

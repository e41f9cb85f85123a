"""Text forms accepted on the command line.

Fields are written ``q``, ``p^m`` or ``p^m/mod=c0,c1,...,cm`` (modulus
coefficients in ascending order).  Polynomials are either an ascending
comma list of encodings (``"0,1,3"``) or an expression such as
``x^3+g*x^2+g^2*x``, where ``g`` is the field's primitive element and bare
integers are element encodings.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .field import Field, build_field, prime_power
from .poly import Poly, parse_coefficients

_FIELD_RE = re.compile(r"^\s*(\d+)(?:\s*\^\s*(\d+))?\s*(?:/\s*mod\s*=\s*([\d,\s]+))?\s*$")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([xg])|([-+*^()]))")


def parse_field(text: str) -> Field:
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError("expected q, p^m or p^m/mod=c0,...,cm", text, 0)
    base, exp, mod = m.groups()
    if exp is None:
        if mod is not None:
            raise ParseError("a modulus needs the p^m form", text, text.index("/"))
        try:
            p, deg = prime_power(int(base))
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from None
    else:
        p, deg = int(base), int(exp)
    modulus = None
    if mod is not None:
        modulus = [int(c) for c in mod.split(",") if c.strip()]
    return build_field(p, deg, modulus)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            skipped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("unexpected character", text, pos + skipped)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("", len(text)))
    return tokens


class _ExprParser:
    def __init__(self, field: Field, text: str):
        self.F = field
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message):
        raise ParseError(message, self.text, self.tokens[self.i][1])

    def parse(self) -> Poly:
        poly = self.expr()
        if self.peek() != "":
            self.fail("unexpected token")
        return poly

    def expr(self) -> Poly:
        negate = False
        if self.peek() == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek() == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok, _ = self.tokens[self.i]
            if not tok.isdigit():
                self.fail("expected a non-negative integer exponent")
            self.take()
            result = Poly(self.F, [1])
            for _ in range(int(tok)):
                result = result * base
            return result
        return base

    def atom(self) -> Poly:
        tok, pos = self.tokens[self.i]
        F = self.F
        if tok.isdigit():
            value = int(tok)
            if value >= F.q:
                raise ParseError(f"encoding {value} outside [0, {F.q})", self.text, pos)
            self.take()
            return Poly(F, [value])
        if tok == "x":
            self.take()
            return Poly.x(F)
        if tok == "g":
            self.take()
            return Poly(F, [F.primitive_element() if F.q > 2 else 1])
        if tok == "(":
            self.take()
            inner = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("expected an integer, x, g or '('")


def _is_list(text: str) -> bool:
    return bool(re.fullmatch(r"[\d,\s]+", text)) and "," in text


def parse_poly(field: Field, text: str) -> Poly:
    """A comma list of ascending encodings or an expression in x and g."""
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    if _is_list(text):
        return parse_coefficients(field, text)
    return _ExprParser(field, text).parse()


def parse_element(field: Field, text: str) -> int:
    """A single field element: an encoding or a constant expression in g."""
    poly = parse_poly(field, text)
    if poly.degree > 0:
        raise ParseError("expected a constant, found x", text, text.find("x"))
    return poly.coef(0)


def parse_elements(field: Field, text: str) -> list[int]:
    """A comma-separated list of elements, each an encoding or expression in g."""
    out = []
    pos = 0
    for part in text.split(","):
        try:
            out.append(parse_element(field, part))
        except ParseError as exc:
            offset = exc.position or 0
            raise ParseError(exc.reason, text, pos + offset) from None
        pos += len(part) + 1
    return out

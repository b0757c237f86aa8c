"""Text form of polynomials.

Grammar (whitespace insensitive):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT ['/' INT] | VAR | '(' expr ')'

Multiplication must be written explicitly ("x0*x1", never "x0x1").
Printing emits terms in decreasing monomial order with coefficients
normalized (balanced representatives mod p, reduced fractions over Q),
and parse(print(f)) == f.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .ring import Polynomial, PolyRing, monomial_key

_TOKEN_KINDS = ("int", "name", "op", "end")


def _tokenize(src: str):
    tokens = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(("int", src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("name", src[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    tokens.append(("end", "", n))
    return tokens


class _PolyParser:
    def __init__(self, src: str, ring: PolyRing):
        self.src = src
        self.ring = ring
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val, at = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} at position {at} in {self.src!r}")

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, at = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {val!r} at position {at} in {self.src!r}")
        return p

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.next()
            negate = val == "-"
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                q = self.term()
                p = p - q if val == "-" else p + q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        p = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val, at = self.next()
            if kind != "int":
                raise ParseError(f"expected integer exponent at position {at}")
            p = p ** int(val)
        return p

    def atom(self) -> Polynomial:
        kind, val, at = self.next()
        if kind == "int":
            num = int(val)
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.next()
                kind3, val3, at3 = self.next()
                if kind3 != "int":
                    raise ParseError(f"expected integer denominator at position {at3}")
                return self.ring.constant(Fraction(num, int(val3)))
            return self.ring.constant(num)
        if kind == "name":
            return self.ring.var(self.ring.var_index(val))
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if kind == "op" and val == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {val!r} at position {at} in {self.src!r}")


def parse_poly(src: str, ring: PolyRing) -> Polynomial:
    """Parse source text into a polynomial over the given ring."""
    return _PolyParser(src, ring).parse()


def _coeff_str(c, p: int | None) -> str:
    """Canonical signed coefficient text; prime coefficients are balanced."""
    if p is not None:
        c = c % p
        if c > p // 2:
            c -= p
        return str(c)
    return str(c)


def _monomial_str(exps: tuple, names: tuple) -> str:
    parts = []
    for nm, e in zip(names, exps):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append(f"{nm}^{e}")
    return "*".join(parts)


def poly_to_str(poly: Polynomial) -> str:
    if not poly.terms:
        return "0"
    ring = poly.ring
    items = sorted(poly.terms.items(), key=lambda t: monomial_key(ring.order, t[0]), reverse=True)
    pieces = []
    for exps, c in items:
        cs = _coeff_str(c, ring.field.p)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        mono = _monomial_str(exps, ring.var_names)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)

"""Polynomial rings with the standard grading, and graded free modules.

Monomials are exponent tuples.  Polynomials are dicts mapping exponent
tuples to nonzero field elements.  Free module elements are dicts mapping
(position, exponent tuple) to nonzero field elements; position i refers to
the i-th standard generator, whose degree is minus the i-th twist.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import NotHomogeneousError, RingMismatchError
from .fields import Field

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")

ORDERS = ("grevlex", "deglex", "lex")


def monomial_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: tuple, b: tuple) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b: tuple, a: tuple) -> tuple:
    """Exponent vector of x^b / x^a (caller guarantees divisibility)."""
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_key(order: str, exps: tuple) -> tuple:
    """Sort key: bigger key means bigger monomial in the given global order."""
    if order == "grevlex":
        return (sum(exps),) + tuple(-e for e in reversed(exps))
    if order == "deglex":
        return (sum(exps),) + exps
    if order == "lex":
        # pad with degree so keys across orders share first-entry semantics
        return exps
    raise ValueError(f"unknown monomial order {order!r}")


def monomial_compare(a: tuple, b: tuple, order: str) -> int:
    """Negative, zero or positive as x^a <, = or > x^b."""
    ka, kb = monomial_key(order, a), monomial_key(order, b)
    return (ka > kb) - (ka < kb)


class PolyRing:
    """K[x_0..x_n] with the standard grading deg x_i = 1."""

    __slots__ = ("field", "var_names", "nvars", "order", "_var_index")

    def __init__(self, field: Field, var_names: Sequence[str], order: str = "grevlex"):
        names = tuple(var_names)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"bad variable name {nm!r}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        self.field = field
        self.var_names = names
        self.nvars = len(names)
        self.order = order
        self._var_index = {nm: i for i, nm in enumerate(names)}

    # -- constructors ------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field.one})

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, i: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def monomial(self, exps: Iterable[int], coeff=1) -> "Polynomial":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {exps: c})

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {}
        zero = self.field.zero
        for exps, c in terms.items():
            c = self.field.coerce(c)
            if c != zero:
                clean[tuple(exps)] = c
        return Polynomial(self, clean)

    def var_index(self, name: str) -> int:
        try:
            return self._var_index[name]
        except KeyError:
            raise RingMismatchError(f"unknown variable {name!r} in {self}") from None

    def monomials_of_degree(self, d: int) -> list[tuple]:
        """All exponent tuples of total degree d, in a fixed canonical order."""
        if d < 0:
            return []
        out = []

        def rec(prefix, remaining, slots):
            if slots == 1:
                out.append(prefix + (remaining,))
                return
            for e in range(remaining, -1, -1):
                rec(prefix + (e,), remaining - e, slots - 1)

        rec((), d, self.nvars)
        return out

    def random_form(self, degree: int, rng) -> "Polynomial":
        """Seeded random homogeneous form of the given degree."""
        terms = {}
        for m in self.monomials_of_degree(degree):
            if self.field.p is not None:
                c = rng.randrange(self.field.p)
            else:
                c = rng.randint(-9, 9)
            if c:
                terms[m] = c
        return self.from_terms(terms)

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.var_names == other.var_names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.var_names, self.order))

    def __repr__(self):
        return f"{self.field}[{', '.join(self.var_names)}]"


class Polynomial:
    """Immutable-by-convention sparse polynomial."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree (max over terms); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def check_homogeneous(self) -> "Polynomial":
        if not self.is_homogeneous():
            raise NotHomogeneousError(f"polynomial {self} is not homogeneous")
        return self

    def leading_term(self) -> tuple:
        """(exps, coeff) of the largest term in the ring order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        order = self.ring.order
        m = max(self.terms, key=lambda e: monomial_key(order, e))
        return m, self.terms[m]

    def sorted_terms(self) -> list[tuple]:
        order = self.ring.order
        return sorted(self.terms.items(), key=lambda t: monomial_key(order, t[0]), reverse=True)

    def _binop_ring(self, other) -> PolyRing:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError("polynomials over different rings")
        return self.ring

    def __add__(self, other):
        ring = self._binop_ring(other)
        fld = ring.field
        zero = fld.zero
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = fld.add(out.get(m, zero), c)
            if v == zero:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(ring, out)

    def __neg__(self):
        fld = self.ring.field
        return Polynomial(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int,)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        ring = self._binop_ring(other)
        fld = ring.field
        zero = fld.zero
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_mul(ma, mb)
                v = fld.add(out.get(m, zero), fld.mul(ca, cb))
                if v == zero:
                    out.pop(m, None)
                else:
                    out[m] = v
        return Polynomial(ring, out)

    __rmul__ = __mul__

    def scale(self, c):
        fld = self.ring.field
        c = fld.coerce(c)
        if c == fld.zero:
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {m: fld.mul(v, c) for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        from .parser import poly_to_str

        return poly_to_str(self)


class FreeModule:
    """Graded free module over a polynomial ring: direct sum of R(a_i).

    The i-th standard generator has degree -a_i where a_i = twists[i].
    """

    __slots__ = ("ring", "twists", "gen_degrees")

    def __init__(self, ring: PolyRing, twists: Sequence[int]):
        self.ring = ring
        self.twists = tuple(int(a) for a in twists)
        self.gen_degrees = tuple(-a for a in self.twists)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def zero_element(self) -> "ModuleElement":
        return ModuleElement(self, {})

    def gen(self, i: int) -> "ModuleElement":
        if not 0 <= i < self.rank:
            raise IndexError(f"generator index {i} out of range")
        zero_mono = (0,) * self.ring.nvars
        return ModuleElement(self, {(i, zero_mono): self.ring.field.one})

    def element(self, components: Sequence[Polynomial]) -> "ModuleElement":
        if len(components) != self.rank:
            raise RingMismatchError("component count does not match rank")
        vec: dict = {}
        for i, p in enumerate(components):
            if p.ring != self.ring:
                raise RingMismatchError("component over the wrong ring")
            for m, c in p.terms.items():
                vec[(i, m)] = c
        return ModuleElement(self, vec)

    def from_vec(self, vec: dict) -> "ModuleElement":
        return ModuleElement(self, dict(vec))

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.twists == other.twists
        )

    def __hash__(self):
        return hash((self.ring, self.twists))

    def __repr__(self):
        return f"Free({self.ring}, twists={list(self.twists)})"


class ModuleElement:
    """Element of a graded free module, stored as {(pos, exps): coeff}."""

    __slots__ = ("module", "vec")

    def __init__(self, module: FreeModule, vec: dict):
        self.module = module
        self.vec = vec

    def is_zero(self) -> bool:
        return not self.vec

    @property
    def components(self) -> tuple:
        ring = self.module.ring
        polys = [dict() for _ in range(self.module.rank)]
        for (i, m), c in self.vec.items():
            polys[i][m] = c
        return tuple(Polynomial(ring, d) for d in polys)

    def degree(self) -> int:
        """Degree of a homogeneous element; -1 for zero."""
        if not self.vec:
            return -1
        gd = self.module.gen_degrees
        degs = {sum(m) + gd[i] for (i, m) in self.vec}
        if len(degs) > 1:
            raise NotHomogeneousError("element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        gd = self.module.gen_degrees
        degs = {sum(m) + gd[i] for (i, m) in self.vec}
        return len(degs) <= 1

    def __add__(self, other):
        if other.module != self.module:
            raise RingMismatchError("elements of different free modules")
        fld = self.module.ring.field
        zero = fld.zero
        out = dict(self.vec)
        for k, c in other.vec.items():
            v = fld.add(out.get(k, zero), c)
            if v == zero:
                out.pop(k, None)
            else:
                out[k] = v
        return ModuleElement(self.module, out)

    def __neg__(self):
        fld = self.module.ring.field
        return ModuleElement(self.module, {k: fld.neg(c) for k, c in self.vec.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        fld = self.module.ring.field
        c = fld.coerce(c)
        if c == fld.zero:
            return ModuleElement(self.module, {})
        return ModuleElement(self.module, {k: fld.mul(v, c) for k, v in self.vec.items()})

    def mul_poly(self, p: Polynomial) -> "ModuleElement":
        if p.ring != self.module.ring:
            raise RingMismatchError("polynomial over the wrong ring")
        fld = p.ring.field
        zero = fld.zero
        out: dict = {}
        for (i, m), c in self.vec.items():
            for mp, cp in p.terms.items():
                k = (i, monomial_mul(m, mp))
                v = fld.add(out.get(k, zero), fld.mul(c, cp))
                if v == zero:
                    out.pop(k, None)
                else:
                    out[k] = v
        return ModuleElement(self.module, out)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.module == other.module
            and self.vec == other.vec
        )

    def __hash__(self):
        return hash((self.module, frozenset(self.vec.items())))

    def __repr__(self):
        comps = ", ".join(repr(p) for p in self.components)
        return f"[{comps}]"

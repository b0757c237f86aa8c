"""Hilbert series, function, polynomial, dimension and degree.

Two independent routes to the same numbers live here.  The oracle
computes each graded piece of a presented module directly, by row
reduction of the degree slice of the relation matrix (a Macaulay
matrix); it never touches the Groebner engine and exists so the two
implementations can cross-check each other.  The production route reads
the lead terms off a Groebner basis of the relations and runs a
variable-splitting recursion on the resulting monomial modules.

Conventions: the series of M is numerator / (1-z)^(n+1) with n+1 the
number of variables; the numerator may be a Laurent polynomial when
generators sit in negative degrees.  dim of the zero module is -1 and
its degree is 0.  For dim > 0 the degree is h_0, and for finite nonzero
modules it is the length.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import numpy as np

from .errors import GintError
from .ring import FreeModule, ModuleElement

MAX_ORACLE_COLUMNS = 50000


# -- independent graded-piece oracle ----------------------------------------


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    a = np.array(rows, dtype=np.int64) % p
    nrows, ncols = a.shape
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1 :, c]
        mask = below != 0
        if mask.any():
            a[rank + 1 :][mask] = (
                a[rank + 1 :][mask] - np.outer(below[mask], a[rank])
            ) % p
        rank += 1
    return rank


def _rank_exact(rows: list[list[Fraction]]) -> int:
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = Fraction(1) / a[rank][c]
        a[rank] = [v * inv for v in a[rank]]
        for i in range(rank + 1, nrows):
            f = a[i][c]
            if f:
                a[i] = [v - f * w for v, w in zip(a[i], a[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def oracle_hilbert(ambient: FreeModule, relations, window) -> list[int]:
    """dim_K of each graded piece of ambient/<relations>, degree by degree.

    Works by exact rank computation on the monomial-multiples matrix of
    the relation generators; independent of any Groebner machinery.
    """
    ring = ambient.ring
    p = ring.field.p
    gd = ambient.gen_degrees
    relations = list(relations)
    out = []
    for t in window:
        cols = []
        for i in range(ambient.rank):
            for m in ring.monomials_of_degree(t - gd[i]):
                cols.append((i, m))
        if len(cols) > MAX_ORACLE_COLUMNS:
            raise GintError(
                f"oracle window needs {len(cols)} columns in degree {t}, "
                f"above the limit {MAX_ORACLE_COLUMNS}"
            )
        if not cols:
            out.append(0)
            continue
        index = {c: k for k, c in enumerate(cols)}
        rows = []
        for r in relations:
            if r.is_zero():
                continue
            for m in ring.monomials_of_degree(t - r.degree()):
                row = [0] * len(cols) if p is not None else [Fraction(0)] * len(cols)
                for (i, me), c in r.vec.items():
                    me2 = tuple(a + b for a, b in zip(me, m))
                    row[index[(i, me2)]] = c
                rows.append(row)
        if not rows:
            out.append(len(cols))
            continue
        rank = _rank_mod_p(rows, p) if p is not None else _rank_exact(rows)
        out.append(len(cols) - rank)
    return out


# -- numerator of a monomial module ------------------------------------------


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _poly_shift(a: dict, s: int) -> dict:
    return {k + s: v for k, v in a.items()}


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            w = out.get(k, 0) + va * vb
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[tuple] = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in kept):
            kept.append(g)
    return kept


def monomial_numerator(gens, nvars: int) -> dict:
    """Numerator of the series of R/(monomial ideal), as {z-power: coeff}.

    Splits on the variable hitting the most generators until the
    generators are pairwise coprime, where the numerator factors as a
    product of (1 - z^deg).
    """
    gens = _minimalize(list(gens))
    if any(sum(g) == 0 for g in gens):
        return {}
    occupancy = [0] * nvars
    for g in gens:
        for j, e in enumerate(g):
            if e:
                occupancy[j] += 1
    best = max(range(nvars), key=lambda j: occupancy[j]) if gens else 0
    if not gens or occupancy[best] <= 1:
        # pairwise coprime supports: product formula
        out = {0: 1}
        for g in gens:
            out = _poly_mul(out, {0: 1, sum(g): -1})
        return out
    # split: N(G) = N(G + x_j) + z * N(G : x_j)
    with_var = [g for g in gens if g[best] == 0]
    xj = tuple(1 if j == best else 0 for j in range(nvars))
    branch_a = monomial_numerator(with_var + [xj], nvars)
    colon = [
        tuple(e - 1 if j == best and e > 0 else e for j, e in enumerate(g))
        for g in gens
    ]
    branch_b = monomial_numerator(colon, nvars)
    return _poly_add(branch_a, _poly_shift(branch_b, 1))


def numerator_from_gb(gb) -> dict:
    """Series numerator of ambient/<gb>, via lead terms position by position."""
    ambient = gb.ambient
    nvars = ambient.ring.nvars
    per_position: dict = {i: [] for i in range(ambient.rank)}
    for pos, m in gb.lead_terms:
        per_position[pos].append(m)
    total: dict = {}
    for i in range(ambient.rank):
        ni = monomial_numerator(per_position[i], nvars)
        total = _poly_add(total, _poly_shift(ni, ambient.gen_degrees[i]))
    return total


# -- derived invariants -------------------------------------------------------


def _divide_out_unit_root(numer: dict):
    """Write numer = (1-z)^s * Q with Q(1) != 0; return (s, Q)."""
    s = 0
    cur = dict(numer)
    while cur and sum(cur.values()) == 0:
        lo, hi = min(cur), max(cur)
        q: dict = {}
        acc = 0
        for k in range(lo, hi + 1):
            acc += cur.get(k, 0)
            if acc:
                q[k] = acc
        cur = q
        s += 1
    return s, cur


def _binom_poly(shift: int, m: int) -> list[Fraction]:
    """Coefficients (ascending powers of t) of binom(t + shift, m)."""
    coeffs = [Fraction(1)]
    for i in range(m):
        # multiply by (t + shift - i)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * (shift - i)
            nxt[k + 1] += c
        coeffs = nxt
    f = Fraction(1, factorial(m))
    return [c * f for c in coeffs]


class HilbertData:
    """Series numerator plus everything derived from it."""

    __slots__ = ("numerator", "nvars_total", "dim", "degree", "poly_coeffs", "h_coeffs")

    def __init__(self, numerator: dict, nvars_total: int):
        self.numerator = {k: v for k, v in numerator.items() if v}
        self.nvars_total = nvars_total
        if not self.numerator:
            self.dim = -1
            self.degree = 0
            self.poly_coeffs = ()
            self.h_coeffs = ()
            return
        s, q = _divide_out_unit_root(self.numerator)
        if s > nvars_total:
            raise GintError("numerator divisible by (1-z) more often than nvars")
        d = nvars_total - s
        self.dim = d
        deg = sum(q.values())
        if deg <= 0:
            raise GintError("nonzero module computed with nonpositive degree")
        self.degree = deg
        if d == 0:
            self.poly_coeffs = ()
            self.h_coeffs = ()
            return
        # Hilbert polynomial p(t) = sum_k q_k * binom(t - k + d - 1, d - 1)
        coeffs = [Fraction(0)] * d
        for k, qk in q.items():
            for j, c in enumerate(_binom_poly(d - 1 - k, d - 1)):
                coeffs[j] += qk * c
        self.poly_coeffs = tuple(coeffs)
        # h-coefficients: p(t) = sum_i h_i * binom(t + e-1-i, e-1-i), e = dim
        work = list(coeffs)
        hs = []
        for i in range(d):
            m = d - 1 - i
            hi = work[m] * factorial(m)
            if hi.denominator != 1:
                raise GintError("non-integral h-coefficient")
            hs.append(int(hi))
            for j, c in enumerate(_binom_poly(m - i, m)):
                work[j] -= hi * c
        if any(c != 0 for c in work):
            raise GintError("h-coefficient expansion failed to terminate")
        self.h_coeffs = tuple(hs)
        if self.h_coeffs and self.h_coeffs[0] != self.degree:
            raise GintError("h_0 disagrees with the degree")

    # -- evaluation ----------------------------------------------------------

    def hilbert_function(self, t: int) -> int:
        n = self.nvars_total - 1
        total = 0
        for k, c in self.numerator.items():
            if t - k >= 0:
                total += c * comb(t - k + n, n)
        return total

    def hilbert_polynomial_at(self, t: int) -> Fraction:
        acc = Fraction(0)
        for j, c in enumerate(self.poly_coeffs):
            acc += c * t**j
        return acc

    def polynomial_str(self) -> str:
        if not self.poly_coeffs:
            return "0"
        parts = []
        for j in range(len(self.poly_coeffs) - 1, -1, -1):
            c = self.poly_coeffs[j]
            if c == 0:
                continue
            mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def numerator_pairs(self) -> list:
        return [[k, self.numerator[k]] for k in sorted(self.numerator)]

    def as_dict(self) -> dict:
        return {
            "numerator": self.numerator_pairs(),
            "dim": self.dim,
            "degree": self.degree,
            "hilbert_polynomial": self.polynomial_str(),
            "h_coeffs": list(self.h_coeffs),
        }

    def __eq__(self, other):
        return (
            isinstance(other, HilbertData)
            and self.numerator == other.numerator
            and self.nvars_total == other.nvars_total
        )

    def __repr__(self):
        return (
            f"HilbertData(dim={self.dim}, degree={self.degree}, "
            f"p(t)={self.polynomial_str()})"
        )


def hilbert_data_from_gb(gb) -> HilbertData:
    return HilbertData(numerator_from_gb(gb), gb.ambient.ring.nvars)


def hilbert_data(ambient: FreeModule, relations, degree_cap: int | None = None) -> HilbertData:
    """Hilbert data of ambient/<relations> (computes a Groebner basis)."""
    from .groebner import Submodule, buchberger

    gb = buchberger(Submodule(ambient, relations), degree_cap)
    return hilbert_data_from_gb(gb)

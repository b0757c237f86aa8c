"""Minimal graded free resolutions and the invariants read off them.

The resolution is built stage by stage: take a reduced Groebner basis
of the relations as the first differential, then repeatedly compute
syzygies.  After each stage the new matrix is minimized by cancelling
unit entries: clearing the unit's row by column operations, then
deleting the row and column.  Exactness makes the induced updates to
the neighbouring differentials pure deletions (the affected column of
the previous matrix becomes a combination of the others, the affected
row of the next matrix becomes zero), so the cascade never creates new
unit entries outside the matrix being swept.  A complex that is exact
and unit-free is the minimal resolution, and Hilbert's syzygy theorem
caps its length at the number of variables.

Depth comes out of the Auslander-Buchsbaum formula, Cohen-Macaulayness
from comparing it with the Krull dimension, and the type is the rank of
the last module in the resolution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GintError, ZeroModuleError
from .groebner import Submodule, buchberger, syzygy_basis
from .hilbert import HilbertData, hilbert_data_from_gb, numerator_from_gb
from .ring import FreeModule, ModuleElement


class BettiTable:
    """Graded Betti numbers beta_{i,j} of a minimal resolution."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict):
        self.entries = {k: v for k, v in entries.items() if v}

    @classmethod
    def from_modules(cls, modules) -> "BettiTable":
        entries: dict = {}
        for i, f in enumerate(modules):
            for d in f.gen_degrees:
                entries[(i, d)] = entries.get((i, d), 0) + 1
        return cls(entries)

    @property
    def totals(self) -> tuple:
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return tuple(out)

    def as_dict(self) -> dict:
        return {f"{i},{j}": self.entries[(i, j)] for (i, j) in sorted(self.entries)}

    def text(self) -> str:
        if not self.entries:
            return "(zero module)"
        imax = max(i for i, _ in self.entries)
        rows = [j - i for (i, j) in self.entries]
        rmin, rmax = min(rows), max(rows)
        totals = self.totals
        grid = [["total:"] + [str(t) for t in totals]]
        for r in range(rmin, rmax + 1):
            line = [f"{r}:"]
            for i in range(imax + 1):
                v = self.entries.get((i, r + i), 0)
                line.append(str(v) if v else ".")
            grid.append(line)
        header = [""] + [str(i) for i in range(imax + 1)]
        grid.insert(0, header)
        widths = [max(len(row[k]) for row in grid) for k in range(imax + 2)]
        return "\n".join(
            " ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
            for row in grid
        )

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable(totals={list(self.totals)})"


class Resolution:
    """Chain of free modules F_0..F_l with differentials d_i: F_i -> F_{i-1}.

    maps[i] holds the columns of d_{i+1} as elements of modules[i], one
    column per generator of modules[i+1].
    """

    __slots__ = ("modules", "maps")

    def __init__(self, modules, maps):
        self.modules = tuple(modules)
        self.maps = tuple(tuple(cols) for cols in maps)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def betti(self) -> BettiTable:
        return BettiTable.from_modules(self.modules)

    def apply(self, i: int, elem: ModuleElement) -> ModuleElement:
        """Image of an element of modules[i] under d_i (i >= 1)."""
        cols = self.maps[i - 1]
        target = self.modules[i - 1]
        ring = target.ring
        field = ring.field
        out: dict = {}
        for (pos, m), c in elem.vec.items():
            for (pos2, m2), c2 in cols[pos].vec.items():
                k = (pos2, tuple(a + b for a, b in zip(m, m2)))
                v = field.add(out.get(k, field.zero), field.mul(c, c2))
                if v == field.zero:
                    out.pop(k, None)
                else:
                    out[k] = v
        return ModuleElement(target, out)

    def is_complex(self) -> bool:
        """Exact matrix identity d_i . d_{i+1} = 0."""
        for i in range(1, len(self.maps)):
            for col in self.maps[i]:
                if not self.apply(i, col).is_zero():
                    return False
        return True

    def is_minimal(self) -> bool:
        zero_mono = (0,) * self.modules[0].ring.nvars
        for cols in self.maps:
            for col in cols:
                for (pos, m) in col.vec:
                    if m == zero_mono:
                        return False
        return True

    def __repr__(self):
        ranks = " <- ".join(str(f.rank) for f in self.modules)
        return f"Resolution({ranks})"


def _column_degree(col: dict, gen_degrees) -> int:
    (pos, m) = next(iter(col))
    return sum(m) + gen_degrees[pos]


def _sweep_units(mats, twists, field, nvars, k):
    """Cancel all unit entries of mats[k], cascading deletions backwards."""
    zero_mono = (0,) * nvars

    def unit_entries():
        found = []
        tdeg = [-a for a in twists[k]]
        for c, col in enumerate(mats[k]):
            for (pos, m) in col:
                if m == zero_mono:
                    found.append((tdeg[pos], pos, c))
        return found

    while True:
        units = unit_entries()
        if not units:
            # column operations can zero out a whole column (proportional
            # columns); such generators map to nothing and are dropped
            for c in range(len(mats[k]) - 1, -1, -1):
                if not mats[k][c]:
                    mats[k].pop(c)
                    twists[k + 1].pop(c)
            return
        _, r, c = min(units)
        col_c = mats[k][c]
        u = col_c[(r, zero_mono)]
        uinv = field.inv(u)
        # clear row r in the other columns
        for c2, col in enumerate(mats[k]):
            if c2 == c:
                continue
            lam = {m: field.mul(v, uinv) for (pos, m), v in col.items() if pos == r}
            if not lam:
                continue
            for (pos, m), v in col_c.items():
                for ml, cl in lam.items():
                    key = (pos, tuple(a + b for a, b in zip(m, ml)))
                    w = field.sub(col.get(key, field.zero), field.mul(v, cl))
                    if w == field.zero:
                        col.pop(key, None)
                    else:
                        col[key] = w
        # row r is now supported only in column c; delete row r and column c
        mats[k].pop(c)
        twists[k + 1].pop(c)
        for col in mats[k]:
            items = list(col.items())
            col.clear()
            for (pos, m), v in items:
                if pos == r:
                    raise GintError("row clearing left a stray entry")
                col[(pos - 1 if pos > r else pos, m)] = v
        twists[k].pop(r)
        if k > 0:
            # coordinate r of F_k was a redundant generator of the previous
            # image: its column is a combination of the others, so drop it
            mats[k - 1].pop(r)


def minimal_resolution(
    ambient: FreeModule, relations, degree_cap: int | None = None, gb=None
) -> Resolution:
    """Minimal graded free resolution of ambient/<relations>."""
    ring = ambient.ring
    field = ring.field
    nvars = ring.nvars
    if gb is None:
        gb = buchberger(Submodule(ambient, relations), degree_cap)
    twists = [list(ambient.twists)]
    mats: list = []
    cur = [dict(g.vec) for g in gb.elements]
    k = 0
    while cur:
        twists.append([-_column_degree(col, tuple(-a for a in twists[k])) for col in cur])
        mats.append(cur)
        _sweep_units(mats, twists, field, nvars, k)
        if not mats[k]:
            mats.pop()
            twists.pop()
            break
        if k + 1 > nvars + 1:
            raise GintError("resolution exceeded the syzygy theorem bound")
        target = FreeModule(ring, tuple(twists[k]))
        cols = [ModuleElement(target, dict(col)) for col in mats[k]]
        cur = [dict(g.vec) for g in syzygy_basis(Submodule(target, cols), degree_cap).gens]
        k += 1
    modules = [FreeModule(ring, tuple(tw)) for tw in twists]
    maps = []
    for i, cols in enumerate(mats):
        maps.append([ModuleElement(modules[i], dict(col)) for col in cols])
    return Resolution(modules, maps)


@dataclass(frozen=True)
class HomologicalData:
    dim: int
    degree: int
    pd: int
    depth: int
    is_cm: bool
    cm_type: int
    betti: BettiTable
    hilbert: HilbertData

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "degree": self.degree,
            "pd": self.pd,
            "depth": self.depth,
            "is_cm": self.is_cm,
            "cm_type": self.cm_type,
            "type_valid": self.is_cm,
            "betti": self.betti.as_dict(),
            "hilbert": self.hilbert.as_dict(),
        }


def homological_data(
    ambient: FreeModule, relations, degree_cap: int | None = None, gb=None
) -> HomologicalData:
    """Betti table, projective dimension, depth, CM flag and type."""
    ring = ambient.ring
    if gb is None:
        gb = buchberger(Submodule(ambient, relations), degree_cap)
    hd = HilbertData(numerator_from_gb(gb), ring.nvars)
    if hd.dim == -1:
        raise ZeroModuleError("the zero module has no depth or type")
    res = minimal_resolution(ambient, [g for g in gb.elements], degree_cap, gb=gb)
    pd = res.length
    depth = ring.nvars - pd
    if depth < 0:
        raise GintError("negative depth: resolution is not minimal")
    return HomologicalData(
        dim=hd.dim,
        degree=hd.degree,
        pd=pd,
        depth=depth,
        is_cm=(depth == hd.dim),
        cm_type=res.modules[-1].rank,
        betti=res.betti(),
        hilbert=hd,
    )

"""Finitely presented graded modules and the functors between them.

A module is a presentation F0/<relations> over a polynomial ring.  Every
operation here (tensor, Hom, Ext, colon, annihilator, saturation, global
sections) reduces to at most two kernel computations: one to find the
submodule of interest, one to present it.  The workhorse is

    kernel_of_map(F, columns, target_relations)

from the Groebner layer, which computes {u in F : sum u_j columns_j lies
in the span of the target relations}.

Presentations cache their Groebner basis, Hilbert data and minimal
resolution.  Caches are write-once: a value is computed completely and
then assigned, so concurrent readers can at worst duplicate work, never
observe a torn state.
"""

from __future__ import annotations

import random

from . import config
from .errors import (
    GintError,
    NoParameterFoundError,
    NotHomogeneousError,
    RingMismatchError,
    StabilizationError,
    VariableCapExceededError,
)
from .groebner import (
    GroebnerBasis,
    Submodule,
    buchberger,
    kernel_of_map,
    syzygy_basis,
)
from .hilbert import HilbertData, hilbert_data_from_gb
from .resolve import (
    HomologicalData,
    Resolution,
    _sweep_units,
    homological_data,
    minimal_resolution,
)
from .ring import FreeModule, ModuleElement, Polynomial, PolyRing


class Presentation:
    """A graded module, stored as a free module modulo relations."""

    __slots__ = (
        "generators",
        "relations",
        "_gb",
        "_hilbert",
        "_resolution",
        "_homological",
        "_minimal",
        "_ext",
    )

    def __init__(self, generators: FreeModule, relations=()):
        rels = tuple(r for r in relations if not r.is_zero())
        for r in rels:
            if r.module != generators:
                raise RingMismatchError("relation outside the generator module")
            if not r.is_homogeneous():
                raise NotHomogeneousError("presentations must be graded")
        self.generators = generators
        self.relations = rels
        self._gb = None
        self._hilbert = None
        self._resolution = None
        self._homological = None
        self._minimal = None
        self._ext = {}

    @property
    def ring(self) -> PolyRing:
        return self.generators.ring

    # -- cached derived data -------------------------------------------------

    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(Submodule(self.generators, self.relations))
        return self._gb

    def hilbert(self) -> HilbertData:
        if self._hilbert is None:
            self._hilbert = hilbert_data_from_gb(self.gb())
        return self._hilbert

    def resolution(self) -> Resolution:
        if self._resolution is None:
            self._resolution = minimal_resolution(self.generators, (), gb=self.gb())
        return self._resolution

    def homological(self) -> HomologicalData:
        """Raises ZeroModuleError on the zero module."""
        if self._homological is None:
            self._homological = homological_data(self.generators, (), gb=self.gb())
        return self._homological

    # -- shortcuts -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.hilbert().dim == -1

    def dim(self) -> int:
        return self.hilbert().dim

    def degree(self) -> int:
        return self.hilbert().degree

    def depth(self) -> int:
        return self.homological().depth

    def pd(self) -> int:
        return self.homological().pd

    def hilbert_function(self, t: int) -> int:
        return self.hilbert().hilbert_function(t)

    def minimize(self) -> "Presentation":
        """Equivalent presentation without unit entries, in canonical form.

        Unit entries in the relation matrix are cancelled (the matching
        generator is redundant), the generators are sorted by degree and
        the relations are replaced by their reduced Groebner basis.  Two
        constructions of the same submodule data therefore compare equal.
        """
        if self._minimal is not None:
            return self._minimal
        ring = self.ring
        mats = [[dict(r.vec) for r in self.relations]]
        twists = [list(self.generators.twists), [-r.degree() for r in self.relations]]
        _sweep_units(mats, twists, ring.field, ring.nvars, 0)
        order = sorted(range(len(twists[0])), key=lambda i: -twists[0][i])
        newpos = {old: new for new, old in enumerate(order)}
        free = FreeModule(ring, tuple(twists[0][i] for i in order))
        cols = [
            ModuleElement(free, {(newpos[p], m): c for (p, m), c in col.items()})
            for col in mats[0]
        ]
        gb = buchberger(Submodule(free, cols))
        out = Presentation(free, gb.elements)
        out._gb = gb
        out._minimal = out
        self._minimal = out
        return out

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.generators, self.relations))

    def __repr__(self):
        return (
            f"Presentation({self.generators.rank} gens, "
            f"{len(self.relations)} relations over {self.ring})"
        )


# -- constructors -------------------------------------------------------------


def free_presentation(ring: PolyRing, twists=(0,)) -> Presentation:
    return Presentation(FreeModule(ring, tuple(twists)), ())


def zero_presentation(ring: PolyRing) -> Presentation:
    return Presentation(FreeModule(ring, ()), ())


def ideal_submodule(ring: PolyRing, polys) -> Submodule:
    """An ideal, housed in the rank-one free module R."""
    free = FreeModule(ring, (0,))
    return Submodule(free, [free.element([p]) for p in polys])


def quotient_module(ideal: Submodule) -> Presentation:
    """R/I for an ideal inside the rank-one free module."""
    if ideal.ambient.rank != 1 or ideal.ambient.twists != (0,):
        raise RingMismatchError("quotient_module expects an ideal in R itself")
    return Presentation(ideal.ambient, ideal.gens)


def module_of_ideal(ideal: Submodule) -> Presentation:
    """The ideal viewed as a module: its generators modulo their syzygies."""
    if not ideal.gens:
        return zero_presentation(ideal.ambient.ring)
    syz = syzygy_basis(ideal)
    return Presentation(syz.ambient, syz.gens).minimize()


def syzygy_module(ideal: Submodule, k: int) -> Presentation:
    """The k-th syzygy module of R/I.

    Generated by the columns of the (k+1)-st map of the minimal
    resolution of R/I; k = 1 gives the syzygies of the generators of I.
    """
    if k < 1:
        raise GintError("syzygy index must be positive")
    res = minimal_resolution(ideal.ambient, ideal.gens)
    pd = res.length
    if k > pd:
        raise GintError(f"syzygy index {k} exceeds the projective dimension {pd}")
    if k == pd:
        return zero_presentation(ideal.ambient.ring)
    rels = res.maps[k + 1] if k + 1 < pd else ()
    return Presentation(res.modules[k + 1], rels)


def direct_sum(a: Presentation, b: Presentation) -> Presentation:
    """M (+) N: concatenated generators with block relations."""
    if a.ring != b.ring:
        raise RingMismatchError("direct sum needs a common ring")
    ra, rb = a.generators.rank, b.generators.rank
    big = FreeModule(a.ring, a.generators.twists + b.generators.twists)
    zero = a.ring.zero()
    rels = [big.element(list(r.components) + [zero] * rb) for r in a.relations]
    rels += [big.element([zero] * ra + list(r.components)) for r in b.relations]
    return Presentation(big, rels)


# -- subquotients --------------------------------------------------------------


def _subquotient(gens, rels, ambient: FreeModule) -> Presentation:
    """Present (span(gens) + span(rels)) / span(rels) inside ambient."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return zero_presentation(ambient.ring)
    free = FreeModule(ambient.ring, tuple(-g.degree() for g in gens))
    found = kernel_of_map(free, gens, rels)
    return Presentation(free, found.gens).minimize()


# -- tensor and join ------------------------------------------------------------


def tensor_over_ring(m: Presentation, n: Presentation) -> Presentation:
    """M tensor_R N on the generator grid, with relations [A(x)1 | 1(x)B]."""
    if m.ring != n.ring:
        raise RingMismatchError("tensor factors live over different rings")
    a = m.minimize()
    b = n.minimize()
    ring = a.ring
    ra, rb = a.generators.rank, b.generators.rank
    atw, btw = a.generators.twists, b.generators.twists
    if ra == 1 and rb == 1:
        # cyclic x cyclic collapses to R(a+b)/(I+J)
        free = FreeModule(ring, (atw[0] + btw[0],))
        rels = [ModuleElement(free, dict(r.vec)) for r in a.relations]
        rels += [ModuleElement(free, dict(s.vec)) for s in b.relations]
        return Presentation(free, rels).minimize()
    grid = FreeModule(
        ring, tuple(atw[i] + btw[j] for i in range(ra) for j in range(rb))
    )
    cols = []
    for r in a.relations:
        for j in range(rb):
            cols.append(
                ModuleElement(grid, {(i * rb + j, mo): c for (i, mo), c in r.vec.items()})
            )
    for s in b.relations:
        for i in range(ra):
            cols.append(
                ModuleElement(grid, {(i * rb + j, mo): c for (j, mo), c in s.vec.items()})
            )
    return Presentation(grid, cols).minimize()


class DiagonalContext:
    """The doubled ring of a join, with the diagonal ideal.

    Modding the join M (x)_K N by the diagonal generators x_i - y_i
    recovers M (x)_R N, which is the invariant callers verify.
    """

    __slots__ = ("source_ring", "join_ring", "diagonal_gens")

    def __init__(self, source_ring: PolyRing, var_cap: int | None = None):
        n = source_ring.nvars
        cap = config.var_cap(var_cap)
        if 2 * n > cap:
            raise VariableCapExceededError(
                f"join needs {2 * n} variables, above the cap {cap}"
            )
        taken = set(source_ring.var_names)
        prefix = None
        for p in ("y", "z", "w", "u", "v", "s"):
            if all(f"{p}{i}" not in taken for i in range(n)):
                prefix = p
                break
        if prefix is None:
            raise RingMismatchError("no fresh variable names for the join ring")
        names = list(source_ring.var_names) + [f"{prefix}{i}" for i in range(n)]
        self.source_ring = source_ring
        self.join_ring = PolyRing(source_ring.field, names, source_ring.order)
        self.diagonal_gens = tuple(
            self.join_ring.var(i) - self.join_ring.var(n + i) for i in range(n)
        )

    def embed_first(self, p: Polynomial) -> Polynomial:
        pad = (0,) * self.source_ring.nvars
        return self.join_ring.from_terms({e + pad: c for e, c in p.terms.items()})

    def embed_second(self, p: Polynomial) -> Polynomial:
        pad = (0,) * self.source_ring.nvars
        return self.join_ring.from_terms({pad + e: c for e, c in p.terms.items()})


def join_over_field(
    m: Presentation, n: Presentation, ctx: DiagonalContext | None = None
) -> Presentation:
    """M tensor_K N over the doubled ring: M in the x-block, N relabeled."""
    if m.ring != n.ring:
        raise RingMismatchError("join factors live over different rings")
    if ctx is None:
        ctx = DiagonalContext(m.ring)
    if ctx.source_ring != m.ring:
        raise RingMismatchError("context built for a different ring")
    a = m.minimize()
    b = n.minimize()
    nv = m.ring.nvars
    pad = (0,) * nv
    ra, rb = a.generators.rank, b.generators.rank
    atw, btw = a.generators.twists, b.generators.twists
    grid = FreeModule(
        ctx.join_ring, tuple(atw[i] + btw[j] for i in range(ra) for j in range(rb))
    )
    cols = []
    for r in a.relations:
        for j in range(rb):
            cols.append(
                ModuleElement(
                    grid, {(i * rb + j, mo + pad): c for (i, mo), c in r.vec.items()}
                )
            )
    for s in b.relations:
        for i in range(ra):
            cols.append(
                ModuleElement(
                    grid, {(i * rb + j, pad + mo): c for (j, mo), c in s.vec.items()}
                )
            )
    return Presentation(grid, cols).minimize()


def diagonal_reduce(joined: Presentation, ctx: DiagonalContext) -> Presentation:
    """Quotient of a join by the diagonal, still over the doubled ring."""
    rels = list(joined.relations)
    for i in range(joined.generators.rank):
        gen = joined.generators.gen(i)
        for d in ctx.diagonal_gens:
            rels.append(gen.mul_poly(d))
    return Presentation(joined.generators, rels).minimize()


# -- Hom and Ext ----------------------------------------------------------------


def hom_modules(m: Presentation, n: Presentation) -> Presentation:
    """Graded Hom_R(M, N), as the kernel of Hom(F0, N) -> Hom(F1, N).

    A map M -> N is a map F0 -> N killing the relations of M, so Hom is
    the kernel of composition with the presentation matrix of M, taken
    between modules that are themselves presented by copies of N.
    """
    if m.ring != n.ring:
        raise RingMismatchError("hom arguments live over different rings")
    a = m.minimize()
    b = n.minimize()
    ring = a.ring
    ra, rb = a.generators.rank, b.generators.rank
    atw, btw = a.generators.twists, b.generators.twists
    if ra == 0 or rb == 0:
        return zero_presentation(ring)
    source = FreeModule(
        ring, tuple(btw[j] - atw[i] for i in range(ra) for j in range(rb))
    )
    rel_deg = [r.degree() for r in a.relations]
    target = FreeModule(
        ring,
        tuple(btw[j] + rel_deg[k] for k in range(len(rel_deg)) for j in range(rb)),
    )
    cols = []
    for i in range(ra):
        for j in range(rb):
            vec = {}
            for k, r in enumerate(a.relations):
                for (p, mo), c in r.vec.items():
                    if p == i:
                        vec[(k * rb + j, mo)] = c
            cols.append(ModuleElement(target, vec))
    target_rels = [
        ModuleElement(target, {(k * rb + j, mo): c for (j, mo), c in s.vec.items()})
        for s in b.relations
        for k in range(len(rel_deg))
    ]
    source_rels = [
        ModuleElement(source, {(i * rb + j, mo): c for (j, mo), c in s.vec.items()})
        for s in b.relations
        for i in range(ra)
    ]
    kern = kernel_of_map(source, cols, target_rels)
    return _subquotient(kern.gens, source_rels, source)


def dual(m: Presentation) -> Presentation:
    return hom_modules(m, free_presentation(m.ring))


def _transpose_columns(res: Resolution, idx: int, duals) -> list:
    """Columns of the transpose of the idx-th differential, in duals[idx]."""
    src_rank = res.modules[idx - 1].rank
    cols: list = [dict() for _ in range(src_rank)]
    for c, col in enumerate(res.maps[idx - 1]):
        for (p, mo), coeff in col.vec.items():
            cols[p][(c, mo)] = coeff
    return [ModuleElement(duals[idx], v) for v in cols]


def ext_module(m: Presentation, i: int) -> Presentation:
    """Ext^i_R(M, R): cohomology of the dualized minimal resolution."""
    ring = m.ring
    cached = m._ext.get(i)
    if cached is not None:
        return cached
    mm = m.minimize()
    if i < 0 or mm.is_zero():
        out = zero_presentation(ring)
        m._ext[i] = out
        return out
    res = mm.resolution()
    pd = res.length
    if i > pd:
        out = zero_presentation(ring)
    else:
        duals = [FreeModule(ring, tuple(-t for t in f.twists)) for f in res.modules]
        if i == pd:
            if pd == 0:
                out = Presentation(duals[0], ()).minimize()
            else:
                out = Presentation(duals[pd], _transpose_columns(res, pd, duals)).minimize()
        else:
            kern = kernel_of_map(duals[i], _transpose_columns(res, i + 1, duals), ())
            image = _transpose_columns(res, i, duals) if i >= 1 else []
            out = _subquotient(kern.gens, image, duals[i])
    m._ext[i] = out
    return out


# -- colon, annihilator, saturation ---------------------------------------------


def colon(m: Presentation, f: Polynomial) -> Presentation:
    """(0 :_M f), the kernel of multiplication M -> M(deg f).

    f is a regular element on M exactly when the result is zero.
    """
    if f.is_zero():
        raise GintError("colon by the zero element")
    f.check_homogeneous()
    mm = m.minimize()
    if mm.is_zero():
        return mm
    k = f.degree()
    base = mm.generators
    shifted = FreeModule(mm.ring, tuple(t + k for t in base.twists))
    cols = [
        ModuleElement(shifted, {(i, mo): c for mo, c in f.terms.items()})
        for i in range(base.rank)
    ]
    shifted_rels = [ModuleElement(shifted, dict(r.vec)) for r in mm.relations]
    kern = kernel_of_map(base, cols, shifted_rels)
    return _subquotient(kern.gens, list(mm.relations), base)


def annihilator(m: Presentation) -> Submodule:
    """The ideal of ring elements killing every generator modulo relations."""
    ring = m.ring
    mm = m.minimize()
    one = FreeModule(ring, (0,))
    r0 = mm.generators.rank
    if r0 == 0:
        return Submodule(one, [one.element([ring.one()])])
    tw = mm.generators.twists
    big = FreeModule(
        ring, tuple(tw[j] - tw[i] for i in range(r0) for j in range(r0))
    )
    zero_mono = (0,) * ring.nvars
    col = ModuleElement(
        big, {(i * r0 + i, zero_mono): ring.field.one for i in range(r0)}
    )
    rels = [
        ModuleElement(big, {(i * r0 + j, mo): c for (j, mo), c in r.vec.items()})
        for r in mm.relations
        for i in range(r0)
    ]
    kern = kernel_of_map(one, [col], rels)
    return kern


def _colon_with_irrelevant(mm: Presentation) -> GroebnerBasis:
    """Reduced basis of (E :_F m) for the presentation F/E."""
    ring = mm.ring
    base = mm.generators
    r0 = base.rank
    nv = ring.nvars
    if r0 == 0:
        return buchberger(Submodule(base, ()))
    big = FreeModule(
        ring, tuple(base.twists[i] + 1 for v in range(nv) for i in range(r0))
    )
    cols = []
    for i in range(r0):
        vec = {}
        for v in range(nv):
            mono = tuple(1 if j == v else 0 for j in range(nv))
            vec[(v * r0 + i, mono)] = ring.field.one
        cols.append(ModuleElement(big, vec))
    rels = [
        ModuleElement(big, {(v * r0 + p, mo): c for (p, mo), c in r.vec.items()})
        for r in mm.relations
        for v in range(nv)
    ]
    kern = kernel_of_map(base, cols, rels)
    return buchberger(Submodule(base, kern.gens))


def saturate(m: Presentation) -> Presentation:
    """M modulo its finite-length part: iterate E <- (E :_F m) to stability.

    Returns the input object itself when it is already saturated, so
    saturatedness can be tested by identity (see is_saturated).
    """
    cur = m.minimize()
    changed = False
    while True:
        new_gb = _colon_with_irrelevant(cur)
        if new_gb.elements == cur.gb().elements:
            break
        changed = True
        nxt = Presentation(cur.generators, new_gb.elements)
        nxt._gb = new_gb
        cur = nxt
    if not changed:
        return m
    return cur.minimize()


def is_saturated(m: Presentation) -> bool:
    return saturate(m) is m


# -- global sections -------------------------------------------------------------


def power_ideal(ring: PolyRing, t: int) -> Submodule:
    """The t-th power of the irrelevant maximal ideal."""
    return ideal_submodule(ring, [ring.monomial(e) for e in ring.monomials_of_degree(t)])


def _stage_signature(p: Presentation):
    return (tuple(sorted(p.generators.gen_degrees)), p.hilbert())


def sections_h0(m: Presentation, cap: int = 8) -> Presentation:
    """The module of twisted global sections H^0(M) = lim Hom(m^t, M).

    Saturates first; a saturated module of depth >= 2 is its own H^0.
    Otherwise Hom(m^t, M) is computed for t = 1, 2, ... until two
    consecutive stages agree.  Once M is saturated the transition maps
    are injective, so equal generator degrees plus equal Hilbert
    functions (compared exactly via numerators, which subsumes any
    finite verification window) certify stabilization.  If H^0 is not
    finitely generated the chain never stabilizes; the iteration bound
    turns that into an explicit error.
    """
    sat = saturate(m)
    if sat.is_zero():
        return sat
    if sat.homological().depth >= 2:
        return sat
    ring = m.ring
    prev = None
    prev_sig = None
    for t in range(1, cap + 1):
        stage = hom_modules(module_of_ideal(power_ideal(ring, t)), sat)
        sig = _stage_signature(stage)
        if prev_sig is not None and sig == prev_sig:
            return prev
        prev, prev_sig = stage, sig
    raise StabilizationError(
        f"Hom(m^t, M) did not stabilize within {cap} steps; "
        f"H^0(M) is possibly not finitely generated"
    )


# -- parameters and random data ---------------------------------------------------


def _dim_after_cut(p: Presentation, f: Polynomial) -> int:
    rels = list(p.relations)
    for i in range(p.generators.rank):
        rels.append(p.generators.gen(i).mul_poly(f))
    return Presentation(p.generators, rels).hilbert().dim


def find_parameter(
    m: Presentation,
    deg: int = 1,
    constraints=(),
    trials: int = 32,
    seed: int = 0,
) -> Polynomial:
    """Seeded search for a homogeneous parameter of the given degree.

    A hit drops dim M by exactly one and drops the dimension of every
    constraint module as far as possible (constraints of dimension <= 0
    impose nothing: their dimension cannot drop further).
    """
    if deg < 1:
        raise GintError("parameter degree must be positive")
    mm = m.minimize()
    d0 = mm.hilbert().dim
    if d0 <= 0:
        raise NoParameterFoundError(
            f"no parameter exists: the module has dimension {d0}"
        )
    cons = [(c.minimize(), c.minimize().hilbert().dim) for c in constraints]
    rng = random.Random(seed)
    for _ in range(trials):
        f = m.ring.random_form(deg, rng)
        if f.is_zero():
            continue
        if _dim_after_cut(mm, f) != d0 - 1:
            continue
        if all(_dim_after_cut(c, f) <= max(0, dc - 1) for c, dc in cons):
            return f
    raise NoParameterFoundError(
        f"no parameter of degree {deg} found in {trials} trials"
    )


def random_complete_intersection(
    ring: PolyRing, degrees, seed: int = 0, trials: int = 20
) -> list:
    """Random forms of the given degrees whose quotient has the right codim."""
    rng = random.Random(seed)
    want = ring.nvars - len(degrees)
    for _ in range(trials):
        polys = [ring.random_form(d, rng) for d in degrees]
        if any(p.is_zero() for p in polys):
            continue
        if quotient_module(ideal_submodule(ring, polys)).dim() == want:
            return polys
    raise NoParameterFoundError(
        f"no complete intersection of degrees {list(degrees)} found"
    )


# -- ideal arithmetic --------------------------------------------------------------


def sum_ideals(a: Submodule, b: Submodule) -> Submodule:
    if a.ambient != b.ambient:
        raise RingMismatchError("ideal sum needs a common ambient module")
    return Submodule(a.ambient, list(a.gens) + list(b.gens))


def intersect_ideals(a: Submodule, b: Submodule) -> Submodule:
    """I intersect J, read off the syzygies of the combined generators."""
    if a.ambient != b.ambient or a.ambient.rank != 1:
        raise RingMismatchError("ideal intersection needs a common rank-one ambient")
    ring = a.ambient.ring
    combined = Submodule(a.ambient, list(a.gens) + list(b.gens))
    na = len(a.gens)
    out = []
    seen = set()
    for s in syzygy_basis(combined).gens:
        combo = a.ambient.zero_element()
        for (pos, mo), c in s.vec.items():
            if pos < na:
                combo = combo + a.gens[pos].mul_poly(ring.from_terms({mo: c}))
        if not combo.is_zero():
            key = frozenset(combo.vec.items())
            if key not in seen:
                seen.add(key)
                out.append(combo)
    return Submodule(a.ambient, out)


# -- isomorphism bookkeeping --------------------------------------------------------


def iso_compare(a: Presentation, b: Presentation) -> str:
    """'equal' for identical canonical presentations, 'consistent' when
    only the computable invariants (generator degrees, Hilbert data,
    Betti table) agree, else 'different'.  Genuine isomorphism testing
    beyond this is not attempted."""
    if a.ring != b.ring:
        return "different"
    am, bm = a.minimize(), b.minimize()
    if am == bm:
        return "equal"
    if am.is_zero() or bm.is_zero():
        return "different"
    if sorted(am.generators.twists) != sorted(bm.generators.twists):
        return "different"
    if am.hilbert() != bm.hilbert():
        return "different"
    if am.homological().betti.entries != bm.homological().betti.entries:
        return "different"
    return "consistent"

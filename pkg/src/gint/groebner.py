"""Buchberger engine for graded submodules of free modules.

The module term order is: total (twisted) degree first, then the ring's
monomial order, then position (lower position wins ties).  For syzygy
computations an extra leading block flag turns this into a position
elimination order.  All inputs must be homogeneous; S-pairs are then
processed in increasing degree (normal strategy) with Gebauer-Moeller
pair pruning, so the configured degree cap is a sound stopping point:
hitting it raises DegreeCapExceededError rather than truncating.

Syzygies are computed by the augmented-module elimination trick: append
one tag coordinate per generator, compute a reduced basis in an order
that eliminates the original coordinates, and read off the elements
supported purely on tag coordinates.
"""

from __future__ import annotations

from heapq import heappop, heappush

from . import config
from .errors import DegreeCapExceededError, NotHomogeneousError, RingMismatchError
from .ring import FreeModule, ModuleElement, PolyRing


def _make_negkey(order: str, gen_degrees: tuple, elim_rank: int | None):
    """Heap key for module terms: smaller negkey means bigger term."""
    gd = gen_degrees
    if order == "grevlex":
        if elim_rank is None:
            def negkey(pos, m):
                s = sum(m)
                return (-(s + gd[pos]), -s) + tuple(reversed(m)) + (pos,)
        else:
            r = elim_rank

            def negkey(pos, m):
                s = sum(m)
                return (0 if pos < r else 1, -(s + gd[pos]), -s) + tuple(reversed(m)) + (pos,)
        return negkey

    if order == "deglex":
        def monpart(m):
            return (-sum(m),) + tuple(-e for e in m)
    elif order == "lex":
        def monpart(m):
            return tuple(-e for e in m)
    else:  # pragma: no cover - guarded by PolyRing
        raise ValueError(f"unknown order {order!r}")

    if elim_rank is None:
        def negkey(pos, m):
            return (-(sum(m) + gd[pos]),) + monpart(m) + (pos,)
    else:
        r = elim_rank

        def negkey(pos, m):
            return (0 if pos < r else 1, -(sum(m) + gd[pos])) + monpart(m) + (pos,)
    return negkey


def _mono_divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class _Basis:
    """Mutable working state for one Buchberger run."""

    def __init__(self, ring: PolyRing, gen_degrees: tuple, negkey):
        self.ring = ring
        self.field = ring.field
        self.gd = gen_degrees
        self.negkey = negkey
        self.leads = []      # (pos, exps) per element
        self.tails = []      # list of ((pos, exps), coeff) pairs per element
        self.buckets = {}    # lead pos -> list of (exps, index)

    def add(self, vec: dict, lead) -> int:
        pos, m = lead
        tail = [(k, c) for k, c in vec.items() if k != lead]
        idx = len(self.leads)
        self.leads.append(lead)
        self.tails.append(tail)
        self.buckets.setdefault(pos, []).append((m, idx))
        return idx

    def find_reducer(self, pos, m, skip: int | None = None):
        for exps, idx in self.buckets.get(pos, ()):
            if idx != skip and _mono_divides(exps, m):
                return idx
        return None

    def normal_form(self, vec: dict, skip: int | None = None) -> dict:
        """Full normal form; every term of the result is irreducible."""
        field = self.field
        p = field.p
        negkey = self.negkey
        work = dict(vec)
        rem: dict = {}
        heap = []
        for (pos, m) in work:
            heappush(heap, (negkey(pos, m), pos, m))
        while heap:
            _, pos, m = heappop(heap)
            key = (pos, m)
            c = work.get(key)
            if c is None:
                continue
            idx = self.find_reducer(pos, m, skip)
            del work[key]
            if idx is None:
                rem[key] = c
                continue
            gpos, gm = self.leads[idx]
            shift = tuple(a - b for a, b in zip(m, gm))
            tail = self.tails[idx]
            if p is not None:
                for (i2, m2), c2 in tail:
                    m3 = tuple(a + b for a, b in zip(m2, shift))
                    k2 = (i2, m3)
                    old = work.get(k2)
                    if old is None:
                        v = (-c * c2) % p
                        if v:
                            work[k2] = v
                            heappush(heap, (negkey(i2, m3), i2, m3))
                    else:
                        v = (old - c * c2) % p
                        if v:
                            work[k2] = v
                        else:
                            del work[k2]
            else:
                for (i2, m2), c2 in tail:
                    m3 = tuple(a + b for a, b in zip(m2, shift))
                    k2 = (i2, m3)
                    old = work.get(k2)
                    if old is None:
                        v = -c * c2
                        if v:
                            work[k2] = v
                            heappush(heap, (negkey(i2, m3), i2, m3))
                    else:
                        v = old - c * c2
                        if v:
                            work[k2] = v
                        else:
                            del work[k2]
        return rem


def _lead_of(vec: dict, negkey):
    return min(vec, key=lambda k: negkey(*k))


def _monic(vec: dict, lead, field) -> dict:
    c = vec[lead]
    if c == field.one:
        return vec
    inv = field.inv(c)
    if field.p is not None:
        p = field.p
        return {k: (v * inv) % p for k, v in vec.items()}
    return {k: v * inv for k, v in vec.items()}


def _term_degree(key, gd) -> int:
    pos, m = key
    return sum(m) + gd[pos]


def _buchberger_core(ring, gen_degrees, vecs, negkey, cap):
    """Reduced monic Groebner basis of the span of vecs, as vec dicts."""
    basis = _Basis(ring, gen_degrees, negkey)
    gd = gen_degrees
    rank1 = len(gen_degrees) == 1

    pairs: dict = {}  # (i, j) with i < j, same lead position -> selection key

    def lcm_of(i, j):
        return tuple(max(a, b) for a, b in zip(basis.leads[i][1], basis.leads[j][1]))

    def pair_key(i, j):
        l = lcm_of(i, j)
        pos = basis.leads[i][0]
        return (sum(l) + gd[pos], negkey(pos, l), i, j)

    def update_pairs(t):
        pos_t, lm_t = basis.leads[t]
        # prune old pairs via the chain criterion
        drop = []
        for (i, j) in pairs:
            if basis.leads[i][0] != pos_t:
                continue
            l = lcm_of(i, j)
            if (
                _mono_divides(lm_t, l)
                and tuple(max(a, b) for a, b in zip(basis.leads[i][1], lm_t)) != l
                and tuple(max(a, b) for a, b in zip(basis.leads[j][1], lm_t)) != l
            ):
                drop.append((i, j))
        for pr in drop:
            del pairs[pr]
        # group candidate new pairs by lcm, keep only minimal lcms
        lcms: dict = {}
        for i in range(t):
            if basis.leads[i][0] != pos_t:
                continue
            lcms.setdefault(lcm_of(i, t), []).append(i)
        kept: list = []
        for l in sorted(lcms, key=lambda m: (sum(m), m)):
            if any(_mono_divides(k, l) for k in kept):
                continue
            kept.append(l)
            cands = lcms[l]
            if rank1 and any(
                all(a + b == c for a, b, c in zip(basis.leads[i][1], lm_t, l))
                for i in cands
            ):
                continue  # Buchberger's coprimality criterion (ideals only)
            pr = (min(cands), t)
            pairs[pr] = pair_key(*pr)

    def insert(vec):
        red = basis.normal_form(vec)
        if not red:
            return
        lead = _lead_of(red, negkey)
        red = _monic(red, lead, ring.field)
        t = basis.add(red, lead)
        update_pairs(t)

    # deterministic insertion order: by degree, then by leading term
    prepared = []
    for vec in vecs:
        if vec:
            lead = _lead_of(vec, negkey)
            prepared.append((_term_degree(lead, gd), negkey(*lead), vec))
    prepared.sort(key=lambda t: (t[0], t[1]))
    for _, _, vec in prepared:
        insert(vec)

    while pairs:
        best, best_key = min(pairs.items(), key=lambda kv: kv[1])
        if best_key[0] > cap:
            raise DegreeCapExceededError(best_key[0], cap)
        i, j = best
        del pairs[best]
        pos, _ = basis.leads[i]
        l = lcm_of(i, j)
        si = tuple(a - b for a, b in zip(l, basis.leads[i][1]))
        sj = tuple(a - b for a, b in zip(l, basis.leads[j][1]))
        field = ring.field
        p = field.p
        spoly: dict = {}
        for (pp, m), c in [((pos, basis.leads[i][1]), field.one)] + basis.tails[i]:
            k = (pp, tuple(a + b for a, b in zip(m, si)))
            spoly[k] = c if k not in spoly else field.add(spoly[k], c)
        for (pp, m), c in [((pos, basis.leads[j][1]), field.one)] + basis.tails[j]:
            k = (pp, tuple(a + b for a, b in zip(m, sj)))
            v = field.sub(spoly.get(k, field.zero), c)
            if v == field.zero:
                spoly.pop(k, None)
            else:
                spoly[k] = v
        insert(spoly)

    # minimalize: drop elements whose lead is divisible by another kept lead
    order_idx = sorted(
        range(len(basis.leads)),
        key=lambda t: (_term_degree(basis.leads[t], gd), negkey(*basis.leads[t])),
    )
    kept_idx: list = []
    for t in order_idx:
        pos, m = basis.leads[t]
        if any(
            basis.leads[s][0] == pos and _mono_divides(basis.leads[s][1], m)
            for s in kept_idx
        ):
            continue
        kept_idx.append(t)

    # interreduce tails against the kept leads
    final = _Basis(ring, gen_degrees, negkey)
    for t in kept_idx:
        vec = {basis.leads[t]: ring.field.one}
        vec.update({k: c for k, c in basis.tails[t]})
        final.add(vec, basis.leads[t])
    out = []
    for s in range(len(kept_idx)):
        vec = {final.leads[s]: ring.field.one}
        vec.update({k: c for k, c in final.tails[s]})
        red = final.normal_form(vec, skip=s)
        out.append(red)
    out.sort(key=lambda v: (_term_degree(_lead_of(v, negkey), gd), negkey(*_lead_of(v, negkey))))
    return out


def _check_homogeneous(elems):
    for e in elems:
        if not e.is_homogeneous():
            raise NotHomogeneousError("Groebner input must be homogeneous")


class Submodule:
    """A finitely generated graded submodule of a free module."""

    __slots__ = ("ambient", "gens")

    def __init__(self, ambient: FreeModule, gens):
        gens = tuple(g for g in gens if not g.is_zero())
        for g in gens:
            if g.module != ambient:
                raise RingMismatchError("generator outside the ambient free module")
        _check_homogeneous(gens)
        self.ambient = ambient
        self.gens = gens

    def __repr__(self):
        return f"Submodule({self.ambient}, {len(self.gens)} gens)"


class GroebnerBasis:
    """Reduced monic Groebner basis, canonically sorted."""

    __slots__ = ("ambient", "elements")

    def __init__(self, ambient: FreeModule, elements):
        self.ambient = ambient
        self.elements = tuple(elements)

    @property
    def lead_terms(self):
        negkey = _make_negkey(self.ambient.ring.order, self.ambient.gen_degrees, None)
        return tuple(_lead_of(e.vec, negkey) for e in self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ambient == other.ambient
            and self.elements == other.elements
        )

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements)"


def buchberger(sub: Submodule, degree_cap: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of a graded submodule."""
    ring = sub.ambient.ring
    gd = sub.ambient.gen_degrees
    cap = config.degree_cap(degree_cap)
    negkey = _make_negkey(ring.order, gd, None)
    out = _buchberger_core(ring, gd, [g.vec for g in sub.gens], negkey, cap)
    return GroebnerBasis(sub.ambient, [ModuleElement(sub.ambient, v) for v in out])


def normal_form(elem: ModuleElement, gb: GroebnerBasis) -> ModuleElement:
    """Unique remainder of elem modulo the reduced basis."""
    if elem.module != gb.ambient:
        raise RingMismatchError("element outside the basis ambient module")
    ring = gb.ambient.ring
    gd = gb.ambient.gen_degrees
    negkey = _make_negkey(ring.order, gd, None)
    basis = _Basis(ring, gd, negkey)
    for g in gb.elements:
        basis.add(dict(g.vec), _lead_of(g.vec, negkey))
    return ModuleElement(gb.ambient, basis.normal_form(elem.vec))


def membership(elem: ModuleElement, gb: GroebnerBasis) -> bool:
    return normal_form(elem, gb).is_zero()


def syzygy_basis(sub: Submodule, degree_cap: int | None = None) -> Submodule:
    """Generators (a Groebner basis) of the syzygy module of sub.gens.

    The result lives in a free module with one coordinate per generator,
    twisted so that syzygies are homogeneous.
    """
    ring = sub.ambient.ring
    cap = config.degree_cap(degree_cap)
    r = sub.ambient.rank
    gens = sub.gens
    s = len(gens)
    gen_deg = tuple(g.degree() for g in gens)
    aug_gd = sub.ambient.gen_degrees + gen_deg
    negkey = _make_negkey(ring.order, aug_gd, r)
    vecs = []
    zero_mono = (0,) * ring.nvars
    for i, g in enumerate(gens):
        v = dict(g.vec)
        v[(r + i, zero_mono)] = ring.field.one
        vecs.append(v)
    out = _buchberger_core(ring, aug_gd, vecs, negkey, cap)
    syz_free = FreeModule(ring, tuple(-d for d in gen_deg))
    syz_gens = []
    for v in out:
        if all(pos >= r for (pos, _) in v):
            syz_gens.append(
                ModuleElement(syz_free, {(pos - r, m): c for (pos, m), c in v.items()})
            )
    return Submodule(syz_free, syz_gens)


def kernel_of_map(
    source: FreeModule,
    columns,
    target_relations=(),
    degree_cap: int | None = None,
) -> Submodule:
    """Kernel of the map source -> target/(target_relations).

    columns[j] is the image of the j-th generator of source; they and the
    target relations all live in the same target free module.  Returns
    generators of {u in source : sum u_j columns_j lies in the span of
    target_relations} as a submodule of source.
    """
    columns = list(columns)
    target_relations = list(target_relations)
    if len(columns) != source.rank:
        raise RingMismatchError("column count does not match source rank")
    for j, c in enumerate(columns):
        if not c.is_zero() and c.degree() != source.gen_degrees[j]:
            raise NotHomogeneousError(
                f"column {j} has degree {c.degree()}, expected {source.gen_degrees[j]}"
            )
    if not columns and not target_relations:
        return Submodule(source, [])
    ambient = columns[0].module if columns else target_relations[0].module
    ring = ambient.ring
    cap = config.degree_cap(degree_cap)
    r = ambient.rank
    all_cols = columns + target_relations
    col_deg = tuple(
        source.gen_degrees[j] if j < len(columns) else all_cols[j].degree()
        for j in range(len(all_cols))
    )
    aug_gd = ambient.gen_degrees + col_deg
    negkey = _make_negkey(ring.order, aug_gd, r)
    zero_mono = (0,) * ring.nvars
    vecs = []
    for i, g in enumerate(all_cols):
        if g.module != ambient:
            raise RingMismatchError("columns live in different target modules")
        v = dict(g.vec)
        v[(r + i, zero_mono)] = ring.field.one
        vecs.append(v)
    out = _buchberger_core(ring, aug_gd, vecs, negkey, cap)
    ncols = len(columns)
    seen = set()
    gens = []
    for v in out:
        if all(pos >= r for (pos, _) in v):
            proj = {
                (pos - r, m): c for (pos, m), c in v.items() if pos - r < ncols
            }
            if proj:
                key = frozenset(proj.items())
                if key not in seen:
                    seen.add(key)
                    gens.append(ModuleElement(source, proj))
    return Submodule(source, gens)


def ideal_gb(ring: PolyRing, polys, degree_cap: int | None = None) -> GroebnerBasis:
    """Groebner basis of an ideal, via the rank-one free module."""
    free = FreeModule(ring, (0,))
    gens = [free.element([p]) for p in polys]
    return buchberger(Submodule(free, gens), degree_cap)

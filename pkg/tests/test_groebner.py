"""Buchberger engine tests.

The twisted cubic quadrics are used throughout: their reduced basis,
syzygies and leading terms were worked out by hand (the three quadrics
are already a Groebner basis in grevlex, with the two linear syzygies
coming from the 2x3 matrix whose minors they are).
"""

import pytest

from gint.errors import DegreeCapExceededError, NotHomogeneousError
from gint.fields import QQ, Field
from gint.groebner import (
    GroebnerBasis,
    Submodule,
    buchberger,
    ideal_gb,
    kernel_of_map,
    membership,
    normal_form,
    syzygy_basis,
)
from gint.parser import parse_poly
from gint.ring import FreeModule, PolyRing


def ring(names, field=None, order="grevlex"):
    return PolyRing(field or Field(32003), names, order)


def polys(R, *srcs):
    return [parse_poly(s, R) for s in srcs]


def ideal_sub(R, *srcs):
    F = FreeModule(R, (0,))
    return Submodule(F, [F.element([p]) for p in polys(R, *srcs)])


def spans_same(sub_a: Submodule, sub_b: Submodule) -> bool:
    """Module equality via mutual reduction to zero."""
    ga, gb = buchberger(sub_a), buchberger(sub_b)
    return all(membership(g, gb) for g in sub_a.gens) and all(
        membership(g, ga) for g in sub_b.gens
    )


def is_groebner(gb: GroebnerBasis) -> bool:
    """Black-box S-pair check: every same-position S-vector reduces to zero."""
    R = gb.ambient.ring
    els = gb.elements
    leads = gb.lead_terms
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            (pi, mi), (pj, mj) = leads[i], leads[j]
            if pi != pj:
                continue
            lcm = tuple(max(a, b) for a, b in zip(mi, mj))
            si = R.monomial(tuple(a - b for a, b in zip(lcm, mi)))
            sj = R.monomial(tuple(a - b for a, b in zip(lcm, mj)))
            ci = els[i].vec[(pi, mi)]
            cj = els[j].vec[(pj, mj)]
            s = els[i].mul_poly(si).scale(R.field.inv(ci)) - els[j].mul_poly(
                sj
            ).scale(R.field.inv(cj))
            if not normal_form(s, gb).is_zero():
                return False
    return True


TWISTED_CUBIC = ("x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2")


def test_twisted_cubic_basis():
    R = ring(("x0", "x1", "x2", "x3"))
    gb = ideal_gb(R, polys(R, *TWISTED_CUBIC))
    assert len(gb.elements) == 3
    # reduced, monic, sorted with the largest lead first within a degree
    comps = [e.components[0] for e in gb.elements]
    assert comps[0] == parse_poly("x1^2 - x0*x2", R)
    assert comps[1] == parse_poly("x1*x2 - x0*x3", R)
    assert comps[2] == parse_poly("x2^2 - x1*x3", R)
    assert is_groebner(gb)


def test_twisted_cubic_over_rationals():
    R = ring(("x0", "x1", "x2", "x3"), QQ)
    gb = ideal_gb(R, polys(R, *TWISTED_CUBIC))
    assert [e.components[0] for e in gb.elements] == polys(
        R, "x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"
    )


def test_membership_twisted_cubic():
    R = ring(("x0", "x1", "x2", "x3"))
    gb = ideal_gb(R, polys(R, *TWISTED_CUBIC))
    F = gb.ambient
    inside = parse_poly("(x0*x2 - x1^2)*x3 + (x0*x3 - x1*x2)*x1", R)
    assert membership(F.element([inside]), gb)
    assert not membership(F.element([parse_poly("x0^3", R)]), gb)
    assert not membership(F.element([parse_poly("x0*x2", R)]), gb)


def test_normal_form_is_idempotent_and_linear():
    R = ring(("x0", "x1", "x2", "x3"))
    gb = ideal_gb(R, polys(R, *TWISTED_CUBIC))
    F = gb.ambient
    v = F.element([parse_poly("x0^2*x2 + x1^3 + x2*x3^2", R)])
    r = normal_form(v, gb)
    assert normal_form(r, gb) == r
    w = F.element([parse_poly("x0*x1*x3", R)])
    lhs = normal_form(v + w, gb)
    assert lhs == normal_form(normal_form(v, gb) + normal_form(w, gb), gb)


def test_redundant_generators_collapse():
    R = ring(("x0", "x1", "x2"))
    gb = ideal_gb(R, polys(R, "x0", "x1", "x0 + x1", "x0^2"))
    comps = [e.components[0] for e in gb.elements]
    assert comps == polys(R, "x0", "x1")


def test_monomial_ideal_passthrough():
    R = ring(("x0", "x1"))
    gb = ideal_gb(R, polys(R, "x0^2", "x0*x1"))
    comps = [e.components[0] for e in gb.elements]
    assert comps == polys(R, "x0^2", "x0*x1")
    assert is_groebner(gb)


def test_homogeneous_input_required():
    R = ring(("x0", "x1"))
    with pytest.raises(NotHomogeneousError):
        ideal_gb(R, polys(R, "x0^2 + x1"))


def test_degree_cap_raises():
    R = ring(("x0", "x1"))
    # leads x0^10 and x0^5*x1^5 force one S-pair of degree 15
    with pytest.raises(DegreeCapExceededError) as ei:
        ideal_gb(R, polys(R, "x0^5*x1^5 - x0^10", "x0^5*x1^5 - x1^10"), degree_cap=10)
    assert ei.value.cap == 10
    assert ei.value.degree == 15


def test_module_basis_two_positions():
    # submodule of R^2 generated by (x0, x1) and (x1, x0): S-pairs only
    # form within a position, so both generators survive plus completions
    R = ring(("x0", "x1"))
    F = FreeModule(R, (0, 0))
    sub = Submodule(F, [F.element(polys(R, "x0", "x1")), F.element(polys(R, "x1", "x0"))])
    gb = buchberger(sub)
    assert is_groebner(gb)
    for g in sub.gens:
        assert membership(g, gb)
    # (x1^2 - x0^2) * e1 lies in the span: x1*(x0,x1) - x0*(x1,x0)
    probe = F.element(polys(R, "0", "x1^2 - x0^2"))
    assert membership(probe, gb)
    probe2 = F.element(polys(R, "0", "x1^2"))
    assert not membership(probe2, gb)


def test_syzygies_of_twisted_cubic():
    R = ring(("x0", "x1", "x2", "x3"))
    sub = ideal_sub(R, "x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3")
    syz = syzygy_basis(sub)
    assert syz.ambient.gen_degrees == (2, 2, 2)
    # every output is a genuine syzygy
    gens = sub.gens
    for s in syz.gens:
        comb = None
        for i, p in enumerate(s.components):
            t = gens[i].mul_poly(p)
            comb = t if comb is None else comb + t
        assert comb.is_zero()
    # the two Hilbert-Burch syzygies generate; check mutual containment
    expected = Submodule(
        syz.ambient,
        [
            syz.ambient.element(polys(R, "-x2", "x1", "-x0")),
            syz.ambient.element(polys(R, "-x3", "x2", "-x1")),
        ],
    )
    assert spans_same(syz, expected)
    # the basis may carry non-minimal completions, but generation starts in degree 3
    assert min(s.degree() for s in syz.gens) == 3


def test_koszul_kernel():
    R = ring(("x0", "x1", "x2"))
    target = FreeModule(R, (0,))
    source = FreeModule(R, (-1, -1, -1))
    cols = [target.element([R.var(i)]) for i in range(3)]
    ker = kernel_of_map(source, cols)
    expected = Submodule(
        source,
        [
            source.element(polys(R, "x1", "-x0", "0")),
            source.element(polys(R, "x2", "0", "-x0")),
            source.element(polys(R, "0", "x2", "-x1")),
        ],
    )
    assert spans_same(ker, expected)


def test_kernel_with_target_relations():
    # kernel of R(-1)^2 --(x0, x1)--> R/(x0^2, x0*x1, x1^2)
    R = ring(("x0", "x1"))
    target = FreeModule(R, (0,))
    source = FreeModule(R, (-1, -1))
    cols = [target.element([R.var(0)]), target.element([R.var(1)])]
    rels = [
        target.element([p]) for p in polys(R, "x0^2", "x0*x1", "x1^2")
    ]
    ker = kernel_of_map(source, cols, rels)
    # kernel is m * (e0, e1): four generators span (x0,x1) + (x0,x1)
    expected = Submodule(
        source,
        [
            source.element(polys(R, "x0", "0")),
            source.element(polys(R, "x1", "0")),
            source.element(polys(R, "0", "x0")),
            source.element(polys(R, "0", "x1")),
        ],
    )
    assert spans_same(ker, expected)


def test_kernel_of_injective_map_is_zero():
    R = ring(("x0", "x1"))
    target = FreeModule(R, (0,))
    source = FreeModule(R, (-2,))
    cols = [target.element([parse_poly("x0^2 + x1^2", R)])]
    ker = kernel_of_map(source, cols)
    assert ker.gens == ()


def test_principal_submodule_membership():
    R = ring(("x0", "x1"))
    F = FreeModule(R, (-1,))
    sub = Submodule(F, [F.element([R.var(0)])])
    gb = buchberger(sub)
    assert membership(F.element([parse_poly("x0*x1^5", R)]), gb)
    assert not membership(F.element([parse_poly("x1^6", R)]), gb)


def test_elimination_order_blocks():
    from gint.groebner import _make_negkey

    nk = _make_negkey("grevlex", (0, 0, 1), elim_rank=2)
    # any term in the leading block beats any term in the tag block
    lead = nk(0, (5, 5))
    tag = nk(2, (0, 0))
    assert lead < tag  # smaller negkey means larger term

"""Checks on top of the module layer: intersection, Bezout, lifting, splitting.

Expected values were frozen from cross-checked runs: every degree that a
check compares was recomputed from the Hilbert numerator of an
independently built quotient, Ext dimensions appearing in pass/fail
verdicts were confirmed against the Macaulay-matrix oracle in
test_modalg, and the reflexivity verdicts for the two-point ideals are
backed by an explicit double-dual witness (the double dual of the
section module is the free module of rank one, so it cannot be
reflexive regardless of what the Ext bounds say).
"""

import pytest

from gint.criteria import (
    CheckReport,
    ModuleFlags,
    bezout_check,
    betti_join_check,
    cm_lifting_check,
    cm_type,
    degree_hypersurface_check,
    depth_formula_check,
    has_finite_ext_certificate,
    hyperplane_lift_check,
    intersects_properly,
    intersects_very_properly,
    is_cohen_macaulay,
    is_unmixed,
    kunneth_check,
    maximal_module_flags,
    module_is_unmixed,
    splitting_check,
    type_product_check,
)
from gint.errors import GintError, RingMismatchError, ZeroModuleError
from gint.fields import Field
from gint.modalg import (
    direct_sum,
    dual,
    ext_module,
    free_presentation,
    ideal_submodule,
    iso_compare,
    join_over_field,
    module_of_ideal,
    quotient_module,
    random_complete_intersection,
    saturate,
    sections_h0,
    syzygy_module,
    tensor_over_ring,
    zero_presentation,
)
from gint.parser import parse_poly
from gint.ring import PolyRing


def ring(n):
    return PolyRing(Field(32003), tuple(f"x{i}" for i in range(n)))


def ideal(R, *srcs):
    return ideal_submodule(R, [parse_poly(s, R) for s in srcs])


def quo(R, *srcs):
    return quotient_module(ideal(R, *srcs))


SKEW = ("x0*x2", "x0*x3", "x1*x2", "x1*x3")
DISJOINT_LINE = ("x1 + x2", "x0 + x3")
TWISTED_CUBIC = ("x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2")


@pytest.fixture(scope="module")
def R4():
    return ring(4)


@pytest.fixture(scope="module")
def skew(R4):
    return quo(R4, *SKEW)


@pytest.fixture(scope="module")
def line(R4):
    return quo(R4, *DISJOINT_LINE)


@pytest.fixture(scope="module")
def cubic(R4):
    return quo(R4, *TWISTED_CUBIC)


@pytest.fixture(scope="module")
def quadric(R4):
    return quo(R4, "x0*x1 - x2*x3")


@pytest.fixture(scope="module")
def plane(R4):
    return quo(R4, "x0 + x1 + x2 + x3")


@pytest.fixture(scope="module")
def two_points(R4):
    """Ideals and first syzygies of two distinct coordinate points."""
    i1 = ideal(R4, "x1", "x2", "x3")
    i2 = ideal(R4, "x0", "x2", "x3")
    return {
        "M1": module_of_ideal(i1),
        "M2": module_of_ideal(i2),
        "E1": syzygy_module(i1, 1),
        "E2": syzygy_module(i2, 1),
    }


# -- unmixedness and flags ---------------------------------------------------------


def test_unmixed_skew_lines(skew):
    r = is_unmixed(skew)
    assert r.conclusion == "pass" and r.ok
    assert r.numeric_evidence == {
        "dim": 2,
        "ext2_dim": 2,
        "ext3_dim": 0,
        "ext4_dim": -1,
    }


def test_unmixed_complete_intersection_line(line):
    r = is_unmixed(line)
    assert r.ok
    assert r.numeric_evidence["ext3_dim"] == -1
    assert module_is_unmixed(line)


def test_mixed_direct_sum_fails(R4):
    # a hyperplane plus an embedded-looking point component of dim 1
    m = direct_sum(quo(R4, "x0"), quo(R4, "x0", "x1", "x2"))
    r = is_unmixed(m)
    assert r.conclusion == "fail" and not r.ok
    assert r.numeric_evidence["ext1_dim"] == 3
    assert r.numeric_evidence["ext3_dim"] == 1


def test_unmixed_zero_module_raises(R4):
    with pytest.raises(ZeroModuleError):
        is_unmixed(zero_presentation(R4))
    with pytest.raises(ZeroModuleError):
        module_is_unmixed(zero_presentation(R4))


def test_flags_free_module(R4):
    flags = maximal_module_flags(free_presentation(R4, (-1, 2)))
    assert flags == ModuleFlags(True, True, True)


def test_flags_lower_dimensional_module(skew):
    assert maximal_module_flags(skew) == ModuleFlags(False, False, False)


def test_finite_ext_certificate(R4, skew, quadric):
    assert has_finite_ext_certificate(skew)
    assert has_finite_ext_certificate(quadric)
    mixed = direct_sum(quo(R4, "x0"), quo(R4, "x0", "x1", "x2"))
    assert not has_finite_ext_certificate(mixed)
    with pytest.raises(ZeroModuleError):
        has_finite_ext_certificate(zero_presentation(R4))


# -- proper and very proper --------------------------------------------------------


def test_proper_skew_and_disjoint_line(skew, line):
    r = intersects_properly(skew, line)
    assert r.ok
    assert r.numeric_evidence == {
        "dim_left": 2,
        "dim_right": 2,
        "dim_tensor": 0,
        "dim_expected": 0,
    }


def test_proper_fails_on_self_intersection(R4):
    h = quo(R4, "x0")
    r = intersects_properly(h, h)
    assert r.conclusion == "fail"
    assert r.numeric_evidence["dim_tensor"] == 3
    assert r.numeric_evidence["dim_expected"] == 2


def test_very_proper_skew_and_line(skew, line):
    r = intersects_very_properly(skew, line)
    assert r.ok
    # both Ext pair rows hit the expected dimension exactly
    assert r.numeric_evidence["ext2_ext2_dim"] == 0
    assert r.numeric_evidence["ext2_ext2_want"] == 0
    assert r.numeric_evidence["ext3_ext2_dim"] == 0


def test_intersection_checks_need_common_ring(skew):
    other = quo(ring(3), "x0")
    with pytest.raises(RingMismatchError):
        intersects_properly(skew, other)
    with pytest.raises(RingMismatchError):
        intersects_very_properly(skew, other)


def test_very_proper_implies_proper(skew, line, quadric, plane, cubic):
    pairs = [
        (skew, line),
        (quadric, plane),
        (cubic, plane),
        (skew, quadric),
    ]
    for a, b in pairs:
        if intersects_very_properly(a, b).ok:
            assert intersects_properly(a, b).ok


def test_proper_certified_pairs_are_very_proper(skew, line, quadric, plane, cubic):
    # unmixed factors with finite Ext certificates meeting properly
    pairs = [(skew, line), (quadric, plane), (cubic, plane), (skew, quadric)]
    for a, b in pairs:
        assert module_is_unmixed(a) and module_is_unmixed(b)
        assert has_finite_ext_certificate(a) and has_finite_ext_certificate(b)
        assert intersects_properly(a, b).ok
        assert intersects_very_properly(a, b).ok


# -- Bezout -------------------------------------------------------------------------------


def test_bezout_skew_lines_meet_disjoint_line(skew, line):
    """Degree 3 against the product 2: blocked by the dimension condition.

    The intersection is a length-3 scheme supported at the cone point
    while the factor depths only add to 3, so the check reports the
    failed hypothesis rather than a broken theorem.
    """
    r = bezout_check(skew, line)
    assert r.conclusion == "hypotheses-not-met"
    assert r.numeric_evidence["deg_tensor"] == 3
    assert r.numeric_evidence["deg_product"] == 2
    assert r.numeric_evidence["dim_tensor"] == 0
    assert r.numeric_evidence["sm_unmixed"] == 1
    held = [h for _, h, _ in r.hypotheses]
    assert held == [True, True, True, False]


def test_bezout_twisted_cubic_times_plane(cubic, plane):
    r = bezout_check(cubic, plane)
    assert r.ok
    assert r.numeric_evidence["deg_tensor"] == 3
    assert r.numeric_evidence["deg_product"] == 3


def test_bezout_quadric_times_plane(quadric, plane):
    r = bezout_check(quadric, plane)
    assert r.ok
    assert r.numeric_evidence["deg_tensor"] == 2


def test_bezout_random_complete_intersections(R4):
    for seed in (11, 12):
        fa = random_complete_intersection(R4, [2], seed=seed)
        fb = random_complete_intersection(R4, [2, 1], seed=seed + 100)
        a = quotient_module(ideal_submodule(R4, fa))
        b = quotient_module(ideal_submodule(R4, fb))
        r = bezout_check(a, b)
        assert r.ok
        assert r.numeric_evidence["deg_tensor"] == 4
        assert r.numeric_evidence["dim_tensor"] == 1


# -- degree under a hypersurface section ----------------------------------------------


def test_degree_section_free_module(R4):
    r = degree_hypersurface_check(
        free_presentation(R4, (0,)), parse_poly("x0^2 - x1*x2", R4)
    )
    assert r.ok
    assert r.numeric_evidence["deg_section"] == 2
    assert r.numeric_evidence["colon_dim"] == -1


def test_degree_section_with_colon_correction():
    # (0 : x1) has the same dimension as the cut, so its degree is added
    R2 = ring(2)
    m = quo(R2, "x0^2", "x0*x1")
    r = degree_hypersurface_check(m, parse_poly("x1", R2))
    assert r.ok
    assert r.numeric_evidence == {
        "degree_of_element": 1,
        "deg_module": 1,
        "deg_section": 2,
        "deg_expected": 2,
        "colon_dim": 0,
        "colon_degree": 1,
    }


def test_degree_section_skew_lines_generic_linear(R4, skew):
    r = degree_hypersurface_check(skew, parse_poly("x0 + x1 + 3*x2 + 7*x3", R4))
    assert r.ok
    assert r.numeric_evidence["deg_section"] == 2
    assert r.numeric_evidence["colon_dim"] == -1


def test_degree_section_rejects_bad_elements(R4, skew):
    with pytest.raises(GintError):
        degree_hypersurface_check(skew, R4.zero())
    with pytest.raises(GintError):
        # annihilates the module, so the cut does not drop dimension
        degree_hypersurface_check(skew, parse_poly("x0*x2", R4))
    with pytest.raises(GintError):
        degree_hypersurface_check(
            quo(R4, "x0", "x1", "x2", "x3"), parse_poly("x0", R4)
        )


# -- depth formula ------------------------------------------------------------------------


def test_depth_formula_drops_to_zero(skew, line):
    r = depth_formula_check(skew, line)
    assert r.ok
    assert r.numeric_evidence == {
        "depth_left": 1,
        "depth_right": 2,
        "depth_tensor": 0,
        "depth_expected": 0,
    }


def test_depth_formula_two_quadrics(R4):
    a = quo(R4, "x0^2 + x1*x3")
    b = quo(R4, "x2^2 + 5*x0*x1")
    r = depth_formula_check(a, b)
    assert r.ok
    assert r.numeric_evidence["depth_tensor"] == 2


def test_depth_formula_free_factor(R4, skew):
    r = depth_formula_check(free_presentation(R4, (0,)), skew)
    assert r.ok
    assert r.numeric_evidence["depth_tensor"] == 1
    assert r.numeric_evidence["depth_expected"] == 1


# -- Cohen-Macaulay lifting ------------------------------------------------------------


def test_cm_predicates(R4, cubic, skew):
    assert is_cohen_macaulay(zero_presentation(R4))
    assert is_cohen_macaulay(cubic)
    assert not is_cohen_macaulay(skew)
    assert cm_type(cubic) == 2
    with pytest.raises(ZeroModuleError):
        cm_type(zero_presentation(R4))


def test_cm_lifting_quadric_times_plane(quadric, plane):
    r = cm_lifting_check(quadric, plane)
    assert r.ok
    assert r.numeric_evidence["dim_saturated"] == 2
    assert r.numeric_evidence["depth_saturated"] == 2
    assert r.numeric_evidence["cm_left"] == 1
    assert r.numeric_evidence["cm_right"] == 1


def test_cm_lifting_blocked_by_dimension_condition(skew, line):
    r = cm_lifting_check(skew, line)
    assert r.conclusion == "hypotheses-not-met"
    assert r.numeric_evidence["cm_left"] == 0
    assert r.numeric_evidence["cm_right"] == 1
    held = [h for _, h, _ in r.hypotheses]
    assert held == [True, True, True, False]


def test_type_multiplies(quadric, cubic, plane, skew):
    r = type_product_check(quadric, plane)
    assert r.ok and r.numeric_evidence["type_intersection"] == 1
    r = type_product_check(cubic, plane)
    assert r.ok
    assert r.numeric_evidence == {
        "type_left": 2,
        "type_right": 1,
        "type_product": 2,
        "type_intersection": 2,
    }
    assert type_product_check(skew, plane).conclusion == "hypotheses-not-met"


# -- joins ---------------------------------------------------------------------------------------


def test_kunneth_point_pair():
    R1 = ring(1)
    k = quo(R1, "x0")
    r = kunneth_check(k, k, range(-5, 6))
    assert r.ok
    assert r.numeric_evidence == {
        "points_checked": 33,
        "mismatches": 0,
        "join_variables": 2,
    }


def test_kunneth_mixed_depths_and_depth_additivity():
    R2 = ring(2)
    m1 = quo(R2, "x0")
    m2 = quo(R2, "x0^2", "x0*x1")
    r = kunneth_check(m1, m2, range(-5, 6))
    assert r.ok
    assert r.numeric_evidence["points_checked"] == 55
    assert r.numeric_evidence["join_variables"] == 4
    assert join_over_field(m1, m2).depth() == m1.depth() + m2.depth() == 1


def test_betti_join_convolution(skew, quadric):
    r = betti_join_check(skew, quadric)
    assert r.ok
    assert r.numeric_evidence["total_join"] == 20
    assert r.numeric_evidence["mismatches"] == 0


def test_betti_join_two_points_is_koszul():
    R2 = ring(2)
    pt = quo(R2, "x0", "x1")
    r = betti_join_check(pt, pt)
    assert r.ok and r.numeric_evidence["total_join"] == 16
    assert join_over_field(pt, pt).homological().betti.totals == (1, 4, 6, 4, 1)


def test_join_cm_iff_both_factors_cm(cubic, quadric, skew):
    assert is_cohen_macaulay(join_over_field(cubic, quadric))
    assert not is_cohen_macaulay(join_over_field(skew, quadric))


# -- hyperplane lifting ------------------------------------------------------------------


def test_lift_depth_through_regular_section():
    R5 = ring(5)
    m = quo(R5, "x0*x1 - x2*x3")
    r = hyperplane_lift_check(m, parse_poly("x4", R5))
    assert r.ok
    assert r.numeric_evidence == {
        "depth_module": 4,
        "section_depth": 3,
        "dim_module": 4,
        "section_saturated": 1,
    }


def test_lift_blocked_by_shallow_section():
    R5 = ring(5)
    m = quo(R5, *SKEW)
    r = hyperplane_lift_check(m, parse_poly("x0 + x1 + 3*x2 + 7*x3 + x4", R5))
    assert r.conclusion == "hypotheses-not-met"
    assert r.numeric_evidence["section_depth"] == 1
    assert r.numeric_evidence["depth_module"] == 2


def test_lift_twisted_cubic_cone():
    R5 = ring(5)
    m = quo(R5, *TWISTED_CUBIC)
    r = hyperplane_lift_check(m, parse_poly("x4", R5))
    assert r.ok
    assert r.numeric_evidence["depth_module"] == 3
    assert r.numeric_evidence["section_depth"] == 2


def test_lift_rejects_zero_divisor():
    R2 = ring(2)
    with pytest.raises(GintError):
        hyperplane_lift_check(quo(R2, "x0*x1"), parse_poly("x0", R2))


# -- splitting -----------------------------------------------------------------------------------


def test_splitting_free_module(R4):
    r = splitting_check(free_presentation(R4, (-1, 2)), "end_vanishing")
    assert r.ok
    assert r.numeric_evidence == {
        "h1_end_vanishes": 1,
        "module_is_free": 1,
        "end_sections_depth": 4,
    }


def test_splitting_koszul_syzygies_have_cohomology():
    # first syzygies of the variables on the plane: not free, and the
    # check sees the nonvanishing H^1 of the endomorphisms, so the
    # implication is vacuous and consistency is recorded
    R3 = ring(3)
    e = syzygy_module(ideal(R3, "x0", "x1", "x2"), 1)
    r = splitting_check(e, "end_vanishing")
    assert r.ok
    assert r.numeric_evidence == {
        "h1_end_vanishes": 0,
        "module_is_free": 0,
        "end_sections_depth": 2,
    }
    assert all(h for _, h, _ in r.hypotheses)


def test_tensor_split_free_pair(R4):
    r = splitting_check(
        free_presentation(R4, (-1,)), "tensor_split", free_presentation(R4, (0, -2))
    )
    assert r.ok
    assert r.numeric_evidence == {
        "left_free": 1,
        "right_free": 1,
        "tensor_free": 1,
    }


def test_tensor_split_blocked_when_tensor_not_free(two_points):
    r = splitting_check(two_points["E1"], "tensor_split", two_points["E2"])
    assert r.conclusion == "hypotheses-not-met"
    assert r.numeric_evidence == {
        "left_free": 0,
        "right_free": 0,
        "tensor_free": 0,
    }


def test_splitting_argument_errors(R4):
    free = free_presentation(R4, (0,))
    with pytest.raises(GintError):
        splitting_check(free, "nonsense")
    with pytest.raises(GintError):
        splitting_check(free, "tensor_split")


# -- two points in space: the full verdict table ------------------------------------


def test_point_ideal_tensor_self(two_points):
    m1 = two_points["M1"]
    assert intersects_properly(m1, m1).ok
    assert intersects_very_properly(m1, m1).conclusion == "fail"
    assert maximal_module_flags(tensor_over_ring(m1, m1)) == ModuleFlags(
        True, False, False
    )


def test_point_ideal_tensor_distinct(two_points):
    m1, m2 = two_points["M1"], two_points["M2"]
    assert intersects_very_properly(m1, m2).ok
    assert maximal_module_flags(tensor_over_ring(m1, m2)) == ModuleFlags(
        True, False, False
    )


def test_saturated_tensor_torsion_free_not_reflexive(two_points):
    s = saturate(tensor_over_ring(two_points["M1"], two_points["M2"]))
    assert s.depth() == 1
    assert maximal_module_flags(s) == ModuleFlags(True, True, False)


def test_sections_of_tensor_not_reflexive(two_points):
    """The section module of the ideal tensor product is not reflexive.

    It coincides with the saturated two-point ideal, whose dual is free
    of rank one: the double dual is the whole ring, a different module.
    The Ext obstruction is concentrated on the cone over the points
    (dim Ext^2 = 1 where reflexivity needs <= 0).
    """
    h = sections_h0(tensor_over_ring(two_points["M1"], two_points["M2"]))
    assert h.depth() == 2
    assert maximal_module_flags(h) == ModuleFlags(True, True, False)
    assert ext_module(h, 2).dim() == 1
    d = dual(h).minimize()
    assert d.generators.twists == (0,) and not d.relations
    assert iso_compare(h, dual(dual(h))) == "different"


def test_syzygy_tensor_self_not_reflexive(two_points):
    t = tensor_over_ring(two_points["E1"], two_points["E1"])
    assert intersects_properly(two_points["E1"], two_points["E1"]).ok
    assert intersects_very_properly(two_points["E1"], two_points["E1"]).conclusion == "fail"
    assert t.depth() == 2
    assert maximal_module_flags(t) == ModuleFlags(True, True, False)
    assert ext_module(t, 1).dim() == 1
    assert ext_module(t, 2).dim() == 1


def test_syzygy_tensor_distinct_reflexive(two_points):
    e1, e2 = two_points["E1"], two_points["E2"]
    assert intersects_very_properly(e1, e2).ok
    t = tensor_over_ring(e1, e2)
    assert maximal_module_flags(t) == ModuleFlags(True, True, True)
    # already saturated with depth two, so taking sections is the identity
    assert sections_h0(t) is t


# -- report plumbing -------------------------------------------------------------------


def test_report_json_shape(skew, line):
    r = bezout_check(skew, line)
    d = r.to_json_dict()
    assert sorted(d) == [
        "check",
        "conclusion",
        "evidence",
        "hypotheses",
        "inputs",
        "seed",
    ]
    assert d["check"] == "bezout_check"
    assert d["seed"] is None
    assert list(d["evidence"]) == sorted(d["evidence"])
    for h in d["hypotheses"]:
        assert sorted(h) == ["evidence", "holds", "name"]
        assert isinstance(h["holds"], bool)
    assert not r.ok  # only "pass" counts as ok


def test_reports_are_deterministic(skew, line):
    a = bezout_check(skew, line).to_json_dict()
    b = bezout_check(
        quo(skew.ring, *SKEW), quo(line.ring, *DISJOINT_LINE)
    ).to_json_dict()
    assert a == b

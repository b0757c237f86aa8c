"""Hilbert data tests.

The graded-piece oracle is tested first and on its own terms (hand
counts of monomials), then the Groebner route is required to agree with
it.  The two skew lines in P^3 with ideal (x0,x1) cap (x2,x3) are the
running example: Hilbert polynomial 2t+2, so dimension 2 and degree 2;
the function values 1,4,6,8,... were confirmed by hand (degree t piece
of the quotient misses the monomials mixing the two pairs of
variables).
"""

from fractions import Fraction

import pytest

from gint.errors import GintError
from gint.fields import QQ, Field
from gint.groebner import Submodule, buchberger
from gint.hilbert import (
    HilbertData,
    hilbert_data,
    hilbert_data_from_gb,
    monomial_numerator,
    oracle_hilbert,
)
from gint.parser import parse_poly
from gint.ring import FreeModule, PolyRing


def ring(names, field=None):
    return PolyRing(field or Field(32003), names)


def ideal_elems(R, *srcs):
    F = FreeModule(R, (0,))
    return F, [F.element([parse_poly(s, R)]) for s in srcs]


SKEW = ("x0*x2", "x0*x3", "x1*x2", "x1*x3")
CUBIC = ("x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2")
PLANES_MEET_POINT = SKEW + ("x1 + x2", "x0 + x3")


# -- oracle ------------------------------------------------------------------


def test_oracle_free_module_binomials():
    R = ring(("x0", "x1", "x2", "x3"))
    F = FreeModule(R, (0,))
    assert oracle_hilbert(F, [], range(0, 6)) == [1, 4, 10, 20, 35, 56]


def test_oracle_twisted_free_module():
    R = ring(("x0", "x1", "x2", "x3"))
    F = FreeModule(R, (2,))  # generator in degree -2
    assert oracle_hilbert(F, [], range(-2, 3)) == [1, 4, 10, 20, 35]
    G = FreeModule(R, (-1, 0))
    assert oracle_hilbert(G, [], range(0, 4)) == [1, 5, 14, 30]


def test_oracle_monomial_quotient():
    R = ring(("x0", "x1"))
    F, rels = ideal_elems(R, "x0^2", "x0*x1", "x1^2")
    assert oracle_hilbert(F, rels, range(0, 4)) == [1, 2, 0, 0]


def test_oracle_skew_lines():
    R = ring(("x0", "x1", "x2", "x3"))
    F, rels = ideal_elems(R, *SKEW)
    assert oracle_hilbert(F, rels, range(0, 7)) == [1, 4, 6, 8, 10, 12, 14]


def test_oracle_rational_field():
    R = ring(("x0", "x1", "x2", "x3"), QQ)
    F, rels = ideal_elems(R, *SKEW)
    assert oracle_hilbert(F, rels, range(0, 5)) == [1, 4, 6, 8, 10]


def test_oracle_column_limit():
    R = ring(("x0", "x1", "x2", "x3"))
    F = FreeModule(R, (0,))
    with pytest.raises(GintError):
        oracle_hilbert(F, [], [200])


# -- monomial numerator -------------------------------------------------------


def test_monomial_numerator_simple():
    # R/(x0) in 2 vars: numerator 1 - z
    assert monomial_numerator([(1, 0)], 2) == {0: 1, 1: -1}
    # complete intersection of two coprime monomials: product formula
    assert monomial_numerator([(2, 0), (0, 3)], 2) == {0: 1, 2: -1, 3: -1, 5: 1}
    # unit ideal kills everything
    assert monomial_numerator([(0, 0)], 2) == {}
    assert monomial_numerator([], 2) == {0: 1}


def test_monomial_numerator_needs_splitting():
    # (x0^2, x0*x1, x1^2): numerator 1 - 3z^2 + 2z^3
    assert monomial_numerator([(2, 0), (1, 1), (0, 2)], 2) == {0: 1, 2: -3, 3: 2}


def test_monomial_numerator_redundant_gens():
    assert monomial_numerator([(1, 0), (2, 0), (1, 1)], 2) == {0: 1, 1: -1}


# -- full Hilbert data --------------------------------------------------------


def gb_of(R, srcs, twists=(0,)):
    F = FreeModule(R, twists)
    gens = [F.element([parse_poly(s, R)]) for s in srcs]
    return buchberger(Submodule(F, gens))


def test_free_ring_data():
    R = ring(("x0", "x1", "x2", "x3"))
    hd = hilbert_data(FreeModule(R, (0,)), [])
    assert hd.dim == 4
    assert hd.degree == 1
    assert hd.numerator == {0: 1}
    assert hd.h_coeffs == (1, 0, 0, 0)


def test_zero_module_conventions():
    R = ring(("x0", "x1"))
    F = FreeModule(R, (0,))
    hd = hilbert_data(F, [F.gen(0)])
    assert hd.dim == -1
    assert hd.degree == 0
    assert hd.numerator == {}
    assert hd.hilbert_function(0) == 0
    assert hd.h_coeffs == ()


def test_skew_lines_data():
    R = ring(("x0", "x1", "x2", "x3"))
    hd = hilbert_data_from_gb(gb_of(R, SKEW))
    assert hd.dim == 2
    assert hd.degree == 2
    assert hd.numerator == {0: 1, 2: -4, 3: 4, 4: -1}
    assert hd.h_coeffs == (2, 0)
    assert hd.poly_coeffs == (Fraction(2), Fraction(2))
    assert hd.polynomial_str() == "2*t + 2"
    assert [hd.hilbert_function(t) for t in range(7)] == [1, 4, 6, 8, 10, 12, 14]


def test_twisted_cubic_data():
    R = ring(("x0", "x1", "x2", "x3"))
    hd = hilbert_data_from_gb(gb_of(R, CUBIC))
    assert hd.dim == 2
    assert hd.degree == 3
    assert hd.numerator == {0: 1, 2: -3, 3: 2}
    assert hd.h_coeffs == (3, -2)
    assert hd.polynomial_str() == "3*t + 1"


def test_planes_meet_in_point_length():
    # skew lines cut by the complete intersection: finite of length 3
    R = ring(("x0", "x1", "x2", "x3"))
    hd = hilbert_data_from_gb(gb_of(R, PLANES_MEET_POINT))
    assert hd.dim == 0
    assert hd.degree == 3
    # finite length equals the summed Hilbert function
    assert sum(hd.hilbert_function(t) for t in range(10)) == 3


def test_gb_route_matches_oracle():
    R = ring(("x0", "x1", "x2", "x3"))
    cases = [SKEW, CUBIC, PLANES_MEET_POINT, ("x0^2 - x1*x2", "x2^3 - x0*x1*x3")]
    for srcs in cases:
        F, rels = ideal_elems(R, *srcs)
        hd = hilbert_data(F, rels)
        window = list(range(0, 9))
        assert [hd.hilbert_function(t) for t in window] == oracle_hilbert(F, rels, window)


def test_gb_route_matches_oracle_module_case():
    R = ring(("x0", "x1", "x2"))
    F = FreeModule(R, (-1, 0))
    rels = [
        F.element([parse_poly("x0", R), parse_poly("x1^2", R)]),
        F.element([parse_poly("x2", R), parse_poly("x0*x1", R)]),
        F.element([R.zero(), parse_poly("x2^2", R)]),
    ]
    hd = hilbert_data(F, rels)
    window = list(range(0, 8))
    assert [hd.hilbert_function(t) for t in window] == oracle_hilbert(F, rels, window)


def test_polynomial_agrees_with_function_eventually():
    R = ring(("x0", "x1", "x2", "x3"))
    for srcs in (SKEW, CUBIC):
        F, rels = ideal_elems(R, *srcs)
        hd = hilbert_data(F, rels)
        for t in range(3, 9):
            assert hd.hilbert_polynomial_at(t) == hd.hilbert_function(t)


def test_laurent_numerator_with_positive_twist():
    R = ring(("x0", "x1"))
    F = FreeModule(R, (1,))  # generator in degree -1
    rels = [F.element([parse_poly("x0^2", R)])]
    hd = hilbert_data(F, rels)
    assert hd.numerator == {-1: 1, 1: -1}
    assert [hd.hilbert_function(t) for t in range(-1, 3)] == oracle_hilbert(
        F, rels, range(-1, 3)
    )
    assert hd.dim == 1
    assert hd.degree == 2


def test_degree_additivity_on_direct_sum():
    # R/(x0) + R/(x1) inside R^2, same dimension: degrees add
    R = ring(("x0", "x1", "x2"))
    F = FreeModule(R, (0, 0))
    rels = [
        F.element([parse_poly("x0", R), R.zero()]),
        F.element([R.zero(), parse_poly("x1", R)]),
    ]
    hd = hilbert_data(F, rels)
    part = hilbert_data(
        FreeModule(R, (0,)), [FreeModule(R, (0,)).element([parse_poly("x0", R)])]
    )
    assert part.dim == 2 and hd.dim == 2
    assert hd.degree == 2 * part.degree


def test_data_equality_and_dict():
    R = ring(("x0", "x1", "x2", "x3"))
    a = hilbert_data_from_gb(gb_of(R, SKEW))
    b = hilbert_data_from_gb(gb_of(R, SKEW))
    assert a == b
    d = a.as_dict()
    assert d["dim"] == 2 and d["degree"] == 2
    assert d["numerator"] == [[0, 1], [2, -4], [3, 4], [4, -1]]
    assert d["h_coeffs"] == [2, 0]

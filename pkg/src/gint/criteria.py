"""Intersection-theoretic checks for graded modules.

Every check gathers numeric evidence (dimensions, depths, degrees, Ext
dimensions), evaluates its hypotheses, and returns a CheckReport with
one of three conclusions:

* ``pass``: all hypotheses hold and the asserted identity was verified
  by exact computation.
* ``hypotheses-not-met``: a hypothesis failed, so nothing is asserted;
  the evidence gathered so far is still reported.
* ``fail``: for predicate checks (unmixedness, properness) this simply
  means the predicate is false.  For theorem-backed checks (Bezout,
  depth formula, lifting, splitting) the hypotheses guarantee the
  conclusion, so a failure indicates a defect in the underlying
  machinery rather than a mathematical discovery.

Conventions, for a polynomial ring R in N variables: a nonzero module
has 0 <= dim <= N, a maximal module has dim = N, the zero module
reports dimension -1, and depth + projective dimension = N.  Dimension
bounds on Ext^i(M, R) encode unmixedness and reflexivity:

* M is unmixed iff dim Ext^i(M, R) <= N - 1 - i for every i above the
  codimension of M.
* A maximal M is reflexive iff dim Ext^i(M, R) <= N - 2 - i for every
  i >= 1 (the zero module passes every bound).

Local cohomology never appears directly; its graded dimensions are read
off through duality as dim_K [H^i(M)]_d = dim_K [Ext^(N-i)(M, R)]_(-d-N).
"""

from dataclasses import dataclass

from .errors import GintError, RingMismatchError, ZeroModuleError
from .modalg import (
    Presentation,
    colon,
    dual,
    ext_module,
    is_saturated,
    join_over_field,
    saturate,
    sections_h0,
    tensor_over_ring,
)
from .ring import Polynomial


@dataclass
class CheckReport:
    """Outcome of one check: hypotheses, verdict, and integer evidence."""

    check_name: str
    inputs: tuple
    hypotheses: tuple
    conclusion: str
    numeric_evidence: dict
    seed: int = None

    @property
    def ok(self) -> bool:
        return self.conclusion == "pass"

    def to_json_dict(self) -> dict:
        return {
            "check": self.check_name,
            "inputs": list(self.inputs),
            "hypotheses": [
                {"name": n, "holds": bool(h), "evidence": w}
                for (n, h, w) in self.hypotheses
            ],
            "conclusion": self.conclusion,
            "evidence": dict(sorted(self.numeric_evidence.items())),
            "seed": self.seed,
        }


@dataclass(frozen=True)
class ModuleFlags:
    is_maximal: bool
    is_torsion_free: bool
    is_reflexive: bool


def _describe(m: Presentation) -> str:
    tw = ",".join(str(t) for t in m.generators.twists)
    return f"module<{m.generators.rank} gens ({tw}), {len(m.relations)} rels>"


def _cut_by(m: Presentation, f: Polynomial) -> Presentation:
    """M/fM, presented on the generators of M."""
    free = m.generators
    rels = list(m.relations)
    rels += [free.gen(i).mul_poly(f) for i in range(free.rank)]
    return Presentation(free, rels).minimize()


# -- unmixedness and module flags ------------------------------------------------


def _unmixed_bounds(m: Presentation):
    """(holds, rows) where rows lists (i, dim Ext^i) above the codimension."""
    nv = m.ring.nvars
    codim = nv - m.dim()
    rows = []
    holds = True
    for i in range(codim, nv + 1):
        e = ext_module(m, i)
        d = -1 if e.is_zero() else e.dim()
        rows.append((i, d))
        if i > codim and d > nv - 1 - i:
            holds = False
    return holds, rows


def module_is_unmixed(m: Presentation) -> bool:
    """All associated primes of m have the same dimension."""
    if m.is_zero():
        raise ZeroModuleError("unmixedness of the zero module is undefined")
    holds, _ = _unmixed_bounds(m)
    return holds


def is_unmixed(m: Presentation) -> CheckReport:
    if m.is_zero():
        raise ZeroModuleError("unmixedness of the zero module is undefined")
    holds, rows = _unmixed_bounds(m)
    evidence = {"dim": m.dim()}
    for i, d in rows:
        evidence[f"ext{i}_dim"] = d
    return CheckReport(
        check_name="is_unmixed",
        inputs=(_describe(m),),
        hypotheses=(),
        conclusion="pass" if holds else "fail",
        numeric_evidence=evidence,
    )


def maximal_module_flags(m: Presentation) -> ModuleFlags:
    """Maximality, torsion-freeness, and reflexivity of a module.

    A maximal module is torsion-free exactly when it is unmixed, and
    reflexive exactly when dim Ext^i(M, R) <= N - 2 - i for all i >= 1.
    """
    nv = m.ring.nvars
    maximal = (not m.is_zero()) and m.dim() == nv
    if not maximal:
        return ModuleFlags(False, False, False)
    torsion_free = module_is_unmixed(m)
    reflexive = True
    for i in range(1, nv + 1):
        e = ext_module(m, i)
        if not e.is_zero() and e.dim() > nv - 2 - i:
            reflexive = False
            break
    return ModuleFlags(maximal, torsion_free, reflexive)


# -- proper and very proper intersections ------------------------------------------


def intersects_properly(m: Presentation, n: Presentation) -> CheckReport:
    """dim(M tensor N) = dim M + dim N - dim R."""
    if m.ring != n.ring:
        raise RingMismatchError("intersection checks need a common ring")
    nv = m.ring.nvars
    t = tensor_over_ring(m, n)
    expected = m.dim() + n.dim() - nv
    observed = t.dim()
    return CheckReport(
        check_name="intersects_properly",
        inputs=(_describe(m), _describe(n)),
        hypotheses=(),
        conclusion="pass" if observed == expected else "fail",
        numeric_evidence={
            "dim_left": m.dim(),
            "dim_right": n.dim(),
            "dim_tensor": observed,
            "dim_expected": expected,
        },
    )


def _very_proper_table(m: Presentation, n: Presentation):
    """Pairwise Ext tensor dimensions against the proper-intersection value.

    Pairs where either Ext vanishes are skipped.  A zero tensor product
    of nonzero factors passes exactly when the expected value max{0, .}
    is zero.
    """
    nv = m.ring.nvars
    holds = True
    evidence = {}
    for i in range(nv + 1):
        em = ext_module(m, i)
        if em.is_zero():
            continue
        for j in range(nv + 1):
            en = ext_module(n, j)
            if en.is_zero():
                continue
            want = max(0, em.dim() + en.dim() - nv)
            prod = tensor_over_ring(em, en)
            got = -1 if prod.is_zero() else prod.dim()
            pair_ok = (got == want) if got >= 0 else (want == 0)
            evidence[f"ext{i}_ext{j}_dim"] = got
            evidence[f"ext{i}_ext{j}_want"] = want
            if not pair_ok:
                holds = False
    return holds, evidence


def intersects_very_properly(m: Presentation, n: Presentation) -> CheckReport:
    """Proper-intersection dimension identities for every Ext pair."""
    if m.ring != n.ring:
        raise RingMismatchError("intersection checks need a common ring")
    nv = m.ring.nvars
    dim_sum_ok = m.dim() + n.dim() >= nv
    table_ok, evidence = _very_proper_table(m, n)
    evidence["dim_left"] = m.dim()
    evidence["dim_right"] = n.dim()
    return CheckReport(
        check_name="intersects_very_properly",
        inputs=(_describe(m), _describe(n)),
        hypotheses=(),
        conclusion="pass" if dim_sum_ok and table_ok else "fail",
        numeric_evidence=evidence,
    )


def _meets_very_properly(m: Presentation, n: Presentation) -> bool:
    nv = m.ring.nvars
    if m.dim() + n.dim() < nv:
        return False
    holds, _ = _very_proper_table(m, n)
    return holds


def has_finite_ext_certificate(m: Presentation) -> bool:
    """Every Ext^i(M, R) away from the codimension has finite length.

    This is the graded certificate for "unmixed and locally
    Cohen-Macaulay": all the lower-dimensional Ext obstructions are
    concentrated at the irrelevant maximal ideal.
    """
    if m.is_zero():
        raise ZeroModuleError("certificate of the zero module is undefined")
    nv = m.ring.nvars
    codim = nv - m.dim()
    for i in range(nv + 1):
        if i == codim:
            continue
        e = ext_module(m, i)
        if not e.is_zero() and e.dim() > 0:
            return False
    return True


# -- Bezout ---------------------------------------------------------------------------


def bezout_check(m: Presentation, n: Presentation) -> CheckReport:
    """Degree multiplicativity and unmixedness of a very proper intersection.

    For unmixed modules meeting very properly the saturation of the
    tensor product is unmixed; if additionally the intersection has
    positive dimension or depth M + depth N >= dim R, then
    deg(M tensor N) = deg M * deg N exactly.
    """
    if m.ring != n.ring:
        raise RingMismatchError("intersection checks need a common ring")
    nv = m.ring.nvars
    h_left = module_is_unmixed(m)
    h_right = module_is_unmixed(n)
    h_very = _meets_very_properly(m, n)
    t = tensor_over_ring(m, n)
    depth_sum = m.depth() + n.depth()
    h_dim = t.dim() > 0 or depth_sum >= nv
    evidence = {
        "deg_left": m.degree(),
        "deg_right": n.degree(),
        "deg_product": m.degree() * n.degree(),
        "deg_tensor": t.degree(),
        "dim_tensor": t.dim(),
        "depth_left": m.depth(),
        "depth_right": n.depth(),
    }
    hypotheses = (
        ("left factor unmixed", h_left, f"dim {m.dim()}"),
        ("right factor unmixed", h_right, f"dim {n.dim()}"),
        ("very proper intersection", h_very, "Ext pair dimension table"),
        (
            "positive dimension or depth sum at least dim R",
            h_dim,
            f"dim {t.dim()}, depth sum {depth_sum}",
        ),
    )
    if not (h_left and h_right and h_very):
        conclusion = "hypotheses-not-met"
    else:
        sm = saturate(t)
        sm_ok = sm.is_zero() or module_is_unmixed(sm)
        evidence["sm_unmixed"] = int(sm_ok)
        if not sm_ok:
            conclusion = "fail"
        elif not h_dim:
            conclusion = "hypotheses-not-met"
        else:
            conclusion = "pass" if t.degree() == m.degree() * n.degree() else "fail"
    return CheckReport(
        check_name="bezout_check",
        inputs=(_describe(m), _describe(n)),
        hypotheses=hypotheses,
        conclusion=conclusion,
        numeric_evidence=evidence,
    )


def degree_hypersurface_check(m: Presentation, f: Polynomial) -> CheckReport:
    """Degree of M/fM for a homogeneous parameter f of degree k.

    It equals k * deg M when f lies outside every associated prime of
    dimension dim M - 1 (detected by dim(0 : f) < dim M - 1), and
    k * deg M + deg(0 :_M f) otherwise.
    """
    if f.is_zero():
        raise GintError("the zero element is not a parameter")
    if m.is_zero() or m.dim() <= 0:
        raise GintError("parameters need a module of positive dimension")
    cut = _cut_by(m, f)
    if cut.is_zero() or cut.dim() != m.dim() - 1:
        raise GintError("the element is not a parameter for the module")
    k = f.degree()
    c = colon(m, f)
    avoided = c.is_zero() or c.dim() < m.dim() - 1
    expected = k * m.degree() + (0 if avoided else c.degree())
    observed = cut.degree()
    evidence = {
        "degree_of_element": k,
        "deg_module": m.degree(),
        "deg_section": observed,
        "deg_expected": expected,
        "colon_dim": -1 if c.is_zero() else c.dim(),
        "colon_degree": 0 if c.is_zero() else c.degree(),
    }
    return CheckReport(
        check_name="degree_hypersurface_check",
        inputs=(_describe(m), repr(f)),
        hypotheses=(("element is a parameter", True, f"degree {k}"),),
        conclusion="pass" if observed == expected else "fail",
        numeric_evidence=evidence,
    )


def depth_formula_check(m: Presentation, n: Presentation) -> CheckReport:
    """depth(M tensor N) = max{0, depth M + depth N - dim R}."""
    if m.ring != n.ring:
        raise RingMismatchError("intersection checks need a common ring")
    nv = m.ring.nvars
    h_left = module_is_unmixed(m)
    h_right = module_is_unmixed(n)
    h_very = _meets_very_properly(m, n)
    t = tensor_over_ring(m, n)
    expected = max(0, m.depth() + n.depth() - nv)
    observed = t.depth()
    hypotheses = (
        ("left factor unmixed", h_left, f"dim {m.dim()}"),
        ("right factor unmixed", h_right, f"dim {n.dim()}"),
        ("very proper intersection", h_very, "Ext pair dimension table"),
    )
    if not (h_left and h_right and h_very):
        conclusion = "hypotheses-not-met"
    else:
        conclusion = "pass" if observed == expected else "fail"
    return CheckReport(
        check_name="depth_formula_check",
        inputs=(_describe(m), _describe(n)),
        hypotheses=hypotheses,
        conclusion=conclusion,
        numeric_evidence={
            "depth_left": m.depth(),
            "depth_right": n.depth(),
            "depth_tensor": observed,
            "depth_expected": expected,
        },
    )


# -- Cohen-Macaulay lifting ---------------------------------------------------------


def is_cohen_macaulay(m: Presentation) -> bool:
    """depth = dimension; the zero module counts as Cohen-Macaulay."""
    if m.is_zero():
        return True
    return m.depth() == m.dim()


def cm_type(m: Presentation) -> int:
    """Rank of the last module in the minimal resolution.

    For a Cohen-Macaulay module this is the Cohen-Macaulay type;
    type 1 means Gorenstein.
    """
    if m.is_zero():
        raise ZeroModuleError("the zero module has no type")
    return m.homological().betti.totals[-1]


def cm_lifting_check(m: Presentation, n: Presentation) -> CheckReport:
    """A Cohen-Macaulay very proper intersection forces CM factors.

    The dimension condition is one of: the saturated intersection is CM
    of dimension >= 2, or the intersection has dimension zero with
    multiplicative degree.
    """
    if m.ring != n.ring:
        raise RingMismatchError("intersection checks need a common ring")
    h_left = module_is_unmixed(m)
    h_right = module_is_unmixed(n)
    h_very = _meets_very_properly(m, n)
    t = tensor_over_ring(m, n)
    s = saturate(t)
    cond_i = (not s.is_zero()) and s.dim() >= 2 and s.depth() == s.dim()
    cond_ii = t.dim() == 0 and t.degree() == m.degree() * n.degree()
    cm_left = is_cohen_macaulay(m)
    cm_right = is_cohen_macaulay(n)
    evidence = {
        "dim_tensor": t.dim(),
        "depth_tensor": t.depth(),
        "dim_saturated": -1 if s.is_zero() else s.dim(),
        "depth_saturated": -1 if s.is_zero() else s.depth(),
        "deg_tensor": t.degree(),
        "deg_product": m.degree() * n.degree(),
        "cm_left": int(cm_left),
        "cm_right": int(cm_right),
    }
    hypotheses = (
        ("left factor unmixed", h_left, f"dim {m.dim()}"),
        ("right factor unmixed", h_right, f"dim {n.dim()}"),
        ("very proper intersection", h_very, "Ext pair dimension table"),
        (
            "saturated intersection CM of dim >= 2, or dim 0 with product degree",
            cond_i or cond_ii,
            f"condition (i) {cond_i}, condition (ii) {cond_ii}",
        ),
    )
    if not all(h for _, h, _ in hypotheses):
        conclusion = "hypotheses-not-met"
    else:
        conclusion = "pass" if cm_left and cm_right else "fail"
    return CheckReport(
        check_name="cm_lifting_check",
        inputs=(_describe(m), _describe(n)),
        hypotheses=hypotheses,
        conclusion=conclusion,
        numeric_evidence=evidence,
    )


def type_product_check(m: Presentation, n: Presentation) -> CheckReport:
    """The type of a CM very proper intersection is the product of types."""
    if m.ring != n.ring:
        raise RingMismatchError("intersection checks need a common ring")
    cm_left = is_cohen_macaulay(m) and not m.is_zero()
    cm_right = is_cohen_macaulay(n) and not n.is_zero()
    h_very = _meets_very_properly(m, n)
    t = tensor_over_ring(m, n)
    cm_inter = (not t.is_zero()) and t.depth() == t.dim()
    hypotheses = (
        ("left factor CM", cm_left, f"depth {m.depth()}, dim {m.dim()}"),
        ("right factor CM", cm_right, f"depth {n.depth()}, dim {n.dim()}"),
        ("very proper intersection", h_very, "Ext pair dimension table"),
        ("intersection CM", cm_inter, f"depth {t.depth()}, dim {t.dim()}"),
    )
    if not all(h for _, h, _ in hypotheses):
        return CheckReport(
            check_name="type_product_check",
            inputs=(_describe(m), _describe(n)),
            hypotheses=hypotheses,
            conclusion="hypotheses-not-met",
            numeric_evidence={"dim_tensor": t.dim()},
        )
    tm, tn, tt = cm_type(m), cm_type(n), cm_type(t)
    return CheckReport(
        check_name="type_product_check",
        inputs=(_describe(m), _describe(n)),
        hypotheses=hypotheses,
        conclusion="pass" if tt == tm * tn else "fail",
        numeric_evidence={
            "type_left": tm,
            "type_right": tn,
            "type_product": tm * tn,
            "type_intersection": tt,
        },
    )


# -- joins: Kunneth and Betti multiplicativity -----------------------------------------


def _h_dim(m: Presentation, i: int, d: int, nv: int) -> int:
    """dim_K of the degree-d piece of the i-th local cohomology of m."""
    e = ext_module(m, nv - i)
    if e.is_zero():
        return 0
    return e.hilbert_function(-d - nv)


def _h_upper_bound(m: Presentation, i: int, nv: int):
    """Largest degree where the i-th local cohomology can be nonzero."""
    e = ext_module(m, nv - i)
    if e.is_zero():
        return None
    gen_min = min(-t for t in e.generators.twists)
    return -nv - gen_min


def kunneth_check(m1: Presentation, m2: Presentation, window) -> CheckReport:
    """Graded local cohomology of the join is the convolution of the factors.

    For each homological index k and each degree d in the window,
    dim [H^k(join)]_d must equal the sum over i + j = k of the
    convolution of the factor local-cohomology dimensions.  All values
    are read off from Ext modules through duality.
    """
    nv = m1.ring.nvars
    join = join_over_field(m1, m2)
    njoin = join.ring.nvars
    degrees = list(window)
    checked = 0
    mismatches = 0
    for k in range(njoin + 1):
        for d in degrees:
            lhs = _h_dim(join, k, d, njoin)
            rhs = 0
            for i in range(0, k + 1):
                j = k - i
                if i > nv or j > nv:
                    continue
                top1 = _h_upper_bound(m1, i, nv)
                top2 = _h_upper_bound(m2, j, nv)
                if top1 is None or top2 is None:
                    continue
                for a in range(d - top2, top1 + 1):
                    rhs += _h_dim(m1, i, a, nv) * _h_dim(m2, j, d - a, nv)
            checked += 1
            if lhs != rhs:
                mismatches += 1
    return CheckReport(
        check_name="kunneth_check",
        inputs=(_describe(m1), _describe(m2)),
        hypotheses=(
            ("join within variable cap", True, f"{njoin} variables"),
        ),
        conclusion="pass" if mismatches == 0 else "fail",
        numeric_evidence={
            "points_checked": checked,
            "mismatches": mismatches,
            "join_variables": njoin,
        },
    )


def betti_join_check(m1: Presentation, m2: Presentation) -> CheckReport:
    """Graded Betti numbers of the join are the convolution of the factors."""
    join = join_over_field(m1, m2)
    got = join.homological().betti.entries
    b1 = m1.homological().betti.entries
    b2 = m2.homological().betti.entries
    want = {}
    for (i, a), v1 in b1.items():
        for (j, b), v2 in b2.items():
            key = (i + j, a + b)
            want[key] = want.get(key, 0) + v1 * v2
    mismatches = sum(
        1 for key in set(got) | set(want) if got.get(key, 0) != want.get(key, 0)
    )
    return CheckReport(
        check_name="betti_join_check",
        inputs=(_describe(m1), _describe(m2)),
        hypotheses=(),
        conclusion="pass" if mismatches == 0 else "fail",
        numeric_evidence={
            "total_join": sum(got.values()),
            "total_expected": sum(want.values()),
            "mismatches": mismatches,
        },
    )


# -- hyperplane lifting ------------------------------------------------------------------


def hyperplane_lift_check(m: Presentation, f: Polynomial) -> CheckReport:
    """Depth of M from a hyperplane section.

    For unmixed M and M-regular f, if the saturation of M/fM has depth
    t >= 2 then depth M = t + 1 and M/fM is already saturated.
    """
    if f.is_zero() or not colon(m, f).is_zero():
        raise GintError("the element is not regular on the module")
    h_unmixed = module_is_unmixed(m)
    cut = _cut_by(m, f)
    s = saturate(cut)
    t = 0 if s.is_zero() else s.depth()
    hypotheses = (
        ("module unmixed", h_unmixed, f"dim {m.dim()}"),
        ("saturated section depth at least 2", t >= 2, f"depth {t}"),
    )
    evidence = {
        "depth_module": m.depth(),
        "section_depth": t,
        "dim_module": m.dim(),
        "section_saturated": int(is_saturated(cut)),
    }
    if not (h_unmixed and t >= 2):
        conclusion = "hypotheses-not-met"
    else:
        conclusion = (
            "pass" if m.depth() == t + 1 and is_saturated(cut) else "fail"
        )
    return CheckReport(
        check_name="hyperplane_lift_check",
        inputs=(_describe(m), repr(f)),
        hypotheses=hypotheses,
        conclusion=conclusion,
        numeric_evidence=evidence,
    )


# -- splitting ------------------------------------------------------------------------------


def splitting_check(e: Presentation, mode: str, other: Presentation = None) -> CheckReport:
    """Splitting criteria for maximal reflexive modules.

    mode "end_vanishing": if the twisted sections of E tensor E^* have
    no first cohomology (checked through duality as the vanishing of
    Ext^(N-2) of the section module), E must be free.  Local freeness
    of E is approximated by the finite-length Ext certificate and
    recorded as a caveat.

    mode "tensor_split": if E tensor F is free and E, F intersect very
    properly, both must be free.
    """
    if mode not in ("end_vanishing", "tensor_split"):
        raise GintError(f"unknown splitting mode: {mode}")
    nv = e.ring.nvars
    flags = maximal_module_flags(e)
    base_hyps = [
        ("module maximal", flags.is_maximal, f"dim {e.dim()} of {nv}"),
        ("module reflexive", flags.is_reflexive, "Ext dimension bounds"),
    ]
    if mode == "tensor_split":
        if other is None:
            raise GintError("tensor_split mode needs a second module")
        oflags = maximal_module_flags(other)
        t = tensor_over_ring(e, other).minimize()
        tensor_free = (not t.is_zero()) and t.pd() == 0
        h_very = _meets_very_properly(e, other)
        hypotheses = tuple(base_hyps) + (
            ("second module maximal", oflags.is_maximal, f"dim {other.dim()}"),
            ("second module reflexive", oflags.is_reflexive, "Ext dimension bounds"),
            ("tensor product free", tensor_free, f"pd {t.pd() if not t.is_zero() else -1}"),
            ("very proper intersection", h_very, "Ext pair dimension table"),
        )
        e_free = e.minimize().pd() == 0
        o_free = other.minimize().pd() == 0
        evidence = {
            "left_free": int(e_free),
            "right_free": int(o_free),
            "tensor_free": int(tensor_free),
        }
        if not all(h for _, h, _ in hypotheses):
            conclusion = "hypotheses-not-met"
        else:
            conclusion = "pass" if e_free and o_free else "fail"
        return CheckReport(
            check_name="splitting_check",
            inputs=(_describe(e), _describe(other)),
            hypotheses=hypotheses,
            conclusion=conclusion,
            numeric_evidence=evidence,
        )

    locally_free = (not e.is_zero()) and has_finite_ext_certificate(e)
    hypotheses = tuple(base_hyps) + (
        (
            "finite-length Ext certificate (approximates local freeness)",
            locally_free,
            "caveat: certificate, not a pointwise check",
        ),
    )
    if not all(h for _, h, _ in hypotheses):
        return CheckReport(
            check_name="splitting_check",
            inputs=(_describe(e),),
            hypotheses=hypotheses,
            conclusion="hypotheses-not-met",
            numeric_evidence={},
        )
    sections = sections_h0(tensor_over_ring(e, dual(e)))
    h1 = ext_module(sections, nv - 2)
    vanishes = h1.is_zero()
    e_free = e.minimize().pd() == 0
    evidence = {
        "h1_end_vanishes": int(vanishes),
        "module_is_free": int(e_free),
        "end_sections_depth": sections.depth(),
    }
    if vanishes:
        conclusion = "pass" if e_free else "fail"
    else:
        # nonvanishing makes the implication vacuous; record consistency
        conclusion = "pass"
    return CheckReport(
        check_name="splitting_check",
        inputs=(_describe(e),),
        hypotheses=hypotheses,
        conclusion=conclusion,
        numeric_evidence=evidence,
    )

"""Graded intersection toolkit: exact homological algebra over polynomial rings."""

from .errors import (
    CoefficientError,
    DegreeCapExceededError,
    GintError,
    NoParameterFoundError,
    NotHomogeneousError,
    ParseError,
    RingMismatchError,
    StabilizationError,
    VariableCapExceededError,
    ZeroModuleError,
)
from .criteria import (
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
from .fields import QQ, Field
from .groebner import (
    GroebnerBasis,
    Submodule,
    buchberger,
    ideal_gb,
    kernel_of_map,
    membership,
    normal_form,
    syzygy_basis,
)
from .hilbert import HilbertData, hilbert_data, hilbert_data_from_gb, oracle_hilbert
from .modalg import (
    DiagonalContext,
    Presentation,
    annihilator,
    colon,
    diagonal_reduce,
    direct_sum,
    dual,
    ext_module,
    find_parameter,
    free_presentation,
    hom_modules,
    ideal_submodule,
    intersect_ideals,
    is_saturated,
    iso_compare,
    join_over_field,
    module_of_ideal,
    power_ideal,
    quotient_module,
    random_complete_intersection,
    saturate,
    sections_h0,
    sum_ideals,
    syzygy_module,
    tensor_over_ring,
    zero_presentation,
)
from .parser import parse_poly
from .resolve import (
    BettiTable,
    HomologicalData,
    Resolution,
    homological_data,
    minimal_resolution,
)
from .ring import FreeModule, ModuleElement, Polynomial, PolyRing

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "BettiTable",
    "CheckReport",
    "CoefficientError",
    "DegreeCapExceededError",
    "DiagonalContext",
    "Field",
    "FreeModule",
    "GintError",
    "GroebnerBasis",
    "HilbertData",
    "HomologicalData",
    "ModuleElement",
    "ModuleFlags",
    "NoParameterFoundError",
    "NotHomogeneousError",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "Presentation",
    "Resolution",
    "RingMismatchError",
    "StabilizationError",
    "Submodule",
    "VariableCapExceededError",
    "ZeroModuleError",
    "__version__",
    "annihilator",
    "bezout_check",
    "betti_join_check",
    "buchberger",
    "cm_lifting_check",
    "cm_type",
    "colon",
    "degree_hypersurface_check",
    "depth_formula_check",
    "diagonal_reduce",
    "direct_sum",
    "dual",
    "ext_module",
    "find_parameter",
    "free_presentation",
    "has_finite_ext_certificate",
    "hilbert_data",
    "hilbert_data_from_gb",
    "hom_modules",
    "homological_data",
    "hyperplane_lift_check",
    "ideal_gb",
    "ideal_submodule",
    "intersect_ideals",
    "intersects_properly",
    "intersects_very_properly",
    "is_cohen_macaulay",
    "is_saturated",
    "is_unmixed",
    "iso_compare",
    "join_over_field",
    "kernel_of_map",
    "kunneth_check",
    "maximal_module_flags",
    "membership",
    "minimal_resolution",
    "module_is_unmixed",
    "module_of_ideal",
    "normal_form",
    "oracle_hilbert",
    "parse_poly",
    "power_ideal",
    "quotient_module",
    "random_complete_intersection",
    "saturate",
    "sections_h0",
    "splitting_check",
    "sum_ideals",
    "syzygy_basis",
    "syzygy_module",
    "tensor_over_ring",
    "type_product_check",
    "zero_presentation",
]

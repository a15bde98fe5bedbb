"""torzar: exact positivity invariants of toric divisor classes.

Everything is computed in exact rational arithmetic.  A divisor class on a
complete simplicial projective fan is a tuple of rational values, one per
ray, read as a piecewise-linear function modulo linear forms.  From that
single piece of data the library derives Newton polytopes, Zariski
decompositions, volumes, positive intersection products, slopes and
restricted volumes, and ships one checker per theorem it verifies on
concrete and seeded random instances.
"""

from fractions import Fraction as Rational

from .lp import LPResult, LPStatus, lp_solve
from .polytope import (
    DimensionMismatchError,
    EmptyPolytopeError,
    HalfSpace,
    Polytope,
    UnboundedPolytopeError,
    face,
    hull,
    lattice_points,
    minkowski_sum,
    mixed_volume,
    relative_volume,
    vertices,
    volume,
)
from .fans import (
    Fan,
    FanValidationError,
    NefClass,
    NotConvexError,
    ToricClass,
    common_refinement,
    convex_minorant,
    nef_difference,
    newton_polytope,
    pl_value,
    validate_fan,
)
from .positivity import (
    IntersectionReport,
    NotBigError,
    NotPsefError,
    ZariskiDecomposition,
    h0,
    h0_restricted,
    is_big,
    is_d_big,
    is_d_psef,
    is_nef,
    is_psef,
    pair,
    positive_product,
    restricted_volume,
    slope,
    vol,
    zariski,
)
from .verifier import (
    DerivativeReport,
    RandomSpec,
    check_corollary_c,
    check_corollary_e,
    check_diskant,
    check_fujita_sections,
    check_integral_formula,
    check_morse,
    check_theorem_a,
    check_theorem_d,
    random_instance,
)

__all__ = [
    "Rational",
    "LPResult", "LPStatus", "lp_solve",
    "HalfSpace", "Polytope", "hull", "vertices", "volume", "minkowski_sum",
    "mixed_volume", "face", "relative_volume", "lattice_points",
    "EmptyPolytopeError", "UnboundedPolytopeError", "DimensionMismatchError",
    "Fan", "ToricClass", "NefClass", "validate_fan", "pl_value",
    "common_refinement", "newton_polytope", "convex_minorant",
    "nef_difference", "FanValidationError", "NotConvexError",
    "ZariskiDecomposition", "IntersectionReport", "is_psef", "is_big",
    "is_nef", "zariski", "vol", "positive_product", "pair", "slope",
    "is_d_psef", "is_d_big", "restricted_volume", "h0", "h0_restricted",
    "NotPsefError", "NotBigError",
    "RandomSpec", "DerivativeReport", "random_instance",
    "check_theorem_a", "check_morse", "check_diskant", "check_theorem_d",
    "check_corollary_e", "check_integral_formula", "check_corollary_c",
    "check_fujita_sections",
]

__version__ = "0.1.0"

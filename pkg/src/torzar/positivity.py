"""Positivity predicates and invariants of toric divisor classes.

All numbers are exact rationals.  Volumes and positive intersection
products are normalized with the n! factor here, on top of the Euclidean
polytope volumes of the geometry layer.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .fans import (
    NefClass,
    NotPsefError,
    ToricClass,
    common_refinement,
    convex_minorant,
    default_strictly_convex,
    is_convex,
    nef_difference,
    newton_polytope,
    pl_value,
    restate,
)
from .linalg import ZERO, dot
from .lp import LPStatus, lp_solve
from .polytope import face, lattice_points, mixed_volume, relative_volume, volume


class NotBigError(ValueError):
    """The operation requires a big class."""


class NotNefError(ValueError):
    """The operation requires a nef class."""


@dataclass
class ZariskiDecomposition:
    """Nef part plus nonnegative residues on the rays of the source fan."""

    positive: NefClass
    negative: tuple
    source: ToricClass

    def __post_init__(self):
        src = self.source
        nw = self.positive.polytope
        for r, g, c in zip(src.fan.rays, src.values, self.negative):
            if c < 0:
                raise AssertionError("negative part has a negative coefficient")
            if nw.support(r) + c != g:
                raise AssertionError("decomposition does not reconstitute the class")
        if volume(nw) != volume(newton_polytope(src)):
            raise AssertionError("positive part changed the volume")


@dataclass
class IntersectionReport:
    """Outcome of one checked inequality or identity."""

    name: str
    lhs: object
    rhs: object
    margin: object
    verdict: str  # "holds" | "fails" | "holds-with-equality"
    mode: str = "exact"

    def holds(self):
        return self.verdict in ("holds", "holds-with-equality")

    def to_record(self):
        return {
            "check": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "margin": str(self.margin),
            "verdict": self.verdict,
            "mode": self.mode,
        }


def _exact_report(name, lhs, rhs):
    """Report for an inequality lhs >= rhs compared exactly."""
    margin = lhs - rhs
    if margin > 0:
        verdict = "holds"
    elif margin == 0:
        verdict = "holds-with-equality"
    else:
        verdict = "fails"
    return IntersectionReport(name, lhs, rhs, margin, verdict, "exact")


# -- predicates --------------------------------------------------------


def is_psef(cls):
    """Newton system feasibility, certified by exact LP."""
    constraints = [(r, "<=", v) for r, v in zip(cls.fan.rays, cls.values)]
    res = lp_solve((0,) * cls.fan.dim, constraints, "feasibility")
    return res.status is LPStatus.OPTIMAL


def is_big(cls):
    """Full-dimensional Newton polytope: unit slack admits a positive value."""
    n = cls.fan.dim
    constraints = [(tuple(r) + (1,), "<=", v)
                   for r, v in zip(cls.fan.rays, cls.values)]
    res = lp_solve((0,) * n + (1,), constraints, "maximize")
    if res.status is LPStatus.UNBOUNDED:
        raise RuntimeError("slack LP unbounded on a complete fan")
    return res.status is LPStatus.OPTIMAL and res.value > 0


def is_nef(cls):
    """Convexity of the piecewise-linear function."""
    nef = is_convex(cls)
    if nef:
        assert is_psef(cls), "nef class failed the psef test"
    return nef


def zariski(cls):
    """Decompose a psef class into its nef part and ray residues."""
    if not is_psef(cls):
        raise NotPsefError("class is not psef: no decomposition")
    positive, coeffs = convex_minorant(cls)
    return ZariskiDecomposition(positive, coeffs, cls)


# -- numbers -----------------------------------------------------------


def vol(cls):
    """n! times the Euclidean volume of the Newton polytope; 0 off the psef cone."""
    nw = newton_polytope(cls)
    if not nw.vertices():
        return ZERO
    return factorial(cls.fan.dim) * volume(nw)


def positive_product(*classes):
    """n! times the mixed volume of the Newton polytopes of psef classes."""
    if len(classes) == 1 and isinstance(classes[0], (list, tuple)):
        classes = tuple(classes[0])
    n = classes[0].fan.dim
    if len(classes) != n:
        raise ValueError(f"need {n} classes, got {len(classes)}")
    for c in classes:
        if not is_psef(c):
            raise NotPsefError("positive product of a non-psef class")
    return factorial(n) * mixed_volume([newton_polytope(c) for c in classes])


def pair(alphas, gamma, omega=None):
    """Pair n-1 psef classes against an arbitrary class, linearly in it.

    gamma is split as a difference of nef classes; the result is the
    difference of the two mixed pairings and does not depend on the
    strictly convex class used for the split.
    """
    alphas = list(alphas)
    n = gamma.fan.dim
    if len(alphas) != n - 1:
        raise ValueError(f"need {n - 1} psef classes, got {len(alphas)}")
    for a in alphas:
        if not is_psef(a):
            raise NotPsefError("pairing against a non-psef class")
    plus, minus = nef_difference(gamma, omega)
    bodies = [newton_polytope(a) for a in alphas]
    mv_plus = mixed_volume(bodies + [plus.polytope])
    mv_minus = mixed_volume(bodies + [minus.polytope])
    return factorial(n) * (mv_plus - mv_minus)


def slope(alpha, beta):
    """sup{t > 0 : alpha - t*beta psef}, exact via one LP.

    Both classes must be big; the LP maximizes t subject to the Newton
    system of alpha - t*beta over the rays of the common refinement.
    """
    if not is_big(alpha):
        raise NotBigError("slope requires a big first argument")
    if not is_big(beta):
        raise NotBigError("slope requires a big second argument")
    if alpha.fan is beta.fan:
        fan = alpha.fan
        a, b = alpha, beta
    else:
        fan = common_refinement(alpha.fan, beta.fan)
        a, b = restate(alpha, fan), restate(beta, fan)
    n = fan.dim
    constraints = [(tuple(r) + (gb,), "<=", ga)
                   for r, ga, gb in zip(fan.rays, a.values, b.values)]
    res = lp_solve((0,) * n + (1,), constraints, "maximize")
    if res.status is not LPStatus.OPTIMAL:
        raise RuntimeError(f"slope LP ended {res.status}; beta not big?")
    return res.value


# -- divisorial restriction --------------------------------------------


def _ray_idx(cls, ray):
    if isinstance(ray, int):
        if not 0 <= ray < len(cls.fan.rays):
            raise KeyError(f"ray index {ray} out of range")
        return ray
    return cls.fan.ray_index(ray)


def ray_divisor_class(fan, idx):
    """The class of the invariant divisor of one ray: 1 there, 0 elsewhere."""
    return ToricClass(fan, [Fraction(1 if i == idx else 0)
                            for i in range(len(fan.rays))])


def is_d_psef(cls, ray):
    """No residue on the ray in the Zariski decomposition."""
    idx = _ray_idx(cls, ray)
    if not is_psef(cls):
        return False
    return zariski(cls).negative[idx] == 0


def is_d_big(cls, ray):
    """Positive restricted volume on the ray divisor (big classes only)."""
    idx = _ray_idx(cls, ray)
    return restricted_volume(cls, idx) > 0


def restricted_volume(cls, ray):
    """(n-1)! times the lattice volume of the Newton face at the ray."""
    idx = _ray_idx(cls, ray)
    if not is_big(cls):
        raise NotBigError("restricted volume requires a big class")
    v = cls.fan.rays[idx]
    f = face(newton_polytope(cls), v)
    return factorial(cls.fan.dim - 1) * relative_volume(f, v)


# -- section counts ----------------------------------------------------


def _require_integral(cls):
    for v in cls.values:
        if Fraction(v).denominator != 1:
            raise ValueError("integral ray values required")


def h0(cls, k):
    """Lattice points of the k-th dilate of the Newton polytope."""
    _require_integral(cls)
    if k < 1:
        raise ValueError("k must be a positive integer")
    nw = newton_polytope(cls)
    if not nw.vertices():
        return 0
    return lattice_points(nw.scale(k))


def h0_restricted(cls, ray, k):
    """Lattice points of the ray face of the k-th dilate."""
    _require_integral(cls)
    if k < 1:
        raise ValueError("k must be a positive integer")
    idx = _ray_idx(cls, ray)
    nw = newton_polytope(cls)
    if not nw.vertices():
        return 0
    v = cls.fan.rays[idx]
    return lattice_points(face(nw.scale(k), v))

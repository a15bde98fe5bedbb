"""One checker per verified statement, plus a seeded instance generator.

Derivatives of the volume are computed exactly by one-sided polynomial
interpolation: the volume along a line is piecewise polynomial, so once a
window contains no breakpoint the interpolant reproduces held-out sample
points exactly and its derivative at zero is an exact rational.  No
tolerance enters any verdict that can be decided in integer powers;
fractional powers (dimension >= 3) go through directed interval
enclosures at a configurable decimal precision.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial

from . import linalg
from .fans import (
    FanValidationError,
    ToricClass,
    common_refinement,
    default_strictly_convex,
    newton_polytope,
    restate,
    stellar_subdivision,
    validate_fan,
    _refine_with_cover,
)
from .intervals import Interval, decimal_str, power_enclosure, root_enclosure
from .linalg import ZERO, dot, primitive, vec_sub
from .polytope import HalfSpace, Polytope, minkowski_sum, mixed_volume, volume
from .positivity import (
    IntersectionReport,
    NotBigError,
    NotNefError,
    h0,
    h0_restricted,
    is_big,
    is_d_psef,
    is_nef,
    is_psef,
    pair,
    positive_product,
    ray_divisor_class,
    restricted_volume,
    slope,
    vol,
)


class StabilizationError(RuntimeError):
    """Interpolation window never stabilized; never silently passed."""


@dataclass
class DerivativeReport:
    """Exact one-sided derivatives of the volume against the pairing formula."""

    direction: ToricClass
    exact_derivative: Fraction | None
    formula_value: Fraction
    window: Fraction
    verdict: str
    one_sided: tuple = None
    second_order: tuple = None

    def holds(self):
        return self.verdict == "holds"

    def to_record(self):
        return {
            "check": "volume-derivative",
            "derivative": str(self.exact_derivative),
            "formula": str(self.formula_value),
            "window": str(self.window),
            "verdict": self.verdict,
            "one_sided": [str(x) for x in self.one_sided] if self.one_sided else None,
            "second_order": ([str(x) for x in self.second_order]
                             if self.second_order else None),
        }


# -- exact interpolation helpers ----------------------------------------


def _lagrange_coeffs(xs, ys):
    """Coefficients (constant first) of the interpolating polynomial."""
    k = len(xs)
    rows = [tuple(Fraction(x) ** j for j in range(k)) for x in xs]
    coeffs = linalg.solve(rows, ys)
    assert coeffs is not None, "interpolation nodes collided"
    return coeffs


def _poly_eval(coeffs, x):
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _common_fan(a, b):
    if a.fan is b.fan:
        return a, b
    fan = common_refinement(a.fan, b.fan)
    return restate(a, fan), restate(b, fan)


def check_theorem_a(alpha, gamma, max_halvings=40):
    """Volume derivative along gamma at a big class, both sides exact.

    Samples the volume on shrinking one-sided windows, interpolates a
    degree-n polynomial per side, certifies stabilization on two held-out
    nodes per side, and compares both one-sided derivatives with
    n * pair(alpha, ..., alpha; gamma).
    """
    alpha, gamma = _common_fan(alpha, gamma)
    if not is_big(alpha):
        raise NotBigError("derivative checks need a big base class")
    n = alpha.fan.dim
    formula = n * pair([alpha] * (n - 1), gamma)

    def volume_at(t):
        return vol(alpha + t * gamma)

    base = vol(alpha)

    def one_side(sign, eps):
        xs = [sign * eps * Fraction(j + 1, n + 1) for j in range(n + 1)]
        ys = [volume_at(x) for x in xs]
        coeffs = _lagrange_coeffs(xs, ys)
        if coeffs[0] != base:
            return None  # a breakpoint still sits inside the window
        for held in (sign * eps * Fraction(1, 2 * n + 2),
                     sign * eps * Fraction(2 * n + 1, 2 * n + 2)):
            if _poly_eval(coeffs, held) != volume_at(held):
                return None
        return coeffs

    eps = Fraction(1, 16)
    for _ in range(max_halvings):
        pos = one_side(1, eps)
        neg = one_side(-1, eps)
        if pos is not None and neg is not None:
            break
        eps /= 2
    else:
        raise StabilizationError(
            f"no breakpoint-free window after {max_halvings} halvings")
    d_pos, d_neg = pos[1], neg[1]
    second = (pos[2], neg[2]) if n >= 2 and pos[2] != neg[2] else None
    if d_pos == d_neg == formula:
        return DerivativeReport(gamma, d_pos, formula, eps, "holds",
                                (d_pos, d_neg), second)
    return DerivativeReport(gamma, d_pos if d_pos == d_neg else None,
                            formula, eps, "fails", (d_pos, d_neg), second)


def check_morse(a, b):
    """vol(A - B) >= (A^n) - n (A^(n-1) . B) for nef classes, exact."""
    a, b = _common_fan(a, b)
    if not is_nef(a) or not is_nef(b):
        raise NotNefError("the inequality is stated for nef classes")
    n = a.fan.dim
    an = vol(a)
    anb = factorial(n) * mixed_volume(
        [newton_polytope(a)] * (n - 1) + [newton_polytope(b)])
    lhs = vol(a - b)
    rhs = an - n * anb
    rep = _exact_ge("morse", lhs, rhs)
    return rep


def _exact_ge(name, lhs, rhs):
    margin = lhs - rhs
    verdict = ("holds" if margin > 0
               else "holds-with-equality" if margin == 0 else "fails")
    return IntersectionReport(name, lhs, rhs, margin, verdict, "exact")


def proportionality(alpha, beta):
    """Rational c > 0 with beta = c*alpha + linear form, or None."""
    alpha, beta = _common_fan(alpha, beta)
    fan = alpha.fan
    n = fan.dim
    cols = [tuple(alpha.values)]
    for i in range(n):
        cols.append(tuple(r[i] for r in fan.rays))
    sol = linalg.coords_in_basis(cols, tuple(beta.values))
    if sol is None or sol[0] <= 0:
        return None
    return sol[0]


def check_theorem_d(alpha, beta):
    """Equivalence of log-affinity, the power identity, and proportionality."""
    alpha, beta = _common_fan(alpha, beta)
    _require_big_nef(alpha, beta)
    n = alpha.fan.dim
    na, nb = newton_polytope(alpha), newton_polytope(beta)
    p = [factorial(n) * mixed_volume([na] * k + [nb] * (n - k))
         for k in range(n + 1)]
    affine = all(p[k] ** 2 == p[k + 1] * p[k - 1] for k in range(1, n))
    power_eq = p[n - 1] ** n == p[n] ** (n - 1) * p[0]
    prop = proportionality(alpha, beta) is not None
    agree = affine == power_eq == prop
    return IntersectionReport(
        "thm-d", (affine, power_eq, prop), "all equal",
        0 if agree else 1,
        "holds" if agree else "fails", "exact")


def _require_big_nef(*classes):
    for c in classes:
        if not is_big(c):
            raise NotBigError("big nef classes required")
        if not is_nef(c):
            raise NotNefError("big nef classes required")


def check_diskant(alpha, beta, precision=60):
    """Effective strengthening of the top power inequality via the slope.

    (a^{n-1}b)^{n/(n-1)} - (a^n)(b^n)^{1/(n-1)}
        >= ((a^{n-1}b)^{1/(n-1)} - s (b^n)^{1/(n-1)})^n,
    exact in dimension 2, interval enclosures above.
    """
    alpha, beta = _common_fan(alpha, beta)
    _require_big_nef(alpha, beta)
    n = alpha.fan.dim
    na, nb = newton_polytope(alpha), newton_polytope(beta)
    ab = factorial(n) * mixed_volume([na] * (n - 1) + [nb])
    an, bn = vol(alpha), vol(beta)
    s = slope(alpha, beta)
    if n == 2:
        lhs = ab ** 2 - an * bn
        rhs = (ab - s * bn) ** 2
        return _exact_ge("diskant", lhs, rhs)
    c = proportionality(alpha, beta)
    if c is not None:
        # both sides collapse exactly for beta = c*alpha + linear form
        assert ab == c * an and bn == c ** n * an and s == 1 / c
        return IntersectionReport("diskant", 0, 0, 0,
                                  "holds-with-equality", "exact")
    lhs = (power_enclosure(ab, n, n - 1, precision)
           - Interval.exact(an) * power_enclosure(bn, 1, n - 1, precision))
    rhs = (power_enclosure(ab, 1, n - 1, precision)
           - Interval.exact(s) * power_enclosure(bn, 1, n - 1, precision)
           ).pow_int(n)
    margin = lhs.lo - rhs.hi
    tol = Fraction(1, 10 ** precision)
    if margin >= 0:
        verdict = "holds"
    elif lhs.hi - rhs.lo >= -tol:
        verdict = "holds"
    else:
        verdict = "fails"
    return IntersectionReport("diskant", decimal_str(lhs.lo, precision // 3),
                              decimal_str(rhs.hi, precision // 3),
                              decimal_str(margin, precision // 3),
                              verdict, f"approximate({precision})")


def check_corollary_e(alpha, beta, precision=60):
    """Strict midpoint concavity of vol^(1/n) off the proportional locus."""
    alpha, beta = _common_fan(alpha, beta)
    _require_big_nef(alpha, beta)
    n = alpha.fan.dim
    mid = Fraction(1, 2) * (alpha + beta)
    vm, va, vb = vol(mid), vol(alpha), vol(beta)
    c = proportionality(alpha, beta)
    if n == 2:
        t = 4 * vm - va - vb
        lhs, rhs = t ** 2, 4 * va * vb
        if c is not None:
            ok = t >= 0 and lhs == rhs
            return IntersectionReport("cor-e", lhs, rhs, lhs - rhs,
                                      "holds-with-equality" if ok else "fails",
                                      "exact")
        ok = t > 0 and lhs > rhs
        return IntersectionReport("cor-e", lhs, rhs, lhs - rhs,
                                  "holds" if ok else "fails", "exact")
    if c is not None:
        ok = (vb == c ** n * va
              and vm == (Fraction(1 + c, 2)) ** n * va)
        return IntersectionReport("cor-e", vm, vm, 0,
                                  "holds-with-equality" if ok else "fails",
                                  "exact")
    lhs = root_enclosure(vm, n, precision)
    rhs = Fraction(1, 2) * (root_enclosure(va, n, precision)
                            + root_enclosure(vb, n, precision))
    margin = lhs.lo - rhs.hi
    return IntersectionReport(
        "cor-e", decimal_str(lhs.lo, precision // 3),
        decimal_str(rhs.hi, precision // 3),
        decimal_str(margin, precision // 3),
        "holds" if margin > 0 else "fails", f"approximate({precision})")


def _parametric_breakpoints(a, b, s):
    """Candidate breakpoints of t -> Nw(a - t b) combinatorics on (0, s).

    Every change of the tight structure happens where n+1 of the parametric
    constraints <m, ray> <= a_i - t b_i meet; those times are roots of
    square systems in (m, t).
    """
    fan = a.fan
    n = fan.dim
    cuts = set()
    rows_all = [tuple(r) + (bv,) for r, bv in zip(fan.rays, b.values)]
    rhs_all = list(a.values)
    for sub in combinations(range(len(rows_all)), n + 1):
        rows = [rows_all[i] for i in sub]
        sol = linalg.solve(rows, [rhs_all[i] for i in sub])
        if sol is None:
            continue
        t = sol[-1]
        if 0 < t < s:
            cuts.add(t)
    return sorted(cuts)


def check_integral_formula(alpha, beta, grid=4, precision=9):
    """(a^n) = n * integral over [0, s] of pair((a - t b)^(n-1); b) dt.

    The integrand is evaluated exactly; composite trapezoid sums anchored
    at the exact breakpoints of its piecewise-polynomial structure are
    refined by doubling until two successive estimates agree within
    10^-precision (immediately, in dimension 2, where the pieces are
    affine and the rule is exact).
    """
    alpha, beta = _common_fan(alpha, beta)
    _require_big_nef(alpha, beta)
    fan = alpha.fan
    n = fan.dim
    s = slope(alpha, beta)
    nb = newton_polytope(beta)

    cache = {}

    def integrand(t):
        y = cache.get(t)
        if y is None:
            at = alpha - t * beta
            y = factorial(n) * mixed_volume([newton_polytope(at)] * (n - 1) + [nb])
            cache[t] = y
        return y

    pieces = [Fraction(0)] + _parametric_breakpoints(alpha, beta, s) + [s]
    tol = Fraction(1, 10 ** precision)

    def trapezoid(cells_per_piece):
        total = ZERO
        for lo, hi in zip(pieces, pieces[1:]):
            h = (hi - lo) / cells_per_piece
            acc = (integrand(lo) + integrand(hi)) / 2
            for i in range(1, cells_per_piece):
                acc += integrand(lo + i * h)
            total += acc * h
        return total

    cells = max(1, grid)
    estimate = trapezoid(cells)
    for _ in range(24):
        refined = trapezoid(2 * cells)
        if abs(refined - estimate) <= tol:
            estimate = refined
            break
        estimate = refined
        cells *= 2
    else:
        raise RuntimeError("grid exhaustion: trapezoid estimates never agreed")

    lhs = vol(alpha)
    value = n * estimate
    margin = abs(lhs - value)
    return IntersectionReport(
        "integral", lhs, value, margin,
        "holds" if margin <= tol else "fails", f"approximate({precision})")


def check_corollary_c(alpha, ray):
    """Volume derivative toward a ray divisor equals n * restricted volume."""
    fan = alpha.fan
    idx = ray if isinstance(ray, int) else fan.ray_index(ray)
    gamma = ray_divisor_class(fan, idx)
    rep = check_theorem_a(alpha, gamma)
    n = fan.dim
    rv = restricted_volume(alpha, idx)
    ok = rep.holds() and rep.formula_value == n * rv
    return IntersectionReport(
        "cor-c", rep.one_sided, n * rv,
        0 if ok else 1, "holds" if ok else "fails", "exact")


def _box_polytope(n):
    hs = []
    for j in range(n):
        unit = tuple(1 if i == j else 0 for i in range(n))
        hs.append(HalfSpace(unit, Fraction(1)))
        hs.append(HalfSpace(tuple(-x for x in unit), Fraction(0)))
    return Polytope(hs, n, bounded=True)


def _eroded(poly, eps, n):
    hs = []
    for h in poly.halfspaces:
        hval = sum(max(x, 0) for x in h.normal)
        hs.append(HalfSpace(h.normal, h.bound - eps * hval))
    return Polytope(hs, n, bounded=True)


def check_fujita_sections(alpha, k_max=8, ray=None):
    """Section counts approach the volume at the certified rate C/k.

    C is computed from the polytope itself: with P the Newton body and Q
    the unit box, C = n! * max over tested k of
    k * max(vol(P + Q/k) - vol(P), vol(P) - vol(P eroded by Q/k)),
    which bounds the counting error because every lattice point carries a
    unit cube inside the dilation and every eroded-point ceil lies in kP.
    The kernel identity h0(k a) - h0(k a - D) = restricted count is checked
    exactly per k and per ray.
    """
    if k_max < 4:
        raise ValueError("k_max must be at least 4")
    if not is_big(alpha):
        raise NotBigError("section counting needs a big class")
    fan = alpha.fan
    n = fan.dim
    v = vol(alpha)
    nw = newton_polytope(alpha)
    box = _box_polytope(n)
    vol_nw = volume(nw)

    ks = sorted({k_max // 2, k_max})
    bound_c = ZERO
    errors = {}
    for k in ks:
        eps = Fraction(1, k)
        dil = volume(minkowski_sum(nw, box.scale(eps)))
        ero_poly = _eroded(nw, eps, n)
        ero = volume(ero_poly) if ero_poly.vertices() else ZERO
        ck = factorial(n) * k * max(dil - vol_nw, vol_nw - ero)
        bound_c = max(bound_c, ck)
        count = h0(alpha, k)
        errors[k] = abs(Fraction(factorial(n) * count, k ** n) - v)
    ok = all(errors[k] <= bound_c / k for k in ks)

    rays = range(len(fan.rays)) if ray is None else [
        ray if isinstance(ray, int) else fan.ray_index(ray)]
    identity_ok = True
    for k in range(1, k_max + 1):
        ka = k * alpha
        total = h0(alpha, k)
        for idx in rays:
            minus = ka - ray_divisor_class(fan, idx)
            kernel = h0(minus, 1) if newton_polytope(minus).vertices() else 0
            if total - kernel != h0_restricted(alpha, idx, k):
                identity_ok = False
    verdict = "holds" if ok and identity_ok else "fails"
    worst = max(errors[k] * k for k in ks)
    return IntersectionReport("fujita-sections", worst, bound_c,
                              bound_c - worst, verdict, "exact")


# -- seeded random instances -------------------------------------------


@dataclass(frozen=True)
class RandomSpec:
    seed: int
    dim: int = 2
    subdivisions: int = 0
    value_range: int = 16


def _projective_space_fan(n):
    rays = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = list(combinations(range(n + 1), n))
    return validate_fan(rays, cones, strict_support=[1] * (n + 1))


def _product_of_lines_fan(n):
    rays = []
    for j in range(n):
        rays.append(tuple(1 if i == j else 0 for i in range(n)))
        rays.append(tuple(-1 if i == j else 0 for i in range(n)))
    cones = []
    for signs in product((0, 1), repeat=n):
        cones.append(tuple(2 * j + signs[j] for j in range(n)))
    return validate_fan(rays, cones, strict_support=[1] * (2 * n))


def random_instance(spec):
    """Deterministic (fan, classes) from a seed; the fan passes validation.

    The start fan is the standard projective-space fan for even seeds and
    the product of projective lines for odd seeds; `subdivisions` random
    stellar subdivisions follow, then four classes with numerators and
    denominators bounded by value_range.
    """
    rng = random.Random(spec.seed)
    fan = (_projective_space_fan(spec.dim) if spec.seed % 2 == 0
           else _product_of_lines_fan(spec.dim))
    for _ in range(spec.subdivisions):
        start = rng.randrange(len(fan.cones))
        for shift in range(len(fan.cones)):
            try:
                fan = stellar_subdivision(fan, (start + shift) % len(fan.cones))
                break
            except FanValidationError:
                continue
    fan = validate_fan(fan.rays, fan.cones, strict_support=fan.strict_support)
    r = spec.value_range
    classes = [
        ToricClass(fan, [Fraction(rng.randrange(-r, r + 1),
                                  rng.randrange(1, r + 1))
                         for _ in fan.rays])
        for _ in range(4)
    ]
    return fan, classes


def random_class(fan, rng, value_range=16):
    return ToricClass(fan, [Fraction(rng.randrange(-value_range, value_range + 1),
                                     rng.randrange(1, value_range + 1))
                            for _ in fan.rays])


def make_big(cls):
    """Deterministically nudge a class into the big cone.

    Raising every ray value by a common integer grows the Newton polytope
    until it contains a ball, so the loop always terminates; integral
    classes stay integral.
    """
    if is_big(cls):
        return cls
    ones = ToricClass(cls.fan, [Fraction(1)] * len(cls.fan.rays))
    bump = 1
    while bump < 1 << 20:
        cand = cls + bump * ones
        if is_big(cand):
            return cand
        bump *= 2
    raise RuntimeError("could not reach the big cone")


def make_psef(cls):
    """Nudge a class into the psef cone by raising all ray values."""
    if is_psef(cls):
        return cls
    ones = ToricClass(cls.fan, [Fraction(1)] * len(cls.fan.rays))
    bump = 1
    while bump < 1 << 20:
        cand = cls + bump * ones
        if is_psef(cand):
            return cand
        bump *= 2
    raise RuntimeError("could not reach the psef cone")


def nef_restatement(cls):
    """A nef class with the Newton body of cls, on a refined fan."""
    nw = newton_polytope(cls)
    verts = nw.vertices()
    cover = []
    for v in verts:
        cover.append(tuple(primitive(vec_sub(v, p)) for p in verts if p != v))
    fine = _refine_with_cover(cls.fan, cover)
    return ToricClass(fine, [nw.support(r) for r in fine.rays])


def random_nef_pair(fan, rng, value_range=16):
    """Two nef classes on one common refined fan, dimension-2 route."""
    a = make_big(random_class(fan, rng, value_range))
    b = make_big(random_class(fan, rng, value_range))
    na, nb = newton_polytope(a), newton_polytope(b)
    cover = []
    for nw in (na, nb):
        verts = nw.vertices()
        for v in verts:
            cover.append(tuple(primitive(vec_sub(v, p))
                               for p in verts if p != v))
    fine = _refine_with_cover(fan, cover)
    return (ToricClass(fine, [na.support(r) for r in fine.rays]),
            ToricClass(fine, [nb.support(r) for r in fine.rays]))


def random_big_nef_combo(fan, rng, value_range=8):
    """Big nef class as a positive combination of certified convex supports
    plus a linear form; cheap in any dimension."""
    omega = default_strictly_convex(fan)
    gstar = ToricClass(fan, fan.strict_support)
    a = Fraction(rng.randrange(1, value_range + 1),
                 rng.randrange(1, value_range + 1))
    b = Fraction(rng.randrange(0, value_range + 1),
                 rng.randrange(1, value_range + 1))
    ell = [rng.randrange(-value_range, value_range + 1)
           for _ in range(fan.dim)]
    values = [a * go + b * gs + dot(ell, r)
              for go, gs, r in zip(omega.values, gstar.values, fan.rays)]
    return ToricClass(fan, values)


# -- randomized suites ---------------------------------------------------
#
# Every suite is reproducible bit-for-bit from its seed: instance i of a
# run seeded s uses RandomSpec(seed=s + i).  Reports carry the per-instance
# seed and are sorted by it.


def _instance(seed, dim, rng=None):
    sub = (seed % 3) if dim == 2 else (seed % 2)
    return random_instance(RandomSpec(seed=seed, dim=dim, subdivisions=sub))


def _psef_pool(fan, classes, rng, want, allow_boundary=True):
    """Deterministic psef classes drawn from an instance, mixing interior
    classes with slope-boundary ones."""
    out = []
    i = 0
    while len(out) < want:
        base = classes[i % len(classes)] if i < 2 * len(classes) else \
            random_class(fan, rng)
        i += 1
        cand = make_psef(base)
        if allow_boundary and rng.randrange(4) == 0 and len(out) >= 1:
            a = make_big(cand)
            b = make_big(random_class(fan, rng))
            cand = a - slope(a, b) * b
            if not is_psef(cand):
                continue
        out.append(cand)
    return out


def suite_theorem_a(seed, dim, count):
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, classes = _instance(s, dim)
        rng = random.Random(("thm-a", s))
        alpha = make_big(classes[0])
        gamma = classes[1]
        rep = check_theorem_a(alpha, gamma)
        if not rep.holds():
            failures += 1
        reports.append({"seed": s, **rep.to_record()})
    return {"suite": "theorem-a", "dim": dim, "count": count,
            "failures": failures, "reports": reports}


def suite_orthogonality_fujita(seed, dim, count):
    """<a^(n-1)> . a == <a^n> and vol == positive product, same classes."""
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, classes = _instance(s, dim)
        rng = random.Random(("ortho", s))
        alpha = _psef_pool(fan, classes, rng, 1)[0]
        n = fan.dim
        v = vol(alpha)
        prod = positive_product(*([alpha] * n))
        paired = pair([alpha] * (n - 1), alpha)
        ok = (v == prod == paired)
        if not ok:
            failures += 1
        reports.append({"seed": s, "vol": str(v), "product": str(prod),
                        "pairing": str(paired),
                        "verdict": "holds" if ok else "fails"})
    return {"suite": "orthogonality+fujita", "dim": dim, "count": count,
            "failures": failures, "reports": reports}


def suite_kt(seed, dim, count):
    """Power-form product inequalities on random psef tuples, with the
    equality case cross-checked against proportionality on nef pairs."""
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, classes = _instance(s, dim)
        rng = random.Random(("kt", s))
        n = fan.dim
        tup = _psef_pool(fan, classes, rng, n)
        prod = positive_product(*tup)
        lhs = prod ** n
        rhs = Fraction(1)
        for a in tup:
            rhs *= vol(a)
        ok = lhs >= rhs
        # general-p form
        for p in range(1, n + 1):
            left = prod ** p
            right = Fraction(1)
            for j in range(p):
                right *= positive_product(*([tup[j]] * p + tup[p:]))
            if left < right:
                ok = False
        if not ok:
            failures += 1
        reports.append({"seed": s, "lhs": str(lhs), "rhs": str(rhs),
                        "verdict": "holds" if ok else "fails"})
        # equality vs proportionality on constructed nef pairs
        if i % 8 == 0 and dim == 2:
            a, b = random_nef_pair(fan, rng)
            kt_eq = (positive_product(a, b) ** 2 == vol(a) * vol(b))
            prop = proportionality(a, b) is not None
            if kt_eq != prop:
                failures += 1
                reports.append({"seed": s, "verdict": "fails",
                                "note": "equality/proportionality mismatch"})
            c = Fraction(1 + rng.randrange(5), 1 + rng.randrange(3))
            ell = [rng.randrange(-3, 4) for _ in range(fan.dim)]
            bprop = ToricClass(a.fan, [c * g + dot(ell, r)
                                       for g, r in zip(a.values, a.fan.rays)])
            if positive_product(a, bprop) ** 2 != vol(a) * vol(bprop):
                failures += 1
                reports.append({"seed": s, "verdict": "fails",
                                "note": "proportional pair missed equality"})
    return {"suite": "khovanskii-teissier", "dim": dim, "count": count,
            "failures": failures, "reports": reports}


def _big_nef_pair(fan, rng, dim):
    """Both routes yield classes that are already big and nef."""
    if dim == 2:
        return random_nef_pair(fan, rng)
    return (random_big_nef_combo(fan, rng),
            random_big_nef_combo(fan, rng))


def suite_diskant(seed, dim, count, precision=60):
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, _ = _instance(s, dim)
        rng = random.Random(("diskant", s))
        a, b = _big_nef_pair(fan, rng, dim)
        rep = check_diskant(a, b, precision)
        if not rep.holds():
            failures += 1
        # proportional pairs always sit in the equality case; the converse
        # is false for this inequality (unlike the pure power identity),
        # e.g. the two hyperplane classes vs their sum on a product of
        # lines, so equality alone is not flagged.
        if proportionality(a, b) is not None and \
                rep.verdict != "holds-with-equality":
            failures += 1
        reports.append({"seed": s, **rep.to_record()})
    return {"suite": "diskant", "dim": dim, "count": count,
            "failures": failures, "reports": reports}


def suite_theorem_d_cor_e(seed, dim, count, precision=60):
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, _ = _instance(s, dim)
        rng = random.Random(("thm-d", s))
        a, b = _big_nef_pair(fan, rng, dim)
        if i % 4 == 0:
            c = Fraction(1 + rng.randrange(6), 1 + rng.randrange(4))
            ell = [rng.randrange(-4, 5) for _ in range(fan.dim)]
            b = ToricClass(a.fan, [c * g + dot(ell, r)
                                   for g, r in zip(a.values, a.fan.rays)])
        rd = check_theorem_d(a, b)
        re_ = check_corollary_e(a, b, precision)
        prop = proportionality(a, b) is not None
        ok = rd.holds() and re_.holds()
        if prop and re_.verdict != "holds-with-equality":
            ok = False
        if not prop and re_.verdict != "holds":
            ok = False
        if not ok:
            failures += 1
        reports.append({"seed": s, "thm_d": rd.to_record(),
                        "cor_e": re_.to_record(),
                        "verdict": "holds" if ok else "fails"})
    return {"suite": "theorem-d+cor-e", "dim": dim, "count": count,
            "failures": failures, "reports": reports}


def suite_integral(seed, count, precision=9):
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, _ = _instance(s, 2)
        rng = random.Random(("integral", s))
        a, b = _big_nef_pair(fan, rng, 2)
        rep = check_integral_formula(a, b, precision=precision)
        if not rep.holds():
            failures += 1
        reports.append({"seed": s, **rep.to_record()})
    return {"suite": "integral-formula", "dim": 2, "count": count,
            "failures": failures, "reports": reports}


def suite_morse(seed, dim, count):
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, _ = _instance(s, dim)
        rng = random.Random(("morse", s))
        if dim == 2:
            a, b = random_nef_pair(fan, rng)
        else:
            a, b = (random_big_nef_combo(fan, rng),
                    random_big_nef_combo(fan, rng))
        rep = check_morse(a, b)
        if not rep.holds():
            failures += 1
        reports.append({"seed": s, **rep.to_record()})
    return {"suite": "morse", "dim": dim, "count": count,
            "failures": failures, "reports": reports}


def suite_theorem_b(seed, dim, count, cor_c_every=2):
    """Restricted volumes against pairings on random (big class, ray)."""
    reports = []
    failures = 0
    cor_c_done = 0
    for i in range(count):
        s = seed + i
        fan, classes = _instance(s, dim)
        rng = random.Random(("thm-b", s))
        alpha = make_big(classes[0])
        idx = rng.randrange(len(fan.rays))
        rv = restricted_volume(alpha, idx)
        pr = pair([alpha] * (fan.dim - 1), ray_divisor_class(fan, idx))
        ok = rv == pr and rv >= 0
        dpsef = is_d_psef(alpha, idx)
        dbig = rv > 0
        if dbig and not dpsef:
            ok = False
        if not dpsef and (rv != 0 or pr != 0):
            ok = False
        if i % cor_c_every == 0:
            rep_c = check_corollary_c(alpha, idx)
            cor_c_done += 1
            if not rep_c.holds():
                ok = False
        if not ok:
            failures += 1
        reports.append({"seed": s, "restricted": str(rv), "pairing": str(pr),
                        "verdict": "holds" if ok else "fails"})
    return {"suite": "theorem-b", "dim": dim, "count": count,
            "cor_c_instances": cor_c_done,
            "failures": failures, "reports": reports}


def suite_sections(seed, count, k_max=8):
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, _ = _instance(s, 2)
        rng = random.Random(("sections", s))
        values = [rng.randrange(-4, 5) for _ in fan.rays]
        alpha = make_big(ToricClass(fan, values))  # integral stays integral
        rep = check_fujita_sections(alpha, k_max,
                                    ray=rng.randrange(len(fan.rays)))
        if not rep.holds():
            failures += 1
        reports.append({"seed": s, **rep.to_record()})
    return {"suite": "fujita-sections", "dim": 2, "count": count,
            "failures": failures, "reports": reports}


def mixed_volume_interpolation(polys):
    """Independent mixed-volume oracle by exact polynomial interpolation.

    Fits the homogeneous degree-n polynomial vol(sum of l_i P_i) on a
    rational grid and reads off the coefficient of l_1 ... l_n / n!.
    Two held-out grid points must be reproduced exactly.
    """
    n = len(polys)
    monos = [k for k in product(range(n + 1), repeat=n) if sum(k) == n]

    def scaled_volume(lams):
        body = None
        for lam, p in zip(lams, polys):
            if lam == 0:
                continue
            piece = p.scale(lam)
            body = piece if body is None else minkowski_sum(body, piece)
        return volume(body) if body is not None else ZERO

    grid = []
    rows = []
    for lams in product(range(1, n + 2), repeat=n):
        row = tuple(Fraction(1) * _mono(lams, k) for k in monos)
        if linalg.rank(rows + [row]) > len(rows):
            rows.append(row)
            grid.append(lams)
        if len(rows) == len(monos):
            break
    vals = [scaled_volume(lams) for lams in grid]
    coeffs = linalg.solve(rows, vals)
    assert coeffs is not None
    extras = [(2, 3) + (1,) * (n - 2), (3, 1) + (2,) * (n - 2)]
    for lams in extras:
        predicted = sum(c * _mono(lams, k) for c, k in zip(coeffs, monos))
        assert predicted == scaled_volume(lams), "interpolation certificate failed"
    ones = tuple(1 for _ in range(n))
    return coeffs[monos.index(ones)] / factorial(n)


def _mono(lams, k):
    out = 1
    for l, e in zip(lams, k):
        out *= l ** e
    return out


def suite_mixed_volume_oracle(seed, dim, count):
    reports = []
    failures = 0
    for i in range(count):
        s = seed + i
        fan, classes = _instance(s, dim)
        rng = random.Random(("oracle", s))
        tup = _psef_pool(fan, classes, rng, dim)
        bodies = [newton_polytope(c) for c in tup]
        direct = mixed_volume(bodies)
        oracle = mixed_volume_interpolation(bodies)
        ok = direct == oracle
        if not ok:
            failures += 1
        reports.append({"seed": s, "direct": str(direct),
                        "oracle": str(oracle),
                        "verdict": "holds" if ok else "fails"})
    return {"suite": "mixed-volume-oracle", "dim": dim, "count": count,
            "failures": failures, "reports": reports}


DEFAULT_SUITE_SIZES = {
    "theorem-a-2": 200,
    "theorem-a-3": 50,
    "ortho-fujita": 200,
    "kt": 200,
    "diskant-2": 100,
    "diskant-3": 25,
    "thm-d-cor-e": 100,
    "integral": 25,
    "morse": 200,
    "theorem-b": 100,
    "sections": 10,
    "oracle-2": 75,
    "oracle-3": 25,
}


def run_all_suites(seed, sizes=None):
    """Every randomized suite at its acceptance size; reports sorted by seed."""
    sz = dict(DEFAULT_SUITE_SIZES)
    if sizes:
        sz.update(sizes)
    results = [
        suite_theorem_a(seed, 2, sz["theorem-a-2"]),
        suite_theorem_a(seed + 10_000, 3, sz["theorem-a-3"]),
        suite_orthogonality_fujita(seed + 20_000, 2, sz["ortho-fujita"]),
        suite_kt(seed + 30_000, 2, sz["kt"]),
        suite_diskant(seed + 40_000, 2, sz["diskant-2"]),
        suite_diskant(seed + 50_000, 3, sz["diskant-3"]),
        suite_theorem_d_cor_e(seed + 60_000, 2, sz["thm-d-cor-e"]),
        suite_integral(seed + 70_000, sz["integral"]),
        suite_morse(seed + 80_000, 2, sz["morse"]),
        suite_theorem_b(seed + 90_000, 2, sz["theorem-b"]),
        suite_sections(seed + 100_000, sz["sections"]),
        suite_mixed_volume_oracle(seed + 110_000, 2, sz["oracle-2"]),
        suite_mixed_volume_oracle(seed + 120_000, 3, sz["oracle-3"]),
    ]
    for r in results:
        r["reports"] = sorted(r["reports"], key=lambda x: x.get("seed", 0))
    return results

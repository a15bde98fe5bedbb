"""Complete simplicial rational fans and piecewise-linear divisor classes.

A ToricClass is a fan plus one rational value per ray, read as the
piecewise-linear function interpolating those values on each simplicial
cone, modulo globally linear forms.  Its Newton polytope collects the
linear forms lying below the function; convexity of the function is the
nef condition, and the convex minorant splits a pseudo-effective class
into a nef part plus nonnegative residues on rays.

Fans must be complete, simplicial and projective.  Validation certifies
projectivity with an explicit strictly convex support function (found by
exact LP when not supplied).
"""

from fractions import Fraction
from itertools import combinations
import random

from . import linalg
from .linalg import ZERO, dot, primitive, vec_sub
from .lp import LPStatus, lp_solve
from .polytope import HalfSpace, Polytope


class FanValidationError(ValueError):
    """A fan invariant failed; .invariant names which one."""

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class NotConvexError(ValueError):
    """A strictly convex support function was required but not supplied."""


class NotPsefError(ValueError):
    """The class has an empty Newton polytope."""


# -- fans --------------------------------------------------------------


class Fan:
    """Complete simplicial projective fan; construct via validate_fan."""

    __slots__ = ("dim", "rays", "cones", "strict_support",
                 "_inv_rows", "_stellar_rays")

    def __init__(self, dim, rays, cones, strict_support=None, stellar_rays=()):
        self.dim = dim
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        self.cones = tuple(tuple(sorted(c)) for c in cones)
        self.strict_support = (tuple(Fraction(v) for v in strict_support)
                               if strict_support is not None else None)
        self._inv_rows = {}
        self._stellar_rays = frozenset(stellar_rays)

    def ray_index(self, v):
        v = tuple(int(x) for x in v)
        try:
            return self.rays.index(primitive(v))
        except ValueError:
            raise KeyError(f"{v} is not a ray of the fan") from None

    def cone_inverse(self, ci):
        """Rows W with x in cone ci iff W @ x >= 0; exact inverse rows."""
        rows = self._inv_rows.get(ci)
        if rows is None:
            gens = [self.rays[i] for i in self.cones[ci]]
            n = self.dim
            cols = []
            for k in range(n):
                unit = [Fraction(1) if j == k else ZERO for j in range(n)]
                # solve gens^T c = e_k, i.e. rows are coordinates of gens
                col = linalg.solve([tuple(g[i] for g in gens) for i in range(n)],
                                   unit)
                cols.append(col)
            rows = tuple(tuple(cols[k][i] for k in range(n)) for i in range(n))
            self._inv_rows[ci] = rows
        return rows

    def locate(self, v):
        """(cone index, barycentric coefficients) of the first cone with v."""
        for ci in range(len(self.cones)):
            rows = self.cone_inverse(ci)
            coeffs = tuple(dot(w, v) for w in rows)
            if all(c >= 0 for c in coeffs):
                return ci, coeffs
        raise RuntimeError(f"complete fan does not cover {v}")

    def canonical(self):
        return (self.dim, tuple(sorted(self.rays)),
                frozenset(frozenset(self.rays[i] for i in c) for c in self.cones))

    def __eq__(self, other):
        return isinstance(other, Fan) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"Fan(dim={self.dim}, rays={len(self.rays)}, cones={len(self.cones)})"


def _linear_form_on_cone(fan, values, ci):
    """The linear form agreeing with the ray values on maximal cone ci."""
    gens = [fan.rays[i] for i in fan.cones[ci]]
    return linalg.solve(gens, [values[i] for i in fan.cones[ci]])


def is_strictly_convex(fan, values):
    """Each cone's linear form lies strictly below the values off the cone."""
    values = [Fraction(v) for v in values]
    for ci, cone in enumerate(fan.cones):
        m = _linear_form_on_cone(fan, values, ci)
        if m is None:
            return False
        for r in range(len(fan.rays)):
            if r in cone:
                continue
            if dot(m, fan.rays[r]) >= values[r]:
                return False
    return True


_SPOT_RNG_SEED = 0xC0FFEE


def _covering_directions(n):
    dirs = []
    for j in range(n):
        unit = tuple(1 if i == j else 0 for i in range(n))
        dirs.append(unit)
        dirs.append(tuple(-x for x in unit))
    for i, j in combinations(range(n), 2):
        for si in (1, -1):
            for sj in (1, -1):
                dirs.append(tuple(si if k == i else (sj if k == j else 0)
                                  for k in range(n)))
    rng = random.Random(_SPOT_RNG_SEED)
    while len(dirs) < 2 * n + 4 * n * (n - 1) // 2 + 24:
        v = tuple(rng.randrange(-7, 8) for _ in range(n))
        if any(v):
            dirs.append(v)
    return dirs


def validate_fan(rays, cones, strict_support=None, deep=False):
    """Check all fan invariants and return the validated Fan.

    rays are normalized to primitive vectors.  Projectivity is certified by
    a strictly convex support function: the one supplied, or one found by
    exact LP.  deep=True additionally verifies that every pairwise cone
    intersection is the cone on the shared rays.
    """
    norm_rays = []
    for r in rays:
        r = tuple(int(x) for x in r)
        if all(x == 0 for x in r):
            raise FanValidationError("rays", "zero vector cannot be a ray")
        norm_rays.append(primitive(r))
    if len(set(norm_rays)) != len(norm_rays):
        raise FanValidationError("rays", "duplicate ray after normalization")
    n = len(norm_rays[0]) if norm_rays else 0
    if n < 2:
        raise FanValidationError("rays", "ambient dimension must be >= 2")
    for r in norm_rays:
        if len(r) != n:
            raise FanValidationError("rays", "rays of mixed dimension")

    cone_tuples = []
    for c in cones:
        c = tuple(sorted(set(int(i) for i in c)))
        for i in c:
            if not 0 <= i < len(norm_rays):
                raise FanValidationError("cones", f"ray index {i} out of range")
        if len(c) != n:
            raise FanValidationError(
                "simplicial", f"cone {c} does not have {n} distinct rays")
        if linalg.det([norm_rays[i] for i in c]) == 0:
            raise FanValidationError(
                "simplicial", f"cone {c} has linearly dependent rays")
        cone_tuples.append(c)
    if len(set(cone_tuples)) != len(cone_tuples):
        raise FanValidationError("cones", "duplicate maximal cone")

    facet_count = {}
    for c in cone_tuples:
        for f in combinations(c, n - 1):
            facet_count[f] = facet_count.get(f, 0) + 1
    for f, cnt in facet_count.items():
        if cnt != 2:
            raise FanValidationError(
                "completeness",
                f"facet {f} lies in {cnt} maximal cones, expected 2")

    fan = Fan(n, norm_rays, cone_tuples, None)
    for v in _covering_directions(n):
        try:
            fan.locate(v)
        except RuntimeError:
            raise FanValidationError(
                "completeness", f"direction {v} is not covered") from None

    if strict_support is not None:
        support = tuple(Fraction(v) for v in strict_support)
        if not is_strictly_convex(fan, support):
            raise FanValidationError(
                "projectivity", "supplied support function is not strictly convex")
    else:
        support = _find_strict_support(fan)
        if support is None:
            raise FanValidationError(
                "projectivity", "no strictly convex support function exists")

    fan = Fan(n, norm_rays, cone_tuples, support)
    if deep:
        _deep_intersection_check(fan)
    return fan


def _find_strict_support(fan):
    nrays = len(fan.rays)
    constraints = []
    for ci, cone in enumerate(fan.cones):
        inv = fan.cone_inverse(ci)
        for r in range(nrays):
            if r in cone:
                continue
            coeffs = [ZERO] * nrays
            bary = [dot(w, fan.rays[r]) for w in inv]
            for pos, i in enumerate(fan.cones[ci]):
                coeffs[i] += bary[pos]
            coeffs[r] -= 1
            constraints.append((tuple(coeffs), "<=", Fraction(-1)))
    res = lp_solve((0,) * nrays, constraints, "feasibility")
    if res.status is not LPStatus.OPTIMAL:
        return None
    assert is_strictly_convex(fan, res.witness)
    return res.witness


def _deep_intersection_check(fan):
    n = fan.dim
    rows_of = [_cone_rows(fan, ci) for ci in range(len(fan.cones))]
    for a, b in combinations(range(len(fan.cones)), 2):
        shared = sorted(set(fan.cones[a]) & set(fan.cones[b]))
        gens = [fan.rays[i] for i in shared]
        for ray in _extremal_rays(_dedup_rows(rows_of[a] + rows_of[b]), n):
            if not gens:
                raise FanValidationError(
                    "intersection",
                    f"cones {fan.cones[a]} and {fan.cones[b]} overlap")
            coeffs = linalg.coords_in_basis(gens, ray)
            if coeffs is None or any(c < 0 for c in coeffs):
                raise FanValidationError(
                    "intersection",
                    f"cones {fan.cones[a]} and {fan.cones[b]} do not meet "
                    "in a common face")


# -- cone machinery for refinements ------------------------------------


def _cone_rows(fan, ci):
    """Primitive integer H-rows of a simplicial maximal cone."""
    inv = fan.cone_inverse(ci)
    return tuple(primitive(w) for w in inv)


def _dedup_rows(rows):
    seen = []
    for r in rows:
        if r not in seen:
            seen.append(r)
    return tuple(seen)


def _extremal_rays(rows, n):
    """Extremal rays of the pointed cone {x : rows @ x >= 0}."""
    out = []
    seen = set()
    if n == 2:
        cands = []
        for a, b in rows:
            cands.append((b, -a))
            cands.append((-b, a))
        for d in cands:
            if d == (0, 0):
                continue
            if all(dot(r, d) >= 0 for r in rows):
                p = primitive(d)
                if p not in seen:
                    seen.add(p)
                    out.append(p)
        return out
    for sub in combinations(range(len(rows)), n - 1):
        mat = [rows[i] for i in sub]
        if linalg.rank(mat) != n - 1:
            continue
        ker = linalg.kernel(mat, n)
        if len(ker) != 1:
            continue
        d = primitive(ker[0])
        for cand in (d, tuple(-x for x in d)):
            if cand in seen:
                continue
            if all(dot(r, cand) >= 0 for r in rows):
                seen.add(cand)
                out.append(cand)
    return out


def _cone_facet_subsets(gens, d):
    """Index subsets of gens spanning the facets of the pointed cone."""
    k = len(gens)
    basis = []
    for g in gens:
        if linalg.rank(basis + [g]) > len(basis):
            basis.append(g)
        if len(basis) == d:
            break
    chosen = []
    cur = []
    n = len(gens[0])
    for c in range(n):
        col = [basis[i][c] for i in range(d)]
        if linalg.rank([tuple(r) for r in zip(*(cur + [col]))]) == len(cur) + 1:
            cur.append(col)
            chosen.append(c)
        if len(chosen) == d:
            break
    solve_rows = [tuple(basis[j][c] for j in range(d)) for c in chosen]
    coords = [linalg.solve(solve_rows, [g[c] for c in chosen]) for g in gens]
    facets = set()
    for sub in combinations(range(k), d - 1):
        mat = [coords[i] for i in sub]
        if linalg.rank(mat) != d - 1:
            continue
        ker = linalg.kernel(mat, d)
        if len(ker) != 1:
            continue
        w = ker[0]
        vals = [dot(w, c) for c in coords]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            tight = frozenset(i for i, v in enumerate(vals) if v == 0)
            if len(tight) >= d - 1:
                facets.add(tight)
    return sorted(facets, key=sorted)


def _triangulate_pointed(gens):
    """Simplicial subdivision of a pointed cone by iterated stellar rays.

    New rays are the primitivized sums of each non-simplicial subcone's
    generators; the recursion subdivides facets first, so shared walls get
    identical triangulations regardless of which side asks.
    Returns (list of generator tuples per simplex, new rays added).
    """
    gens = [tuple(g) for g in gens]
    d = linalg.rank(gens)
    if len(gens) == d:
        return [tuple(gens)], []
    w = primitive(tuple(sum(c) for c in zip(*gens)))
    added = [w]
    simplices = []
    for subset in _cone_facet_subsets(gens, d):
        sub_gens = [gens[i] for i in sorted(subset)]
        subs, subnew = _triangulate_pointed(sub_gens)
        added.extend(x for x in subnew if x not in added)
        for s in subs:
            simplices.append(s + (w,))
    return simplices, added


def _circular_key():
    import functools

    def cmp(a, b):
        def half(v):
            x, y = v
            return 0 if (y > 0 or (y == 0 and x > 0)) else 1
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cross = a[0] * b[1] - a[1] * b[0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0
    return functools.cmp_to_key(cmp)


def _refine_2d_rays(ray_groups):
    rays = []
    seen = set()
    for group in ray_groups:
        for r in group:
            p = primitive(r)
            if p not in seen:
                seen.add(p)
                rays.append(p)
    rays.sort(key=_circular_key())
    cones = [(i, (i + 1) % len(rays)) for i in range(len(rays))]
    return rays, cones


def _raw_cover_rays_2d(cover):
    """Boundary rays contributed by a raw H-cone list in the plane."""
    out = []
    for rows in cover:
        if not rows:
            continue
        out.extend(_extremal_rays(rows, 2))
    return out


def common_refinement(fan_a, fan_b):
    """Coarsest common refinement, simplicialized, as a Fan.

    Maximal cones are the full-dimensional pairwise intersections; any
    non-simplicial intersection (possible from dimension 3 on) is split by
    stellar subdivision at primitivized generator sums.
    """
    if fan_a.dim != fan_b.dim:
        raise FanValidationError("refinement", "fans of different dimension")
    if fan_a is fan_b or fan_a.canonical() == fan_b.canonical():
        return fan_a
    n = fan_a.dim
    if n == 2:
        rays, cones = _refine_2d_rays([fan_a.rays, fan_b.rays])
        support = _combined_support(fan_a, fan_b, rays)
        return Fan(2, rays, cones, support)
    rows_a = [_cone_rows(fan_a, ci) for ci in range(len(fan_a.cones))]
    rows_b = [_cone_rows(fan_b, ci) for ci in range(len(fan_b.cones))]
    rays, cones, added = _refine_general(n, rows_a, rows_b)
    support = _combined_support(fan_a, fan_b, rays)
    if support is not None and added:
        support = _pull_down(Fan(n, rays, cones, None), support,
                             [rays.index(w) for w in added if w in rays])
    return Fan(n, rays, cones, support, stellar_rays=added)


def _refine_with_cover(fan, cover_rows):
    """Refine a Fan against a raw list of H-cones (no Fan wrapping needed)."""
    n = fan.dim
    if n == 2:
        rays, cones = _refine_2d_rays(
            [fan.rays, _raw_cover_rays_2d(cover_rows)])
        return Fan(2, rays, cones, None)
    rows_a = [_cone_rows(fan, ci) for ci in range(len(fan.cones))]
    rays, cones, added = _refine_general(n, rows_a, list(cover_rows))
    return Fan(n, rays, cones, None, stellar_rays=added)


def _refine_general(n, rows_a, rows_b):
    ray_index = {}
    rays = []
    cones = []
    seen_cones = set()
    added = []

    def register(v):
        idx = ray_index.get(v)
        if idx is None:
            idx = len(rays)
            ray_index[v] = idx
            rays.append(v)
        return idx

    for ra in rows_a:
        for rb in rows_b:
            rows = _dedup_rows(tuple(ra) + tuple(rb))
            ext = _extremal_rays(rows, n)
            if len(ext) < n or linalg.rank(ext) < n:
                continue
            ext = sorted(ext)
            if len(ext) == n:
                simplices = [tuple(ext)]
            else:
                simplices, new = _triangulate_pointed(ext)
                for w in new:
                    if w not in added:
                        added.append(w)
            for simplex in simplices:
                key = frozenset(simplex)
                if key in seen_cones:
                    continue
                seen_cones.add(key)
                cones.append(tuple(sorted(register(v) for v in simplex)))
    return rays, sorted(set(cones)), added


def _combined_support(fan_a, fan_b, rays):
    if fan_a.strict_support is None or fan_b.strict_support is None:
        return None
    ga = ToricClass(fan_a, fan_a.strict_support)
    gb = ToricClass(fan_b, fan_b.strict_support)
    return tuple(pl_value(ga, r) + pl_value(gb, r) for r in rays)


def _pull_down(fan, values, added_indices):
    """Lower a convex certificate at stellar rays until strictly convex."""
    if not added_indices:
        return values if is_strictly_convex(fan, values) else None
    delta = Fraction(1)
    for _ in range(60):
        cand = list(values)
        for i in added_indices:
            cand[i] -= delta
        if is_strictly_convex(fan, cand):
            return tuple(cand)
        delta /= 2
    return None


def stellar_subdivision(fan, cone_index):
    """Split one maximal cone at the primitivized sum of its generators."""
    cone = fan.cones[cone_index]
    gens = [fan.rays[i] for i in cone]
    w = primitive(tuple(sum(c) for c in zip(*gens)))
    if w in fan.rays:
        raise FanValidationError("rays", "stellar ray already present")
    rays = list(fan.rays) + [w]
    widx = len(rays) - 1
    cones = [c for i, c in enumerate(fan.cones) if i != cone_index]
    for drop in cone:
        cones.append(tuple(sorted([i for i in cone if i != drop] + [widx])))
    support = None
    if fan.strict_support is not None:
        base = list(fan.strict_support)
        base.append(pl_value(ToricClass(fan, fan.strict_support), w))
        support = _pull_down(Fan(fan.dim, rays, cones, None), base, [widx])
    return Fan(fan.dim, rays, cones, support)


# -- classes -----------------------------------------------------------


class ToricClass:
    """A fan with one rational value per ray, modulo linear forms."""

    __slots__ = ("fan", "values", "_newton", "_convex", "_minorant")

    def __init__(self, fan, values):
        values = tuple(Fraction(v) for v in values)
        if len(values) != len(fan.rays):
            raise ValueError(
                f"{len(values)} values for {len(fan.rays)} rays")
        self.fan = fan
        self.values = values
        self._newton = None
        self._convex = None
        self._minorant = None

    def _same_fan(self, other):
        if self.fan is not other.fan:
            raise ValueError("classes live on different fans; restate first")

    def __add__(self, other):
        self._same_fan(other)
        return ToricClass(self.fan,
                          [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same_fan(other)
        return ToricClass(self.fan,
                          [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return ToricClass(self.fan, [-a for a in self.values])

    def __mul__(self, c):
        c = Fraction(c)
        return ToricClass(self.fan, [c * a for a in self.values])

    __rmul__ = __mul__

    def equivalent(self, other):
        """True when the difference is a globally linear form."""
        self._same_fan(other)
        diff = [a - b for a, b in zip(self.values, other.values)]
        sol = linalg.coords_in_basis(
            [tuple(r[i] for r in self.fan.rays) for i in range(self.fan.dim)],
            tuple(diff))
        return sol is not None

    def __repr__(self):
        return f"ToricClass({self.values})"


def pl_value(cls, v):
    """Value of the piecewise-linear function at a lattice vector."""
    v = tuple(v)
    if all(x == 0 for x in v):
        return ZERO
    ci, coeffs = cls.fan.locate(v)
    return sum(c * cls.values[i] for c, i in zip(coeffs, cls.fan.cones[ci]))


def newton_polytope(cls):
    """{m : <m, ray> <= value(ray) for every ray}; may be empty."""
    if cls._newton is None:
        hs = [HalfSpace(r, v) for r, v in zip(cls.fan.rays, cls.values)]
        cls._newton = Polytope(hs, cls.fan.dim, bounded=True)
    return cls._newton


def is_convex(cls):
    """Nef test: each cone's linear form lies in the Newton polytope."""
    if cls._convex is None:
        nw = newton_polytope(cls)
        ok = True
        for ci in range(len(cls.fan.cones)):
            m = _linear_form_on_cone(cls.fan, cls.values, ci)
            if m is None or not nw.contains_point(m):
                ok = False
                break
        cls._convex = ok
    return cls._convex


def nef_on_refinement(cls):
    """Reference nef test: support values of the Newton polytope agree with
    the class values at every ray of the common refinement of the class fan
    with the normal cones of the Newton polytope."""
    nw = newton_polytope(cls)
    verts = nw.vertices()
    if not verts:
        return False
    cover = []
    for v in verts:
        rows = tuple(primitive(vec_sub(v, p)) for p in verts if p != v)
        cover.append(rows)
    refined = _refine_with_cover(cls.fan, cover)
    for r in refined.rays:
        if nw.support(r) != pl_value(cls, r):
            return False
    return True


class NefClass:
    """A nef class, identified with its polytope up to translation."""

    __slots__ = ("polytope", "cls", "_fan")

    def __init__(self, polytope, cls=None):
        if not polytope.vertices():
            raise NotPsefError("nef class with empty polytope")
        self.polytope = polytope
        self.cls = cls
        self._fan = None

    def support(self, v):
        return self.polytope.support(v)

    def normal_fan(self):
        """Simplicialized normal fan; defined for full-dimensional polytopes."""
        if self._fan is None:
            p = self.polytope
            n = p.dim
            verts = p.vertices()
            if linalg.affine_rank(verts) < n:
                raise ValueError(
                    "normal fan of a lower-dimensional polytope is not a fan")
            cones = []
            for v in verts:
                rows = tuple(primitive(vec_sub(v, q)) for q in verts if q != v)
                ext = _extremal_rays(rows, n)
                if len(ext) == n:
                    cones.append(tuple(ext))
                else:
                    simplices, _ = _triangulate_pointed(sorted(ext))
                    cones.extend(simplices)
            ray_index = {}
            rays = []
            idx_cones = []
            for simplex in cones:
                idxs = []
                for r in simplex:
                    if r not in ray_index:
                        ray_index[r] = len(rays)
                        rays.append(r)
                    idxs.append(ray_index[r])
                idx_cones.append(tuple(sorted(idxs)))
            self._fan = Fan(n, rays, sorted(set(idx_cones)), None)
        return self._fan

    def __repr__(self):
        return f"NefClass({self.polytope!r})"


def restate(cls, fine_fan):
    """Express a class on a refinement of its fan (lossless by evaluation)."""
    return ToricClass(fine_fan, [pl_value(cls, r) for r in fine_fan.rays])


def convex_minorant(cls):
    """Largest convex homogeneous minorant plus per-ray residues.

    Returns (nef part as a NefClass, tuple of nonnegative coefficients
    value(ray) - support(ray), one per ray of the class fan).
    """
    if cls._minorant is None:
        nw = newton_polytope(cls)
        if not nw.vertices():
            raise NotPsefError("empty Newton polytope: class is not psef")
        coeffs = []
        for r, g in zip(cls.fan.rays, cls.values):
            h = nw.support(r)
            c = g - h
            assert c >= 0, "support function exceeded the class values"
            coeffs.append(c)
        cls._minorant = (NefClass(nw), tuple(coeffs))
    return cls._minorant


def all_ones_class(fan):
    return ToricClass(fan, [Fraction(1)] * len(fan.rays))


def default_strictly_convex(fan):
    """All-ones values when strictly convex, else the validation certificate."""
    ones = all_ones_class(fan)
    if is_strictly_convex(fan, ones.values):
        return ones
    if fan.strict_support is None:
        raise NotConvexError("fan carries no strictly convex support function")
    return ToricClass(fan, fan.strict_support)


def nef_difference(gamma, omega=None):
    """Write gamma = plus - minus with both parts nef and minus = C * omega.

    C is the smallest nonnegative integer making gamma + C*omega nef (found
    by doubling then bisection); omega defaults to the fan's canonical
    strictly convex class.
    """
    fan = gamma.fan
    if omega is None:
        omega = default_strictly_convex(fan)
    else:
        if omega.fan is not fan:
            raise ValueError("omega must live on the fan of gamma")
        if not is_strictly_convex(fan, omega.values):
            raise NotConvexError("omega is not strictly convex on the fan")
    if is_convex(gamma):
        c = 0
    else:
        c = 1
        while not is_convex(gamma + c * omega):
            c *= 2
            if c > 1 << 40:
                raise RuntimeError("no nef translate found; omega degenerate?")
        lo, hi = c // 2, c
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if is_convex(gamma + mid * omega):
                hi = mid
            else:
                lo = mid
        c = hi
    plus = gamma + c * omega
    minus = c * omega
    return (NefClass(newton_polytope(plus), plus),
            NefClass(newton_polytope(minus), minus))

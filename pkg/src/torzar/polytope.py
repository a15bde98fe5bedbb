"""Exact rational polytopes in half-space form.

A Polytope is an intersection of half-spaces {m : <m, normal> <= bound}
with primitive integer normals and rational bounds.  Vertices are derived
on demand by brute force over n-subsets of constraints (exact, exponential,
fine at desk scale: ambient dimension <= 4 and a few dozen constraints).
Volumes are exact rationals, normalized against the integer lattice.

Lower-dimensional polytopes are legal values everywhere: they have volume
zero and well-defined faces.  Redundant or duplicate half-spaces are
tolerated and flagged, never an error.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, factorial, floor, gcd

from . import linalg
from .linalg import ZERO, affine_rank, dot, primitive, vec_add, vec_sub
from .lp import LPStatus, lp_solve


class EmptyPolytopeError(ValueError):
    """Raised when an operation needs a nonempty polytope."""


class UnboundedPolytopeError(ValueError):
    """Raised when input admits a recession direction."""


class DimensionMismatchError(ValueError):
    """Raised when operands live in different ambient dimensions."""


@dataclass(frozen=True)
class HalfSpace:
    """The set {m : <m, normal> <= bound}, normal a primitive integer vector."""

    normal: tuple
    bound: Fraction


def halfspace(normal, bound):
    """Build a HalfSpace, scaling (normal, bound) to a primitive normal."""
    fracs = [Fraction(x) for x in normal]
    if all(f == 0 for f in fracs):
        raise ValueError("half-space normals must be nonzero")
    prim = primitive(fracs)
    # scale factor normal = t * prim with t > 0
    for f, p in zip(fracs, prim):
        if p != 0:
            t = f / p
            break
    return HalfSpace(prim, Fraction(bound) / t)


class Polytope:
    """H-form polytope; vertex form is derived and cached."""

    __slots__ = ("halfspaces", "dim", "_verts", "_tight", "_bounded",
                 "_summands", "_edge_dirs", "_lexmax", "_support_cache")

    def __init__(self, halfspaces_, dim, *, bounded=None, _summands=None):
        hs = []
        for h in halfspaces_:
            if isinstance(h, HalfSpace):
                hs.append(h)
            else:
                hs.append(halfspace(h[0], h[1]))
        for h in hs:
            if len(h.normal) != dim:
                raise DimensionMismatchError(
                    f"half-space in dimension {len(h.normal)}, expected {dim}")
        self.halfspaces = tuple(hs)
        self.dim = dim
        self._verts = None
        self._tight = None
        self._bounded = bounded
        self._summands = _summands
        self._edge_dirs = None
        self._lexmax = None
        self._support_cache = {}

    # -- derived data -------------------------------------------------

    def _check_bounded(self):
        if self._bounded is not None:
            if not self._bounded:
                raise UnboundedPolytopeError("polytope has a recession direction")
            return
        n = self.dim
        homog = [(h.normal, "<=", 0) for h in self.halfspaces]
        for j in range(n):
            for sign in (1, -1):
                unit = tuple(sign if i == j else 0 for i in range(n))
                res = lp_solve(unit, homog + [(unit, "<=", 1)], "maximize")
                if res.status is not LPStatus.OPTIMAL or res.value > 0:
                    self._bounded = False
                    raise UnboundedPolytopeError(
                        "polytope has a recession direction")
        self._bounded = True

    def vertices(self):
        """Exact vertex list, sorted lexicographically; empty iff empty set."""
        if self._verts is None:
            self._check_bounded()
            self._enumerate_vertices()
        return self._verts

    def _enumerate_vertices(self):
        n = self.dim
        hs = self.halfspaces
        found = {}
        for idxs in combinations(range(len(hs)), n):
            rows = [hs[i].normal for i in idxs]
            if linalg.det(rows) == 0:
                continue
            pt = linalg.solve(rows, [hs[i].bound for i in idxs])
            if pt is None or pt in found:
                continue
            ok = True
            for h in hs:
                if dot(h.normal, pt) > h.bound:
                    ok = False
                    break
            if ok:
                found[pt] = frozenset(
                    i for i, h in enumerate(hs) if dot(h.normal, pt) == h.bound)
        verts = sorted(found)
        self._verts = verts
        self._tight = [found[v] for v in verts]

    def tight_sets(self):
        self.vertices()
        return self._tight

    def is_empty(self):
        return not self.vertices()

    def redundant_halfspaces(self):
        """Indices of half-spaces not supporting the polytope (or duplicates)."""
        self.vertices()
        seen = set()
        out = []
        supported = set()
        for t in self._tight:
            supported |= t
        for i, h in enumerate(self.halfspaces):
            key = (h.normal, h.bound)
            if key in seen or i not in supported:
                out.append(i)
            seen.add(key)
        return out

    def support(self, u):
        """max over the polytope of <., u>; requires nonempty."""
        u = tuple(u)
        cached = self._support_cache.get(u)
        if cached is not None:
            return cached
        if self._summands is not None:
            val = sum(s.support(u) for s in self._summands)
        else:
            verts = self.vertices()
            if not verts:
                raise EmptyPolytopeError("support of the empty polytope")
            val = max(dot(v, u) for v in verts)
        self._support_cache[u] = val
        return val

    def lexmax_vertex(self):
        if self._lexmax is None:
            if self._summands is not None:
                self._lexmax = tuple(
                    sum(c) for c in zip(*(s.lexmax_vertex() for s in self._summands)))
            else:
                verts = self.vertices()
                if not verts:
                    raise EmptyPolytopeError("lexmax of the empty polytope")
                self._lexmax = max(verts)
        return self._lexmax

    def contains_point(self, m):
        return all(dot(h.normal, m) <= h.bound for h in self.halfspaces)

    def edge_directions(self):
        """Sign-normalized primitive directions of all edges."""
        if self._edge_dirs is None:
            if self._summands is not None:
                dirs = set()
                for s in self._summands:
                    dirs |= s.edge_directions()
                self._edge_dirs = dirs
            else:
                n = self.dim
                verts = self.vertices()
                tight = self._tight
                dirs = set()
                for i, j in combinations(range(len(verts)), 2):
                    common = tight[i] & tight[j]
                    if len(common) < n - 1:
                        continue
                    rows = [self.halfspaces[k].normal for k in common]
                    if linalg.rank(rows) == n - 1:
                        dirs.add(linalg.sign_normalized(
                            vec_sub(verts[j], verts[i])))
                self._edge_dirs = dirs
        return self._edge_dirs

    def translate(self, t):
        hs = [HalfSpace(h.normal, h.bound + dot(h.normal, t))
              for h in self.halfspaces]
        out = Polytope(hs, self.dim, bounded=self._bounded)
        if self._verts is not None:
            out._verts = [vec_add(v, t) for v in self._verts]
            out._tight = list(self._tight)
        return out

    def scale(self, c):
        c = Fraction(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        hs = [HalfSpace(h.normal, h.bound * c) for h in self.halfspaces]
        out = Polytope(hs, self.dim, bounded=self._bounded)
        if self._verts is not None:
            out._verts = [tuple(c * x for x in v) for v in self._verts]
            out._tight = list(self._tight)
        return out

    def __repr__(self):
        return f"Polytope(dim={self.dim}, halfspaces={len(self.halfspaces)})"


def vertices(p):
    return p.vertices()


# -- convex hull ------------------------------------------------------


def _chain2d(points):
    """Monotone-chain hull; returns counterclockwise vertex cycle."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return ((a[0] - o[0]) * (b[1] - o[1])
                - (a[1] - o[1]) * (b[0] - o[0]))

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _shoelace(cycle):
    """Twice the signed area of a ccw vertex cycle, halved on return."""
    total = ZERO
    for i, p in enumerate(cycle):
        q = cycle[(i + 1) % len(cycle)]
        total += p[0] * q[1] - q[0] * p[1]
    return total / 2


def _hull_2d(points):
    cycle = _chain2d(points)
    hs = []
    for i, p in enumerate(cycle):
        q = cycle[(i + 1) % len(cycle)]
        d = vec_sub(q, p)
        normal = (d[1], -d[0])
        hs.append(halfspace(normal, dot(normal, p)))
    poly = Polytope(hs, 2, bounded=True)
    poly._verts = sorted(cycle)
    poly._tight = None  # recomputed below
    poly._tight = [
        frozenset(i for i, h in enumerate(poly.halfspaces)
                  if dot(h.normal, v) == h.bound)
        for v in poly._verts]
    return poly


def _point_polytope(p, n):
    hs = []
    for j in range(n):
        unit = tuple(1 if i == j else 0 for i in range(n))
        hs.append(HalfSpace(unit, Fraction(p[j])))
        hs.append(HalfSpace(tuple(-x for x in unit), Fraction(-p[j])))
    poly = Polytope(hs, n, bounded=True)
    poly._verts = [tuple(Fraction(x) for x in p)]
    poly._tight = [frozenset(range(len(hs)))]
    return poly


def _hull_fulldim(points, n):
    if n == 1:
        vals = sorted(p[0] for p in points)
        lo, hi = vals[0], vals[-1]
        poly = Polytope([HalfSpace((1,), Fraction(hi)),
                         HalfSpace((-1,), Fraction(-lo))], 1, bounded=True)
        poly._verts = [(Fraction(lo),), (Fraction(hi),)]
        poly._tight = [frozenset([1]), frozenset([0])]
        return poly
    if n == 2:
        return _hull_2d(points)
    # brute-force facet search; desk scale only
    facets = {}
    for sub in combinations(points, n):
        base = sub[0]
        diffs = [vec_sub(p, base) for p in sub[1:]]
        if linalg.rank(diffs) != n - 1:
            continue
        ker = linalg.kernel(diffs, n)
        if len(ker) != 1:
            continue
        w = primitive(ker[0])
        b = dot(w, base)
        lo = hi = False
        for p in points:
            d = dot(w, p)
            if d > b:
                hi = True
            elif d < b:
                lo = True
            if lo and hi:
                break
        if lo and hi:
            continue
        if hi:
            w = tuple(-x for x in w)
            b = -b
        facets[(w, Fraction(b))] = True
    hs = [HalfSpace(w, b) for (w, b) in facets]
    poly = Polytope(hs, n, bounded=True)
    tight_of = []
    verts = []
    for p in sorted(set(tuple(Fraction(x) for x in pt) for pt in points)):
        t = frozenset(i for i, h in enumerate(hs) if dot(h.normal, p) == h.bound)
        if t and linalg.rank([hs[i].normal for i in t]) == n:
            verts.append(p)
            tight_of.append(t)
    poly._verts = verts
    poly._tight = tight_of
    return poly


def hull(points, dim=None):
    """H-form convex hull of a finite rational point set.

    Handles lower-dimensional hulls: the affine hull contributes equality
    pairs, facets are computed in intrinsic coordinates and lifted back.
    """
    points = [tuple(Fraction(x) for x in p) for p in points]
    if not points:
        raise ValueError("hull of an empty point set")
    n = len(points[0]) if dim is None else dim
    for p in points:
        if len(p) != n:
            raise DimensionMismatchError("points of mixed dimension")
    points = sorted(set(points))
    d = affine_rank(points)
    if d == 0:
        return _point_polytope(points[0], n)
    if d == n:
        poly = _hull_fulldim(points, n)
        for p in points:
            assert poly.contains_point(p), "hull does not contain its input"
        return poly

    # lower-dimensional: equalities + lifted facets
    base = points[0]
    diffs = [vec_sub(p, base) for p in points[1:]]
    ker = linalg.kernel(diffs, n)  # normals of the affine hull
    basis = []
    for dvec in diffs:
        if linalg.rank(basis + [dvec]) > len(basis):
            basis.append(dvec)
        if len(basis) == d:
            break
    # coordinates in the basis: pick d independent columns once
    chosen = []
    cur = []
    for c in range(n):
        col = [basis[i][c] for i in range(d)]
        if linalg.rank([tuple(r) for r in zip(*(cur + [col]))]) == len(cur) + 1:
            cur.append(col)
            chosen.append(c)
        if len(chosen) == d:
            break
    sq = [tuple(basis[i][c] for i in range(d)) for c in chosen]

    def coords(p):
        diff = vec_sub(p, base)
        rhs = [diff[c] for c in chosen]
        y = linalg.solve([tuple(sq[j][i] for j in range(d)) for i in range(d)], rhs)
        return y

    coord_pts = [coords(p) for p in points]
    inner = hull(coord_pts, d)

    hs = []
    for w in ker:
        hs.append(halfspace(w, dot(w, base)))
        hs.append(halfspace(tuple(-x for x in w), -dot(w, base)))
    lift_rows = basis + ker
    for h in inner.halfspaces:
        rhs = list(h.normal) + [0] * len(ker)
        w = linalg.solve(lift_rows, rhs)
        hs.append(halfspace(w, dot(w, base) + h.bound))
    poly = Polytope(hs, n, bounded=True)
    inner_verts = set(inner.vertices())
    poly._verts = sorted(p for p, cp in zip(points, coord_pts) if cp in inner_verts)
    poly._tight = [
        frozenset(i for i, h in enumerate(poly.halfspaces)
                  if dot(h.normal, v) == h.bound)
        for v in poly._verts]
    for p in points:
        assert poly.contains_point(p), "hull does not contain its input"
    return poly


# -- volume -----------------------------------------------------------

_COMPLEMENT_CACHE = {}


def _complement_data(normal):
    """(basis rows of the kernel sublattice, solve matrix, chosen columns)."""
    data = _COMPLEMENT_CACHE.get(normal)
    if data is None:
        n = len(normal)
        basis = linalg.lattice_complement(normal)
        chosen = []
        cur = []
        for c in range(n):
            col = [basis[i][c] for i in range(n - 1)]
            if linalg.rank([tuple(r) for r in zip(*(cur + [col]))]) == len(cur) + 1:
                cur.append(col)
                chosen.append(c)
            if len(chosen) == n - 1:
                break
        sq = [tuple(basis[i][c] for i in range(n - 1)) for c in chosen]
        solve_rows = [tuple(sq[j][i] for j in range(n - 1)) for i in range(n - 1)]
        data = (basis, solve_rows, chosen)
        _COMPLEMENT_CACHE[normal] = data
    return data


def _lattice_coords(normal, diff):
    """Coordinates of diff (orthogonal to normal) in the kernel sublattice."""
    _, solve_rows, chosen = _complement_data(normal)
    rhs = [diff[c] for c in chosen]
    return linalg.solve(solve_rows, rhs)


def _volume_points(points, d):
    """d-volume of the hull of points given in coordinates of Q^d."""
    points = sorted(set(points))
    if len(points) <= d:
        return ZERO
    if d == 1:
        return points[-1][0] - points[0][0]
    if d == 2:
        cycle = _chain2d(points)
        if len(cycle) <= 2:
            return ZERO
        return _shoelace(cycle)
    if affine_rank(points) < d:
        return ZERO
    return volume(hull(points, d))


def _facet_groups(poly):
    """(normal -> (bound, tight vertex list)) per supporting primitive normal.

    Duplicate normals keep the smallest bound; only that one can support.
    """
    verts = poly.vertices()
    bounds = {}
    for h in poly.halfspaces:
        cur = bounds.get(h.normal)
        if cur is None or h.bound < cur:
            bounds[h.normal] = h.bound
    groups = {}
    for normal, bound in bounds.items():
        tv = [v for v in verts if dot(normal, v) == bound]
        if tv:
            groups[normal] = (bound, tv)
    return groups


def _volume_hform(poly):
    n = poly.dim
    verts = poly.vertices()
    if not verts:
        raise EmptyPolytopeError("volume of the empty polytope")
    if n == 1:
        return verts[-1][0] - verts[0][0]
    if len(verts) <= n or affine_rank(verts) < n:
        return ZERO
    v0 = verts[0]
    total = ZERO
    for normal, (bound, tv) in _facet_groups(poly).items():
        height = bound - dot(normal, v0)
        if height == 0 or len(tv) < n:
            continue
        base = tv[0]
        coords = [_lattice_coords(normal, vec_sub(v, base)) for v in tv]
        total += height * _volume_points(coords, n - 1)
    return total / n


def _sum_candidates(summands, n):
    cands = set()
    for s in summands:
        for h in s.halfspaces:
            cands.add(h.normal)
    if n == 3:
        dirs = set()
        for s in summands:
            dirs |= s.edge_directions()
        dirs = sorted(dirs)
        for a, b in combinations(dirs, 2):
            c = (a[1] * b[2] - a[2] * b[1],
                 a[2] * b[0] - a[0] * b[2],
                 a[0] * b[1] - a[1] * b[0])
            if c != (0, 0, 0):
                p = primitive(c)
                cands.add(p)
                cands.add(tuple(-x for x in p))
    return sorted(cands)


def _volume_sum(poly):
    """Volume of a Minkowski sum via per-direction face sums.

    For each candidate facet normal u the face of the sum is the sum of the
    summands' faces at u; its relative volume is computed in coordinates of
    the lattice orthogonal to u.  Candidates cover all facet normals, and
    non-facet directions contribute zero.
    """
    summands = poly._summands
    n = poly.dim
    v0 = poly.lexmax_vertex()
    total = ZERO
    for u in _sum_candidates(summands, n):
        h = sum(s.support(u) for s in summands)
        height = h - dot(u, v0)
        if height == 0:
            continue
        shifted = [(ZERO,) * (n - 1)]
        for s in summands:
            mx = s.support(u)
            face_pts = [v for v in s.vertices() if dot(u, v) == mx]
            anchor = face_pts[0]
            proj = [_lattice_coords(u, vec_sub(v, anchor)) for v in face_pts]
            shifted = list({vec_add(a, b) for a in shifted for b in proj})
        rel = _volume_points(shifted, n - 1)
        if rel:
            total += height * rel
    return total / n


def volume(poly):
    """Exact Euclidean volume against the integer lattice.

    Zero iff the polytope is lower-dimensional; raises on the empty set.
    The computation decomposes the polytope into cones over facet
    triangulations from a base vertex.
    """
    if poly._summands is not None:
        return _volume_sum(poly)
    return _volume_hform(poly)


# -- Minkowski sums and mixed volume ----------------------------------


def minkowski_sum(p, q):
    """Minkowski sum; equals the hull of pairwise vertex sums."""
    if p.dim != q.dim:
        raise DimensionMismatchError("summands of different dimension")
    n = p.dim
    pv, qv = p.vertices(), q.vertices()
    if not pv or not qv:
        raise EmptyPolytopeError("Minkowski sum with an empty operand")
    if n <= 2 or n >= 4:
        return hull([vec_add(a, b) for a in pv for b in qv], n)
    summands = tuple(p._summands or (p,)) + tuple(q._summands or (q,))
    cands = _sum_candidates(summands, n)
    hs = [HalfSpace(u, sum(s.support(u) for s in summands)) for u in cands]
    return Polytope(hs, n, bounded=True, _summands=summands)


def mixed_volume(polys):
    """Symmetric mixed volume with V(P, ..., P) = volume(P).

    Polarization: V = (1/n!) * sum over nonempty S of
    (-1)^(n-|S|) volume(sum of P_i, i in S).
    """
    polys = list(polys)
    n = len(polys)
    for p in polys:
        if p.dim != n:
            raise DimensionMismatchError(
                f"{n} polytopes required in ambient dimension {n}")
        if p._summands is None and p.is_empty():
            raise EmptyPolytopeError("mixed volume with an empty operand")
    sums = {}
    vols = {}

    def subset_sum(idxs):
        if idxs in sums:
            return sums[idxs]
        if len(idxs) == 1:
            val = polys[idxs[0]]
        else:
            val = minkowski_sum(subset_sum(idxs[:-1]), polys[idxs[-1]])
        sums[idxs] = val
        return val

    total = ZERO
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        for idxs in combinations(range(n), size):
            key = tuple(sorted(id(polys[i]) for i in idxs))
            if key not in vols:
                vols[key] = volume(subset_sum(idxs))
            total += sign * vols[key]
    return total / factorial(n)


# -- faces, relative volume, lattice points ---------------------------


def face(p, v):
    """The face of p maximizing <., v>, in H-form with an equality pair."""
    v = tuple(int(x) for x in v)
    if all(x == 0 for x in v):
        raise ValueError("face direction must be nonzero")
    verts = p.vertices()
    if not verts:
        raise EmptyPolytopeError("face of the empty polytope")
    c = max(dot(v, u) for u in verts)
    prim = primitive(v)
    scale = Fraction(v[next(i for i, x in enumerate(prim) if x != 0)],
                     prim[next(i for i, x in enumerate(prim) if x != 0)])
    cp = Fraction(c) / scale
    hs = list(p.halfspaces)
    k = len(hs)
    hs.append(HalfSpace(prim, cp))
    hs.append(HalfSpace(tuple(-x for x in prim), -cp))
    out = Polytope(hs, p.dim, bounded=True)
    fverts = [u for u in verts if dot(v, u) == c]
    out._verts = fverts
    tight = p.tight_sets()
    out._tight = [
        tight[verts.index(u)] | {k, k + 1} for u in fverts]
    return out


def relative_volume(f, v):
    """(n-1)-volume of a polytope inside a level set of v, lattice-normalized.

    v must be primitive; the measure is taken against the sublattice of
    integer points orthogonal to v.
    """
    v = tuple(int(x) for x in v)
    if primitive(v) != v:
        raise ValueError("direction must be a primitive integer vector")
    verts = f.vertices()
    if not verts:
        raise EmptyPolytopeError("relative volume of the empty polytope")
    levels = {dot(v, u) for u in verts}
    if len(levels) != 1:
        raise ValueError("polytope is not contained in a level set of v")
    base = verts[0]
    coords = [_lattice_coords(v, vec_sub(u, base)) for u in verts]
    return _volume_points(coords, f.dim - 1)


def lattice_points(p):
    """Number of integer lattice points; 0 for the empty polytope."""
    verts = p.vertices()
    if not verts:
        return 0
    n = p.dim
    lo = [ceil(min(v[j] for v in verts)) for j in range(n)]
    hi = [floor(max(v[j] for v in verts)) for j in range(n)]
    count = 0
    stack = [(0, ())]
    while stack:
        j, prefix = stack.pop()
        if j == n:
            if p.contains_point(prefix):
                count += 1
            continue
        for x in range(lo[j], hi[j] + 1):
            stack.append((j + 1, prefix + (x,)))
    return count


def polytopes_equal(p, q):
    """Same point set: vertex sets agree exactly."""
    return sorted(p.vertices()) == sorted(q.vertices())

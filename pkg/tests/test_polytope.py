"""Polytope arithmetic: spec'd fixture values plus the exactness invariants."""

import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from torzar.lp import LPStatus, lp_solve
from torzar.polytope import (
    EmptyPolytopeError,
    Polytope,
    UnboundedPolytopeError,
    face,
    hull,
    lattice_points,
    minkowski_sum,
    mixed_volume,
    relative_volume,
    volume,
)

TRIANGLE_HS = [((1, 0), 1), ((0, 1), 0), ((-1, -1), 0)]


def tri():
    return Polytope(TRIANGLE_HS, 2, bounded=True)


def square():
    return hull([(0, 0), (1, 0), (1, 1), (0, 1)])


def seg_x():
    return hull([(0, 0), (1, 0)])


# -- vertices ----------------------------------------------------------


def test_vertices_triangle():
    assert tri().vertices() == [(0, 0), (1, -1), (1, 0)]


def test_vertices_point():
    p = Polytope([((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)], 2)
    assert p.vertices() == [(0, 0)]


def test_vertices_second_triangle():
    p = Polytope([((1, 0), 1), ((0, 1), 1), ((-1, -1), 0)], 2)
    assert sorted(p.vertices()) == [(-1, 1), (1, -1), (1, 1)]


def test_vertices_rejects_unbounded():
    p = Polytope([((1, 0), 1)], 2)
    with pytest.raises(UnboundedPolytopeError):
        p.vertices()


def test_vertices_empty():
    p = Polytope([((1, 1), -1), ((-1, -1), 0)], 2, bounded=True)
    assert p.vertices() == []


def test_redundant_halfspaces_flagged():
    p = Polytope(TRIANGLE_HS + [((1, 0), 5), ((1, 0), 1)], 2, bounded=True)
    red = p.redundant_halfspaces()
    assert 3 in red      # slack bound never tight
    assert 4 in red      # duplicate of constraint 0
    assert volume(p) == F(1, 2)


# -- hull ---------------------------------------------------------------


def test_hull_round_trip_triangle():
    p = hull([(0, 0), (1, 0), (1, -1)])
    assert p.vertices() == [(0, 0), (1, -1), (1, 0)]
    normals = sorted(h.normal for h in p.halfspaces)
    assert normals == [(-1, -1), (0, 1), (1, 0)]


def test_hull_single_point():
    p = hull([(F(1, 2), 3)])
    assert p.vertices() == [(F(1, 2), 3)]
    assert volume(p) == 0


def test_hull_collinear_absorbed():
    p = hull([(0, 0), (2, 0), (1, 0)])
    assert p.vertices() == [(0, 0), (2, 0)]


def test_hull_lower_dimensional_in_3d():
    p = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    assert len(p.vertices()) == 3
    assert volume(p) == 0
    assert p.contains_point((F(1, 4), F(1, 4), 0))
    assert not p.contains_point((F(1, 4), F(1, 4), F(1, 100)))


def test_hull_rejects_empty_input():
    with pytest.raises(ValueError):
        hull([])


def test_round_trip_random_hform_against_lp():
    rng = random.Random(7)
    for _ in range(25):
        hs = [((1, 0), rng.randrange(1, 4)), ((0, 1), rng.randrange(1, 4)),
              ((-1, 0), rng.randrange(0, 3)), ((0, -1), rng.randrange(0, 3))]
        for _ in range(rng.randrange(0, 3)):
            n = (rng.randrange(-2, 3), rng.randrange(-2, 3))
            if n != (0, 0):
                hs.append((n, rng.randrange(0, 7)))
        p = Polytope(hs, 2, bounded=True)
        if not p.vertices():
            continue
        q = hull(p.vertices())
        assert sorted(q.vertices()) == sorted(p.vertices())
        # mutual containment, LP route: max of each halfspace over the other
        for h in q.halfspaces:
            res = lp_solve(h.normal, [(x.normal, "<=", x.bound)
                                      for x in p.halfspaces], "maximize")
            assert res.status is LPStatus.OPTIMAL and res.value <= h.bound


# -- volume -------------------------------------------------------------


def _shoelace_oracle(pts):
    # ordered ccw cycle assumed
    s = F(0)
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        s += p[0] * q[1] - q[0] * p[1]
    return abs(s) / 2


def test_volume_triangle():
    assert volume(tri()) == F(1, 2)
    assert volume(tri()) == _shoelace_oracle([(0, 0), (1, 0), (1, -1)])


def test_volume_point_is_zero():
    assert volume(hull([(3, 4)])) == 0


def test_volume_quadrilateral():
    q = hull([(0, 0), (1, 0), (2, -1), (2, -2)])
    assert volume(q) == F(3, 2)
    assert volume(q) == _shoelace_oracle([(0, 0), (1, 0), (2, -1), (2, -2)])


def test_volume_empty_raises():
    p = Polytope([((1, 1), -1), ((-1, -1), 0)], 2, bounded=True)
    with pytest.raises(EmptyPolytopeError):
        volume(p)


def test_volume_3d_simplex_and_scaling():
    s = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert volume(s) == F(1, 6)
    assert volume(s.scale(3)) == F(27, 6)


# -- minkowski sums -----------------------------------------------------


def test_sum_square_plus_segment():
    s = minkowski_sum(square(), seg_x())
    assert s.vertices() == hull(
        [(0, 0), (2, 0), (2, 1), (0, 1)]).vertices()


def test_sum_with_point_translates():
    pt = hull([(2, 3)])
    s = minkowski_sum(tri(), pt)
    assert sorted(s.vertices()) == sorted(
        [(2, 3), (3, 2), (3, 3)])


def test_sum_dilation():
    s = minkowski_sum(tri(), tri())
    assert volume(s) == 4 * volume(tri())


def test_sum_support_additivity_2d_and_3d():
    rng = random.Random(5)
    cube = hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    simplex = hull([(0, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1)])
    for a, b in [(tri(), square()), (cube, simplex)]:
        s = minkowski_sum(a, b)
        for _ in range(40):
            v = tuple(rng.randrange(-4, 5) for _ in range(a.dim))
            if all(x == 0 for x in v):
                continue
            assert s.support(v) == a.support(v) + b.support(v)


def test_sum_3d_equals_hull_of_pairwise_sums():
    cube = hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    simplex = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 2)])
    s = minkowski_sum(cube, simplex)
    pts = [tuple(x + y for x, y in zip(u, v))
           for u in cube.vertices() for v in simplex.vertices()]
    o = hull(pts, 3)
    assert volume(s) == volume(o)
    assert sorted(s.vertices()) == sorted(o.vertices())


def test_sum_dimension_mismatch():
    import torzar.polytope as tp
    with pytest.raises(tp.DimensionMismatchError):
        minkowski_sum(tri(), hull([(0, 0, 0)]))


# -- mixed volume -------------------------------------------------------


def test_mixed_volume_equal_args_is_volume():
    assert mixed_volume([tri(), tri()]) == F(1, 2)


def test_mixed_volume_square_segment():
    assert mixed_volume([square(), seg_x()]) == F(1, 2)


def test_mixed_volume_point_summand():
    assert mixed_volume([tri(), hull([(5, -7)])]) == 0


def test_mixed_volume_symmetry_and_multilinearity():
    rng = random.Random(11)
    for _ in range(12):
        pts = lambda: [(rng.randrange(-3, 4), rng.randrange(-3, 4))
                       for _ in range(rng.randrange(3, 6))]
        a, b, c = hull(pts()), hull(pts()), hull(pts())
        assert mixed_volume([a, b]) == mixed_volume([b, a])
        assert mixed_volume([a, a]) == volume(a)
        lhs = mixed_volume([minkowski_sum(a, c), b])
        assert lhs == mixed_volume([a, b]) + mixed_volume([c, b])


def test_mixed_volume_three_segments():
    s1 = hull([(0, 0, 0), (1, 0, 0)])
    s2 = hull([(0, 0, 0), (0, 1, 0)])
    s3 = hull([(0, 0, 0), (0, 0, 1)])
    assert mixed_volume([s1, s2, s3]) == F(1, 6)


def test_brunn_minkowski_2d_exact():
    rng = random.Random(23)
    for _ in range(15):
        pts = lambda: [(rng.randrange(-4, 5), rng.randrange(-4, 5))
                       for _ in range(rng.randrange(3, 7))]
        a, b = hull(pts()), hull(pts())
        va, vb = volume(a), volume(b)
        vs = volume(minkowski_sum(a, b))
        # (vs^(1/2) >= va^(1/2) + vb^(1/2))  <=>  (vs - va - vb)^2 >= 4 va vb
        cross = vs - va - vb
        assert cross >= 0
        assert cross ** 2 >= 4 * va * vb


def test_brunn_minkowski_3d_tolerance():
    rng = random.Random(29)
    for _ in range(6):
        pts = lambda: [tuple(rng.randrange(-2, 3) for _ in range(3))
                       for _ in range(rng.randrange(4, 7))]
        a, b = hull(pts(), 3), hull(pts(), 3)
        va, vb, vs = volume(a), volume(b), volume(minkowski_sum(a, b))
        lhs = float(vs) ** (1 / 3)
        rhs = float(va) ** (1 / 3) + float(vb) ** (1 / 3)
        assert lhs >= rhs - 1e-9


# -- faces and relative volume ------------------------------------------


def test_face_examples():
    f = face(tri(), (0, 1))
    assert f.vertices() == [(0, 0), (1, 0)]
    f2 = face(tri(), (1, 1))
    assert f2.vertices() == [(1, 0)]


def test_face_subset_and_nonempty():
    rng = random.Random(3)
    for _ in range(10):
        p = hull([(rng.randrange(-3, 4), rng.randrange(-3, 4))
                  for _ in range(4)])
        v = (rng.randrange(-2, 3), rng.randrange(-2, 3))
        if v == (0, 0):
            continue
        f = face(p, v)
        assert f.vertices()
        assert set(f.vertices()) <= set(p.vertices())


def test_relative_volume_fixtures():
    seg = hull([(0, 0), (1, 0)])
    assert relative_volume(seg, (0, 1)) == 1
    pt = hull([(1, 0)])
    assert relative_volume(pt, (1, 1)) == 0
    diag = hull([(1, 0), (2, -1)])
    assert relative_volume(diag, (1, 1)) == 1


def test_relative_volume_rejects_non_primitive_and_skew():
    seg = hull([(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        relative_volume(seg, (0, 2))
    skew = hull([(0, 0), (1, 1)])
    with pytest.raises(ValueError):
        relative_volume(skew, (0, 1))


def test_relative_volume_lattice_normalization_3d():
    # unit square in the plane z = 0 against the primitive normal
    sq = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert relative_volume(sq, (0, 0, 1)) == 1
    # triangle on x+y+z=1 spanned by unit points: lattice area 1/2
    t = hull([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert relative_volume(t, (1, 1, 1)) == F(1, 2)


# -- lattice points ------------------------------------------------------


def test_lattice_points_fixtures():
    assert lattice_points(tri()) == 3
    assert lattice_points(tri().scale(2)) == 6
    assert lattice_points(hull([(4, -5)])) == 1
    empty = Polytope([((1, 1), -1), ((-1, -1), 0)], 2, bounded=True)
    assert lattice_points(empty) == 0


def test_ehrhart_leading_term():
    k = 8
    rng = random.Random(17)
    for _ in range(6):
        p = hull([(rng.randrange(0, 4), rng.randrange(0, 4))
                  for _ in range(rng.randrange(3, 6))])
        v = volume(p)
        if v == 0:
            continue
        count = lattice_points(p.scale(k))
        assert abs(F(count, k ** 2) - v) <= F(3 * 2, k) * max(v, 1)


# -- oracle equivalence (interpolation) ----------------------------------


def test_mixed_volume_interpolation_oracle_small():
    from torzar.verifier import mixed_volume_interpolation
    rng = random.Random(41)
    for _ in range(8):
        pts = lambda: [(rng.randrange(-3, 4), rng.randrange(-3, 4))
                       for _ in range(rng.randrange(3, 6))]
        a, b = hull(pts()), hull(pts())
        assert mixed_volume([a, b]) == mixed_volume_interpolation([a, b])
    cube = hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    simplex = hull([(0, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1)])
    seg = hull([(0, 0, 0), (1, 1, 1)])
    assert mixed_volume([cube, simplex, seg]) == \
        mixed_volume_interpolation([cube, simplex, seg])

"""Exact simplex: fixture verdicts, brute-force oracle agreement, determinism."""

import random
from fractions import Fraction as F
from itertools import combinations

from torzar.lp import LPStatus, lp_solve


def test_maximize_triangle():
    res = lp_solve((1, 0), [((1, 0), "<=", 1), ((0, 1), "<=", 0),
                            ((1, 1), ">=", 0)], "maximize")
    assert res.status is LPStatus.OPTIMAL
    assert res.value == 1
    assert res.witness == (F(1), F(0))


def test_infeasible_band():
    res = lp_solve((0, 0), [((1, 1), ">=", 0), ((1, 1), "<=", -1)],
                   "feasibility")
    assert res.status is LPStatus.INFEASIBLE


def test_unbounded_direction():
    res = lp_solve((1, 0), [((0, 1), "<=", 0)], "maximize")
    assert res.status is LPStatus.UNBOUNDED


def test_minimize_and_equality():
    res = lp_solve((1, 1), [((1, 0), "==", 2), ((0, 1), ">=", 3)], "minimize")
    assert res.status is LPStatus.OPTIMAL
    assert res.value == 5


def test_dimension_mismatch():
    try:
        lp_solve((1, 0), [((1, 0, 0), "<=", 1)])
    except ValueError:
        pass
    else:
        raise AssertionError("expected a dimension error")


def _brute_force_max(objective, rows, n):
    """Independent oracle: optimum over all basic feasible points."""
    best = None
    for sub in combinations(range(len(rows)), n):
        mat = [rows[i][0] for i in sub]
        rhs = [rows[i][1] for i in sub]
        # solve by elimination
        aug = [list(map(F, mat[i])) + [F(rhs[i])] for i in range(n)]
        ok = True
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                ok = False
                break
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        if not ok:
            continue
        pt = tuple(aug[r][n] for r in range(n))
        if all(sum(a * x for a, x in zip(coeffs, pt)) <= b
               for coeffs, b in rows):
            val = sum(c * x for c, x in zip(objective, pt))
            if best is None or val > best:
                best = val
    return best


def test_random_bounded_lps_match_vertex_oracle():
    rng = random.Random(31337)
    for trial in range(120):
        n = rng.choice((2, 3))
        rows = []
        for j in range(n):  # box to keep it bounded
            unit = tuple(1 if i == j else 0 for i in range(n))
            rows.append((unit, F(rng.randrange(1, 6))))
            rows.append((tuple(-x for x in unit), F(rng.randrange(0, 6))))
        for _ in range(rng.randrange(0, 4)):
            coeffs = tuple(rng.randrange(-3, 4) for _ in range(n))
            if all(c == 0 for c in coeffs):
                continue
            rows.append((coeffs, F(rng.randrange(-4, 9), rng.randrange(1, 4))))
        objective = tuple(F(rng.randrange(-5, 6)) for _ in range(n))
        res = lp_solve(objective, [(c, "<=", b) for c, b in rows], "maximize")
        oracle = _brute_force_max(objective, rows, n)
        if oracle is None:
            assert res.status is LPStatus.INFEASIBLE
        else:
            assert res.status is LPStatus.OPTIMAL
            assert res.value == oracle
            point = res.witness
            assert all(sum(a * x for a, x in zip(coeffs, point)) <= b
                       for coeffs, b in rows)


def test_determinism():
    cons = [((1, 2), "<=", F(7, 2)), ((-1, 1), "<=", 1), ((0, -1), "<=", 0),
            ((-1, 0), "<=", 0)]
    a = lp_solve((3, 1), cons, "maximize")
    b = lp_solve((3, 1), cons, "maximize")
    assert a == b

"""Exact rational linear algebra helpers.

Vectors are plain tuples, matrices lists of row tuples.  Entries are ints
or fractions.Fraction; nothing here ever rounds.
"""

from fractions import Fraction
from math import gcd

ZERO = Fraction(0)
ONE = Fraction(1)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def is_zero_vec(a):
    return all(x == 0 for x in a)


def primitive(v):
    """Scale a nonzero rational vector to a primitive integer vector.

    The direction is preserved (positive scaling only).
    """
    fracs = [Fraction(x) for x in v]
    if all(f == 0 for f in fracs):
        raise ValueError("zero vector has no primitive representative")
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def sign_normalized(v):
    """Primitive vector with the first nonzero coordinate positive."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    raise ValueError("zero vector")


def solve(rows, rhs):
    """Solve a square rational system; returns None when singular.

    Gaussian elimination with the first nonzero pivot in column order, so
    the result is deterministic for a fixed input.
    """
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[r][n] for r in range(n))


def det(rows):
    """Determinant of a square matrix with int or Fraction entries."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(map(Fraction, row)) for row in rows]
    result = ONE
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        result *= m[col][col]
        inv = ONE / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result


def rank(rows):
    if not rows:
        return 0
    ncols = len(rows[0])
    m = [[Fraction(x) for x in row] for row in rows]
    rk = 0
    for col in range(ncols):
        piv = None
        for r in range(rk, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = ONE / m[rk][col]
        m[rk] = [x * inv for x in m[rk]]
        for r in range(len(m)):
            if r != rk and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
        if rk == len(m):
            break
    return rk


def kernel(rows, ncols=None):
    """Basis of the right kernel {x : rows @ x = 0}, as rational vectors."""
    if not rows:
        return [tuple(ONE if j == i else ZERO for j in range(ncols))
                for i in range(ncols)]
    ncols = len(rows[0]) if ncols is None else ncols
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rk = 0
    for col in range(ncols):
        piv = None
        for r in range(rk, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = ONE / m[rk][col]
        m[rk] = [x * inv for x in m[rk]]
        for r in range(len(m)):
            if r != rk and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        pivots.append(col)
        rk += 1
        if rk == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(tuple(vec))
    return basis


def extended_gcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_complement(v):
    """Integer basis of the sublattice {m in Z^n : <m, v> = 0}.

    v must be a primitive integer vector.  The construction runs a
    unimodular row reduction carrying v to a unit vector, so the returned
    n-1 rows really do span the full kernel sublattice (index one).
    """
    n = len(v)
    if primitive(v) != tuple(v):
        raise ValueError("v must be a primitive integer vector")
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    w = list(v)
    for i in range(1, n):
        a, b = w[0], w[i]
        if b == 0:
            continue
        g, s, t = extended_gcd(a, b)
        r0 = [s * x + t * y for x, y in zip(rows[0], rows[i])]
        ri = [(-b // g) * x + (a // g) * y for x, y in zip(rows[0], rows[i])]
        rows[0], rows[i] = r0, ri
        w[0], w[i] = g, 0
    if w[0] == -1:
        rows[0] = [-x for x in rows[0]]
        w[0] = 1
    assert w[0] == 1
    return [tuple(row) for row in rows[1:]]


def coords_in_basis(basis_rows, target):
    """Coordinates of target in the span of basis_rows, or None.

    basis_rows are linearly independent vectors in Q^n (k of them); the
    result y satisfies sum y_i * basis_rows[i] = target.
    """
    k = len(basis_rows)
    n = len(target)
    cols = list(range(n))
    sub = []
    chosen = []
    for c in cols:
        cand = sub + [[Fraction(basis_rows[i][c]) for i in range(k)]]
        if rank([tuple(r) for r in zip(*cand)]) == len(cand):
            sub = cand
            chosen.append(c)
            if len(chosen) == k:
                break
    if len(chosen) < k:
        return None
    rows = [tuple(basis_rows[i][c] for i in range(k)) for c in chosen]
    rhs = [target[c] for c in chosen]
    y = solve(rows, rhs)
    if y is None:
        return None
    for c in range(n):
        if sum(y[i] * basis_rows[i][c] for i in range(k)) != Fraction(target[c]):
            return None
    return y


def affine_rank(points):
    """Dimension of the affine hull of a point set (-1 for empty)."""
    if not points:
        return -1
    base = points[0]
    diffs = [vec_sub(p, base) for p in points[1:]]
    diffs = [d for d in diffs if not is_zero_vec(d)]
    if not diffs:
        return 0
    return rank(diffs)


def integer_root(x, k):
    """floor(x ** (1/k)) for a nonnegative integer x, exact."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return 0
    if k == 1:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r

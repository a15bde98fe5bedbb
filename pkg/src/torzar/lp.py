"""Exact rational linear programming.

A small dense two-phase simplex over fractions.Fraction with Bland's
anti-cycling rule.  Variables are free (unrestricted sign); internally each
is split into a difference of two nonnegative variables.  Verdicts are
certified: an optimum comes with a witness point, infeasibility means
phase one ended with a positive artificial residue, unboundedness means a
pivot column had no blocking row.  The pivot rule is fixed, so the solver
is deterministic for a fixed input.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    value: Fraction | None = None
    witness: tuple | None = None


def _normalize_constraints(constraints, nvars):
    """Turn mixed-form constraints into <=-rows (coeffs, bound)."""
    rows = []
    for con in constraints:
        if hasattr(con, "normal") and hasattr(con, "bound"):
            coeffs, op, rhs = con.normal, "<=", con.bound
        else:
            coeffs, op, rhs = con
        coeffs = tuple(Fraction(c) for c in coeffs)
        rhs = Fraction(rhs)
        if len(coeffs) != nvars:
            raise ValueError(
                f"constraint has {len(coeffs)} coefficients, expected {nvars}")
        if op == "<=":
            rows.append((coeffs, rhs))
        elif op == ">=":
            rows.append((tuple(-c for c in coeffs), -rhs))
        elif op == "==":
            rows.append((coeffs, rhs))
            rows.append((tuple(-c for c in coeffs), -rhs))
        else:
            raise ValueError(f"unknown constraint sense {op!r}")
    return rows


def _pivot(tab, zrow, basis, r, c):
    piv = tab[r][c]
    inv = ONE / piv
    tab[r] = [x * inv for x in tab[r]]
    row_r = tab[r]
    for i in range(len(tab)):
        if i != r:
            f = tab[i][c]
            if f != 0:
                tab[i] = [x - f * y for x, y in zip(tab[i], row_r)]
    f = zrow[c]
    if f != 0:
        zrow[:] = [x - f * y for x, y in zip(zrow, row_r)]
    basis[r] = c


def _run_simplex(tab, zrow, basis, ncols):
    """Maximize with Bland's rule; zrow[-1] tracks -objective."""
    while True:
        enter = -1
        for j in range(ncols):
            if zrow[j] > 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        best_key = None
        best_row = -1
        for i in range(len(tab)):
            a = tab[i][enter]
            if a > 0:
                key = (tab[i][-1] / a, basis[i])
                if best_key is None or key < best_key:
                    best_key = key
                    best_row = i
        if best_row < 0:
            return "unbounded"
        _pivot(tab, zrow, basis, best_row, enter)


def _init_zrow(costs, tab, basis, width):
    zrow = list(costs) + [ZERO] * (width - len(costs))
    for i, b in enumerate(basis):
        cb = costs[b] if b < len(costs) else ZERO
        if cb != 0:
            zrow = [x - cb * y for x, y in zip(zrow, tab[i])]
    return zrow


def lp_solve(objective, constraints, goal="maximize"):
    """Exact LP over free rational variables.

    objective: coefficient tuple (ignored when goal == "feasibility").
    constraints: iterable of (coeffs, op, rhs) triples with op in
        {"<=", ">=", "=="}, or objects with .normal/.bound (read as <=).
    goal: "maximize", "minimize" or "feasibility".

    Returns an LPResult; for feasibility the value is None and the witness
    is any feasible point.
    """
    if goal not in ("maximize", "minimize", "feasibility"):
        raise ValueError(f"unknown goal {goal!r}")
    nvars = len(objective)
    if nvars < 1:
        raise ValueError("at least one variable required")
    obj = tuple(Fraction(c) for c in objective)
    if goal == "minimize":
        obj = tuple(-c for c in obj)
    rows = _normalize_constraints(constraints, nvars)

    clean = []
    for coeffs, rhs in rows:
        if all(c == 0 for c in coeffs):
            if rhs < 0:
                return LPResult(LPStatus.INFEASIBLE)
            continue
        clean.append((coeffs, rhs))
    rows = clean

    m = len(rows)
    nstruct = 2 * nvars
    nslack = m
    # columns: u (nvars) | v (nvars) | slacks (m) | artificials (appended)
    tab = []
    basis = []
    art_cols = []
    ncols_noart = nstruct + nslack
    next_art = ncols_noart
    for i, (coeffs, rhs) in enumerate(rows):
        row = [ZERO] * ncols_noart
        sgn = ONE if rhs >= 0 else -ONE
        for j, c in enumerate(coeffs):
            row[j] = sgn * c
            row[nvars + j] = -sgn * c
        row[nstruct + i] = sgn
        row.append(sgn * rhs)
        tab.append(row)
        if rhs >= 0:
            basis.append(nstruct + i)
        else:
            art_cols.append(next_art)
            basis.append(next_art)
            next_art += 1

    ncols = next_art
    if art_cols:
        for i, row in enumerate(tab):
            rhs = row.pop()
            row.extend([ZERO] * len(art_cols))
            row.append(rhs)
        for i, b in enumerate(basis):
            if b >= ncols_noart:
                tab[i][b] = ONE

        phase1_costs = [ZERO] * ncols
        for c in art_cols:
            phase1_costs[c] = -ONE
        zrow = _init_zrow(phase1_costs, tab, basis, ncols + 1)
        _run_simplex(tab, zrow, basis, ncols)
        if -zrow[-1] < 0:
            return LPResult(LPStatus.INFEASIBLE)
        # remove artificials from the basis (degenerate pivots) or drop
        # redundant rows
        for i in range(len(tab) - 1, -1, -1):
            if basis[i] >= ncols_noart:
                piv_col = -1
                for j in range(ncols_noart):
                    if tab[i][j] != 0:
                        piv_col = j
                        break
                if piv_col >= 0:
                    _pivot(tab, zrow, basis, i, piv_col)
                else:
                    del tab[i]
                    del basis[i]
        tab = [row[:ncols_noart] + [row[-1]] for row in tab]
    ncols = ncols_noart

    def witness():
        vals = [ZERO] * ncols
        for i, b in enumerate(basis):
            vals[b] = tab[i][-1]
        return tuple(vals[j] - vals[nvars + j] for j in range(nvars))

    if goal == "feasibility":
        return LPResult(LPStatus.OPTIMAL, None, witness())

    costs = [ZERO] * ncols
    for j, c in enumerate(obj):
        costs[j] = c
        costs[nvars + j] = -c
    zrow = _init_zrow(costs, tab, basis, ncols + 1)
    verdict = _run_simplex(tab, zrow, basis, ncols)
    if verdict == "unbounded":
        return LPResult(LPStatus.UNBOUNDED)
    value = -zrow[-1]
    if goal == "minimize":
        value = -value
    return LPResult(LPStatus.OPTIMAL, value, witness())

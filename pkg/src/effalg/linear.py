"""Exact rational feasibility for equality systems with 0..1 bounds.

The single problem shape handled here is: find v with A v = b and
0 <= v_j <= 1, all arithmetic over ``fractions.Fraction``.  The solver is
a phase-one simplex on the standard form obtained by adding a slack per
upper bound and an artificial per row, with Bland's rule throughout, so it
terminates without any numerical tolerance.

Outcomes are self-certifying.  A feasible point lists exact values and is
checked against every row and bound by :func:`verify_point`.  An
infeasible system yields row multipliers ``y`` plus bound multipliers
``w, z >= 0`` with

    (y^T A)_j = w_j - z_j   for every variable j, and
    y^T b - sum(w) = gap > 0,

which refutes feasibility by three lines of arithmetic: any candidate v
in the box would give y^T b = sum_j (w_j - z_j) v_j <= sum(w).
:func:`verify_certificate` checks exactly that, independent of how the
multipliers were produced.  ``solve_exact`` re-verifies its own output
before returning, so a bug in the pivoting can not surface as a wrong
answer, only as a loud failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


@dataclass(frozen=True)
class LinearSystem:
    """Equality rows over ``nvars`` variables, each bounded to [0, 1].

    ``coeffs[i][j]`` is the integer coefficient of variable ``j`` in row
    ``i``; ``rhs[i]`` is that row's right-hand side.
    """

    nvars: int
    coeffs: tuple[tuple[int, ...], ...]
    rhs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != len(self.rhs):
            raise ValueError("row count and rhs count differ")
        for row in self.coeffs:
            if len(row) != self.nvars:
                raise ValueError("row width differs from variable count")


@dataclass(frozen=True)
class FeasiblePoint:
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Farkas-style refutation of an equality system with 0..1 bounds."""

    row_multipliers: tuple[Fraction, ...]
    upper_multipliers: tuple[Fraction, ...]
    lower_multipliers: tuple[Fraction, ...]
    gap: Fraction


def verify_point(sys: LinearSystem, point: FeasiblePoint) -> bool:
    """Check a candidate point against every row and bound, exactly."""
    if len(point.values) != sys.nvars:
        return False
    for v in point.values:
        if not 0 <= v <= 1:
            return False
    for row, b in zip(sys.coeffs, sys.rhs):
        total = sum(
            (c * v for c, v in zip(row, point.values)), start=Fraction(0)
        )
        if total != b:
            return False
    return True


def verify_certificate(sys: LinearSystem, cert: InfeasibilityCertificate) -> bool:
    """Check an infeasibility certificate by direct arithmetic."""
    y, w, z = cert.row_multipliers, cert.upper_multipliers, cert.lower_multipliers
    if len(y) != len(sys.coeffs) or len(w) != sys.nvars or len(z) != sys.nvars:
        return False
    if any(wj < 0 for wj in w) or any(zj < 0 for zj in z):
        return False
    for j in range(sys.nvars):
        combo = sum(
            (yi * row[j] for yi, row in zip(y, sys.coeffs)), start=Fraction(0)
        )
        if combo != w[j] - z[j]:
            return False
    gap = sum((yi * bi for yi, bi in zip(y, sys.rhs)), start=Fraction(0)) - sum(
        w, start=Fraction(0)
    )
    return gap == cert.gap and gap > 0


def solve_exact(
    sys: LinearSystem,
) -> Union[FeasiblePoint, InfeasibilityCertificate]:
    """Decide feasibility exactly; the answer is verified before returning.

    Deterministic: Bland's rule picks the smallest eligible column index
    to enter and breaks ratio ties by the smallest basic index.
    """
    m = len(sys.coeffs)
    n = sys.nvars
    nrows = m + n
    nstruct = 2 * n  # variables then their upper-bound slacks
    ncols = nstruct + nrows  # plus one artificial per row
    zero = Fraction(0)
    one = Fraction(1)

    rows: list[list[Fraction]] = []
    flips: list[int] = []
    for i in range(m):
        b = Fraction(sys.rhs[i])
        flip = -1 if b < 0 else 1
        coef = [flip * Fraction(c) for c in sys.coeffs[i]]
        coef += [zero] * n
        art = [zero] * nrows
        art[i] = one
        rows.append(coef + art + [flip * b])
        flips.append(flip)
    for j in range(n):
        coef = [zero] * nstruct
        coef[j] = one
        coef[n + j] = one
        art = [zero] * nrows
        art[m + j] = one
        rows.append(coef + art + [one])

    basis = [nstruct + r for r in range(nrows)]
    # Reduced-cost row for the phase-one objective (sum of artificials),
    # relative to the all-artificial starting basis.
    cost = [zero] * (ncols + 1)
    for j in range(ncols + 1):
        through_basis = sum((rows[r][j] for r in range(nrows)), start=zero)
        direct = one if nstruct <= j < ncols else zero
        cost[j] = direct - through_basis

    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        leave = -1
        best: Fraction | None = None
        for r in range(nrows):
            a = rows[r][enter]
            if a > 0:
                ratio = rows[r][ncols] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[r] < basis[leave])
                ):
                    best = ratio
                    leave = r
        if best is None:
            raise RuntimeError(
                "phase-one objective unbounded below; the tableau is corrupt"
            )
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        pivot_row = rows[leave]
        for r in range(nrows):
            if r != leave:
                f = rows[r][enter]
                if f != 0:
                    row = rows[r]
                    rows[r] = [
                        row[k] - f * pivot_row[k] for k in range(ncols + 1)
                    ]
        f = cost[enter]
        if f != 0:
            cost = [cost[k] - f * pivot_row[k] for k in range(ncols + 1)]
        basis[leave] = enter

    objective = -cost[ncols]
    if objective == 0:
        values = [zero] * n
        for r in range(nrows):
            if basis[r] < n:
                values[basis[r]] = rows[r][ncols]
        point = FeasiblePoint(tuple(values))
        if not verify_point(sys, point):
            raise RuntimeError("simplex produced an invalid feasible point")
        return point

    # Duals from the artificial columns: the reduced cost of artificial r
    # is 1 - y_r, so y_r reads off the final cost row directly.
    y = [one - cost[nstruct + r] for r in range(nrows)]
    row_mult = tuple(flips[i] * y[i] for i in range(m))
    upper = tuple(-y[m + j] for j in range(n))
    lower = []
    for j in range(n):
        combo = sum(
            (row_mult[i] * sys.coeffs[i][j] for i in range(m)), start=zero
        )
        lower.append(upper[j] - combo)
    cert = InfeasibilityCertificate(
        row_mult, upper, tuple(lower), objective
    )
    if not verify_certificate(sys, cert):
        raise RuntimeError("simplex produced an invalid infeasibility certificate")
    return cert

"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

lp.py: exact rational linear programming

two-phase tableau simplex with Bland's rule. phase 1 uses one artificial
variable per row; when the artificial optimum is positive its duals give a
Farkas certificate. phase 2 drives artificials out of the basis, drops
redundant rows and optimizes the real objective.

"""
import logging
from fractions import Fraction

from . import error

logger = logging.getLogger("sctx.lp")

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

LE, GE, EQ = "<=", ">=", "=="


class LPResult:
    def __init__(self, status, x=None, value=None, farkas=None, pivots=0):
        self.status = status
        self.x = x
        self.value = value
        self.farkas = farkas
        self.pivots = pivots

    def __repr__(self):
        return f"LPResult({self.status}, value={self.value})"


class SimplexTableau:
    """tableau for min c.x subject to A x = b, x >= 0 with b >= 0

    columns 0..n-1 are the structural variables, n..n+m-1 the artificials.
    """

    def __init__(self, A, b):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.signs = [(-1 if v < 0 else 1) for v in b]
        width = self.n + self.m
        self.T = []
        for i, (row, rhs) in enumerate(zip(A, b)):
            s = self.signs[i]
            entries = [s * Fraction(v) for v in row] + [ZERO] * self.m
            entries[self.n + i] = ONE
            self.T.append(entries + [s * Fraction(rhs)])
        self.width = width
        self.basis = [self.n + i for i in range(self.m)]
        self.z = [ZERO] * (width + 1)
        self.pivots = 0

    def set_cost(self, c):
        """reduced costs r = c - c_B B^-1 A and -value in the last slot"""
        c = list(c) + [ZERO] * (self.width - len(c))
        self.z = [Fraction(v) for v in c] + [ZERO]
        for i, bv in enumerate(self.basis):
            cb = c[bv]
            if cb != 0:
                row = self.T[i]
                self.z = [zv - cb * tv for zv, tv in zip(self.z, row)]

    def pivot(self, i, j):
        row = self.T[i]
        piv = row[j]
        if piv != 1:
            row = [v / piv for v in row]
            self.T[i] = row
        for k in range(self.m):
            if k != i:
                f = self.T[k][j]
                if f != 0:
                    self.T[k] = [a - f * b for a, b in zip(self.T[k], row)]
        f = self.z[j]
        if f != 0:
            self.z = [a - f * b for a, b in zip(self.z, row)]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self, allowed):
        try:
            j = min(j for j in allowed if self.z[j] < 0)
        except ValueError:
            return OPTIMAL
        try:
            _, _, i = min(
                (self.T[i][-1] / self.T[i][j], self.basis[i], i)
                for i in range(self.m) if self.T[i][j] > 0
            )
        except ValueError:
            return UNBOUNDED
        self.pivot(i, j)
        return "go_on"

    def bland(self, allowed):
        while True:
            ret = self.bland_step(allowed)
            if ret in (OPTIMAL, UNBOUNDED):
                return ret

    def value(self):
        return -self.z[-1]

    def primal(self, n):
        x = [ZERO] * n
        for i, bv in enumerate(self.basis):
            if bv < n:
                x[bv] = self.T[i][-1]
        return x

    def pivot_out_artificials(self):
        """drive zero-valued artificials out; drop rows that stay (redundant)"""
        keep = []
        for i in range(self.m):
            if self.basis[i] >= self.n:
                j = next((j for j in range(self.n) if self.T[i][j] != 0), None)
                if j is None:
                    continue
                self.pivot(i, j)
            keep.append(i)
        self.T = [self.T[i] for i in keep]
        self.basis = [self.basis[i] for i in keep]
        self.m = len(keep)


def solve_standard(A, b, c=None):
    """min c.x subject to A x = b, x >= 0 (feasibility only when c is None)"""
    A = [list(row) for row in A]
    b = list(b)
    if not A:
        n = len(c) if c is not None else 0
        if c is not None and any(v < 0 for v in c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, x=[ZERO] * n, value=ZERO)
    tab = SimplexTableau(A, b)
    n, m = tab.n, tab.m
    tab.set_cost([ZERO] * n + [ONE] * m)
    tab.bland(range(n + m))
    if tab.value() > 0:
        duals = [ONE - tab.z[n + i] for i in range(m)]
        farkas = [s * y for s, y in zip(tab.signs, duals)]
        logger.debug("phase 1 infeasible after %d pivots", tab.pivots)
        return LPResult(INFEASIBLE, farkas=farkas, pivots=tab.pivots)
    tab.pivot_out_artificials()
    if c is None:
        return LPResult(OPTIMAL, x=tab.primal(n), value=ZERO, pivots=tab.pivots)
    tab.set_cost(list(c))
    status = tab.bland(range(n))
    logger.debug("phase 2 %s after %d pivots", status, tab.pivots)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)
    return LPResult(OPTIMAL, x=tab.primal(n), value=tab.value(), pivots=tab.pivots)


def check_standard_farkas(A, b, y):
    """y^T A <= 0 and y^T b > 0 certify that A x = b, x >= 0 is empty"""
    n = len(A[0]) if A else 0
    for j in range(n):
        if sum((yi * row[j] for yi, row in zip(y, A)), ZERO) > 0:
            return False
    return sum((yi * bi for yi, bi in zip(y, b)), ZERO) > 0


class LinearSystem:
    """rows a.x (<=|>=|==) b over n variables, free unless listed as nonneg"""

    def __init__(self, n, nonneg=()):
        self.n = n
        self.nonneg = set(nonneg)
        self.rows = []

    def add(self, coeffs, sense, rhs):
        if sense not in (LE, GE, EQ):
            raise ValueError(f"unknown sense {sense!r}")
        if isinstance(coeffs, dict):
            dense = [ZERO] * self.n
            for j, v in coeffs.items():
                dense[j] += Fraction(v)
            coeffs = dense
        if len(coeffs) != self.n:
            raise ValueError(f"row has {len(coeffs)} coefficients, expected {self.n}")
        self.rows.append(([Fraction(v) for v in coeffs], sense, Fraction(rhs)))

    def __len__(self):
        return len(self.rows)

    def satisfied_by(self, x):
        for j in self.nonneg:
            if x[j] < 0:
                return False
        for coeffs, sense, rhs in self.rows:
            lhs = sum((a * v for a, v in zip(coeffs, x)), ZERO)
            if sense == LE and lhs > rhs or sense == GE and lhs < rhs or sense == EQ and lhs != rhs:
                return False
        return True

    def standard_form(self):
        """columns: per variable u (and v when free), then one slack per inequality"""
        columns = []
        for j in range(self.n):
            columns.append((j, 1))
            if j not in self.nonneg:
                columns.append((j, -1))
        slack_rows = [k for k, (_, sense, _) in enumerate(self.rows) if sense != EQ]
        width = len(columns) + len(slack_rows)
        A, b = [], []
        for k, (coeffs, sense, rhs) in enumerate(self.rows):
            row = [sign * coeffs[j] for (j, sign) in columns] + [ZERO] * len(slack_rows)
            if sense != EQ:
                row[len(columns) + slack_rows.index(k)] = ONE if sense == LE else -ONE
            A.append(row)
            b.append(rhs)
        return A, b, columns, width

    def recover(self, x_std, columns):
        x = [ZERO] * self.n
        for value, (j, sign) in zip(x_std, columns):
            x[j] += sign * value
        return x


class FarkasCertificate:
    """multipliers y_k, one per row, proving the system empty

    sum_k y_k a_k vanishes on free variables and is <= 0 on nonneg ones,
    y_k <= 0 on <= rows, y_k >= 0 on >= rows, and y.b > 0.
    """

    def __init__(self, multipliers):
        self.multipliers = multipliers

    def check(self, system):
        y = self.multipliers
        if len(y) != len(system.rows):
            return False
        for yk, (_, sense, _) in zip(y, system.rows):
            if sense == LE and yk > 0 or sense == GE and yk < 0:
                return False
        for j in range(system.n):
            combo = sum((yk * row[0][j] for yk, row in zip(y, system.rows)), ZERO)
            if j in system.nonneg:
                if combo > 0:
                    return False
            elif combo != 0:
                return False
        return sum((yk * row[2] for yk, row in zip(y, system.rows)), ZERO) > 0


class Feasible:
    feasible = True

    def __init__(self, point):
        self.point = point

    def __repr__(self):
        return f"Feasible({self.point})"


class Infeasible:
    feasible = False

    def __init__(self, certificate):
        self.certificate = certificate

    def __repr__(self):
        return f"Infeasible({self.certificate.multipliers})"


def lp_feasible(system):
    A, b, columns, width = system.standard_form()
    if not A:
        return Feasible([ZERO] * system.n)
    result = solve_standard(A, b)
    if result.status == INFEASIBLE:
        certificate = FarkasCertificate(result.farkas)
        if not certificate.check(system):
            raise error.CertificateError("Farkas certificate failed its exact check")
        return Infeasible(certificate)
    point = system.recover(result.x, columns)
    if not system.satisfied_by(point):
        raise error.CertificateError("feasible point failed its exact check")
    return Feasible(point)


def lp_optimize(system, objective, maximize=False):
    """optimize objective.x over the system; LPResult with x in system variables"""
    A, b, columns, width = system.standard_form()
    sign = -1 if maximize else 1
    c = [sign * Fraction(objective[j]) * s for (j, s) in columns] + [ZERO] * (width - len(columns))
    if not A:
        if any(v != 0 for v in c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, x=[ZERO] * system.n, value=ZERO)
    result = solve_standard(A, b, c)
    if result.status != OPTIMAL:
        return result
    x = system.recover(result.x, columns)
    value = sum((Fraction(o) * v for o, v in zip(objective, x)), ZERO)
    return LPResult(OPTIMAL, x=x, value=value, pivots=result.pivots)

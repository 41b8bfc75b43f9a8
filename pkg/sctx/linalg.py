"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

linalg.py: exact rational linear algebra on lists of Fractions

"""
import math
from fractions import Fraction


def to_fractions(rows):
    return [[Fraction(v) for v in row] for row in rows]


def form_rational(m, t=None):
    """in-place row echelon form; returns the free (non-pivot) columns

    t, if given, is a right-hand side transformed along with m.
    """
    free_vars = []
    n_rows = len(m)
    if n_rows == 0:
        return free_vars
    n_cols = len(m[0])
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            free_vars.append(piv_c)
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            if t is not None:
                t[piv_r], t[i_row] = t[i_row], t[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                m[r][c] -= m[piv_r][c] * frp
            if t is not None:
                t[r] -= t[piv_r] * frp
        piv_r += 1
        if piv_r == n_rows:
            free_vars.extend(range(piv_c + 1, n_cols))
            break
    return free_vars


def back_substitution_rational(m, t, free_vars, sol):
    """solve the echelon system for the pivot variables, free ones taken from sol;
    None when inconsistent"""
    n_rows = len(m)
    n_cols = len(sol)
    if t is not None:
        rank = n_cols - len(free_vars)
        for r in range(rank, n_rows):
            if t[r] != 0:
                return None
    free_flags = [False] * n_cols
    for c in free_vars:
        free_flags[c] = True
    piv_cols = [c for c, f in enumerate(free_flags) if not f]
    for r in range(len(piv_cols) - 1, -1, -1):
        piv_c = piv_cols[r]
        s = Fraction(0) if t is None else -t[r]
        for c in range(piv_c + 1, n_cols):
            s += m[r][c] * sol[c]
        sol[piv_c] = -s / m[r][piv_c]
    return sol


def rank(rows, n_cols=None):
    rows = to_fractions(rows)
    if not rows:
        return 0
    n_cols = len(rows[0]) if n_cols is None else n_cols
    return n_cols - len(form_rational(rows))


def solve(rows, rhs):
    """one exact solution of rows . x = rhs (free variables 0), or None"""
    m = to_fractions(rows)
    t = [Fraction(v) for v in rhs]
    n_cols = len(m[0])
    free_vars = form_rational(m, t)
    return back_substitution_rational(m, t, free_vars, [Fraction(0)] * n_cols)


def nullspace(rows, n_cols):
    """basis of {x : rows . x = 0}, one vector per free column"""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    m = to_fractions(rows)
    free_vars = form_rational(m)
    basis = []
    for c in free_vars:
        sol = [Fraction(0)] * n_cols
        sol[c] = Fraction(1)
        basis.append(back_substitution_rational(m, None, free_vars, sol))
    return basis


class IncrementalBasis:
    """row space built one vector at a time; reports whether a row was new"""

    def __init__(self, n_cols):
        self.n_cols = n_cols
        self.pivots = []  # (column, reduced row)

    def reduce(self, row):
        row = [Fraction(v) for v in row]
        for (c, basis_row) in self.pivots:
            f = row[c]
            if f != 0:
                for k in range(self.n_cols):
                    if basis_row[k] != 0:
                        row[k] -= f * basis_row[k]
        return row

    def add(self, row):
        row = self.reduce(row)
        for c, v in enumerate(row):
            if v != 0:
                row = [a / v for a in row]
                for i, (pc, basis_row) in enumerate(self.pivots):
                    f = basis_row[c]
                    if f != 0:
                        self.pivots[i] = (pc, [a - f * b for a, b in zip(basis_row, row)])
                self.pivots.append((c, row))
                return True
        return False

    def rank(self):
        return len(self.pivots)


def independent_rows(rows, n_cols):
    """indices of a maximal independent subset, greedily in order"""
    basis = IncrementalBasis(n_cols)
    return [i for i, row in enumerate(rows) if basis.add(row)]


def inverse(square):
    n = len(square)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(square)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [v / piv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [row[n:] for row in m]


def mat_vec(rows, vec):
    return [sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in rows]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def primitive(vec):
    """positive multiple of a rational vector with coprime integer entries"""
    vec = [Fraction(v) for v in vec]
    lcm = 1
    for v in vec:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vec]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return ints
    return [v // g for v in ints]

"""Exact linear algebra over the integers and rationals.

Fraction-free Bareiss elimination for ranks and determinants, a column-style
Hermite normal form, and an integer linear solver built on it.  Everything
works on plain lists of Python ints / Fractions; matrices are small (desk
scale), so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NoIntegerSolution, NoRationalSolution


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Divisions in the Bareiss update are exact by construction, so the
    computation stays in arbitrary-precision integers throughout.
    """
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev_pivot = 1
    row = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(row, n_rows):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for r in range(row + 1, n_rows):
            for c in range(col + 1, n_cols):
                m[r][c] = (pivot * m[r][c] - m[r][col] * m[row][c]) // prev_pivot
            m[r][col] = 0
        prev_pivot = pivot
        row += 1
        rank += 1
        if row == n_rows:
            break
    return rank


def rank_mod_p(rows, p) -> int:
    """Rank of an integer matrix over the prime field F_p.

    Always a lower bound for the rational rank (a minor that survives
    reduction is nonzero over Q), so a drop below an expected rank is a
    genuine failure no matter which prime was picked.  Used as a fast
    screen when entries have grown past what Bareiss handles comfortably.
    """
    m = [[x % p for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot_row = None
        for r in range(row, n_rows):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        inv = pow(m[row][col], p - 2, p)
        for r in range(row + 1, n_rows):
            if m[r][col]:
                scale = m[r][col] * inv % p
                m[r] = [
                    (m[r][c] - scale * m[row][c]) % p for c in range(n_cols)
                ]
        row += 1
        rank += 1
        if row == n_rows:
            break
    return rank


def det(rows) -> Fraction:
    """Determinant of a square rational matrix (Gaussian elimination)."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det requires a square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        result *= pivot
        for r in range(col + 1, n):
            factor = m[r][col] / pivot
            if factor == 0:
                continue
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return sign * result


def invert(rows):
    """Inverse of a square rational matrix, or None if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return None
        m[col], m[pivot_row] = m[pivot_row], m[col]
        pivot = m[col][col]
        m[col] = [x / pivot for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return [row[n:] for row in m]


def mat_mul(a, b):
    """Matrix product with exact entries."""
    if not a or not b:
        return []
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("inner dimensions do not match")
    cols = len(b[0])
    return [[sum(row[k] * b[k][c] for k in range(inner)) for c in range(cols)]
            for row in a]


def solve_rational(a_rows, b_col):
    """Solve A x = b over Q.  Returns None if inconsistent.

    Requires a unique solution (full column rank); raises ValueError when the
    system is underdetermined, since callers here always pre-check rank.
    """
    n_rows = len(a_rows)
    n_cols = len(a_rows[0]) if a_rows else 0
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(a_rows, b_col)]
    rank = 0
    pivot_cols = []
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        m[rank] = [x / pivot for x in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        pivot_cols.append(col)
        rank += 1
    for r in range(rank, n_rows):
        if m[r][n_cols] != 0:
            return None
    if rank < n_cols:
        raise ValueError("underdetermined system")
    x = [Fraction(0)] * n_cols
    for i, col in enumerate(pivot_cols):
        x[col] = m[i][n_cols]
    return x


def column_hnf(rows):
    """Column Hermite form: returns (H, U) with A*U = H, U unimodular.

    H is in column echelon form with positive pivots; pivot rows strictly
    increase left to right and zero columns are pushed to the right.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    h = [list(row) for row in rows]
    u = [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]

    def col_addmul(dst, src, factor):
        for r in range(n_rows):
            h[r][dst] += factor * h[r][src]
        for r in range(n_cols):
            u[r][dst] += factor * u[r][src]

    def col_swap(i, j):
        for r in range(n_rows):
            h[r][i], h[r][j] = h[r][j], h[r][i]
        for r in range(n_cols):
            u[r][i], u[r][j] = u[r][j], u[r][i]

    def col_negate(i):
        for r in range(n_rows):
            h[r][i] = -h[r][i]
        for r in range(n_cols):
            u[r][i] = -u[r][i]

    pivot_col = 0
    for row in range(n_rows):
        if pivot_col >= n_cols:
            break
        # gcd out the entries of this row among the free columns
        while True:
            nonzero = [c for c in range(pivot_col, n_cols) if h[row][c] != 0]
            if len(nonzero) <= 1:
                break
            nonzero.sort(key=lambda c: abs(h[row][c]))
            small, other = nonzero[0], nonzero[1]
            q = h[row][other] // h[row][small]
            col_addmul(other, small, -q)
        nonzero = [c for c in range(pivot_col, n_cols) if h[row][c] != 0]
        if not nonzero:
            continue
        c = nonzero[0]
        if c != pivot_col:
            col_swap(c, pivot_col)
        if h[row][pivot_col] < 0:
            col_negate(pivot_col)
        # reduce earlier columns against the new pivot
        pivot = h[row][pivot_col]
        for c in range(pivot_col):
            if h[row][c] != 0:
                q = h[row][c] // pivot
                col_addmul(c, pivot_col, -q)
        pivot_col += 1
    return h, u


def solve_integer(a_rows, b_col):
    """Solve A x = b over the integers.

    Returns the particular solution whose free coordinates (in the Hermite
    parametrization) are zero.  Raises NoRationalSolution if the system is
    inconsistent over Q, NoIntegerSolution if it is consistent over Q but
    admits no integer solution.
    """
    n_rows = len(a_rows)
    n_cols = len(a_rows[0]) if a_rows else 0
    if len(b_col) != n_rows:
        raise ValueError("right-hand side length mismatch")
    if n_cols == 0:
        if any(x != 0 for x in b_col):
            raise NoRationalSolution("empty matrix, nonzero rhs")
        return []
    h, u = column_hnf(a_rows)
    # forward-substitute through the echelon columns
    y = [Fraction(0)] * n_cols
    col = 0
    pivots = []  # (row, col)
    for c in range(n_cols):
        pr = next((r for r in range(n_rows) if h[r][c] != 0), None)
        if pr is not None:
            pivots.append((pr, c))
    used_rows = set()
    for pr, c in pivots:
        residual = Fraction(b_col[pr]) - sum(Fraction(h[pr][cc]) * y[cc]
                                             for _, cc in pivots if cc < c)
        y[c] = residual / h[pr][c]
        used_rows.add(pr)
    # consistency on the remaining rows
    for r in range(n_rows):
        if r in used_rows:
            continue
        residual = Fraction(b_col[r]) - sum(Fraction(h[r][cc]) * y[cc]
                                            for _, cc in pivots)
        if residual != 0:
            raise NoRationalSolution("inconsistent row %d" % r)
    if any(v.denominator != 1 for v in y):
        raise NoIntegerSolution("Hermite solve produced non-integral coordinates")
    y_int = [int(v) for v in y]
    return [sum(u[r][c] * y_int[c] for c in range(n_cols)) for r in range(n_cols)]

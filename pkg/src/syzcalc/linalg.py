"""Exact linear algebra over the integers and the rationals.

Matrices are plain lists of rows.  The integer routines are built on a
column-style Hermite normal form ``A U = H`` with ``U`` unimodular, which
gives kernels (trailing columns of ``U``) and solutions of ``A x = b``
(forward substitution in ``H``) from one elimination.
"""

from fractions import Fraction


def egcd(a, b):
    """Return ``(g, x, y)`` with ``g = x*a + y*b = gcd(a, b) >= 0``.

    When ``a`` divides ``b`` the trivial cofactors ``(sign(a), 0)`` are
    returned, so a pivot that already divides an entry is left alone.
    """
    if a != 0 and b % a == 0:
        return abs(a), (1 if a > 0 else -1), 0
    if b != 0 and a == 0:
        return abs(b), 0, (1 if b > 0 else -1)
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def gcd_combination(values):
    """``(g, coeffs)`` with ``g = gcd(values) = sum coeffs[i] * values[i]``,
    folding :func:`egcd` left to right."""
    g, coeffs = 0, []
    for a in values:
        g, x, y = egcd(g, a)
        coeffs = [c * x for c in coeffs] + [y]
    return g, coeffs


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _column_op(M, k, j, x, y, u, v):
    # (col_k, col_j) <- (x col_k + y col_j, u col_k + v col_j)
    for row in M:
        ck, cj = row[k], row[j]
        row[k] = x * ck + y * cj
        row[j] = u * ck + v * cj


def column_hnf(A, ncols=None):
    """Column Hermite normal form.

    Returns ``(H, U, pivots)`` with ``A U = H``, ``U`` unimodular, ``H``
    lower echelon, and ``pivots`` the list of ``(row, column)`` pivot
    positions (column indices are ``0 .. rank-1``).  Columns of ``H`` from
    ``rank`` onwards are zero, so the matching columns of ``U`` are a basis
    of the integer kernel of ``A``.
    """
    rows = len(A)
    cols = ncols if ncols is not None else (len(A[0]) if rows else 0)
    H = [list(r) for r in A]
    U = identity(cols)
    col = 0
    pivots = []
    for i in range(rows):
        if col >= cols:
            break
        for j in range(col + 1, cols):
            b = H[i][j]
            if b == 0:
                continue
            a = H[i][col]
            g, x, y = egcd(a, b)
            u, v = -b // g, a // g
            _column_op(H, col, j, x, y, u, v)
            _column_op(U, col, j, x, y, u, v)
        p = H[i][col]
        if p == 0:
            continue
        if p < 0:
            for M in (H, U):
                for row in M:
                    row[col] = -row[col]
            p = -p
        for k in range(col):
            q = H[i][k] // p
            if q:
                for M in (H, U):
                    for row in M:
                        row[k] -= q * row[col]
        pivots.append((i, col))
        col += 1
    return H, U, pivots


def integer_kernel(A, ncols=None):
    """Basis of ``{x in Z^n : A x = 0}`` as a list of vectors."""
    cols = ncols if ncols is not None else len(A[0])
    _, U, pivots = column_hnf(A, cols)
    rank = len(pivots)
    return [[U[r][k] for r in range(cols)] for k in range(rank, cols)]


def solve_integer(A, b, ncols=None):
    """Some integer solution of ``A x = b``, or ``None`` if there is none."""
    rows = len(A)
    cols = ncols if ncols is not None else (len(A[0]) if rows else 0)
    H, U, pivots = column_hnf(A, cols)
    pivot_of_row = dict(pivots)
    y = [0] * cols
    for i in range(rows):
        residual = b[i] - sum(H[i][k] * y[k] for k in range(cols) if y[k])
        if i in pivot_of_row:
            k = pivot_of_row[i]
            q, rem = divmod(residual, H[i][k])
            if rem:
                return None
            y[k] = q
        elif residual:
            return None
    return [sum(U[r][k] * y[k] for k in range(cols)) for r in range(cols)]


def rref(A):
    """Reduced row echelon form over Q; returns ``(R, pivot_columns)``."""
    R = [[Fraction(x) for x in row] for row in A]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivot_cols = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    return R, pivot_cols


def rational_kernel(A, ncols=None):
    cols = ncols if ncols is not None else len(A[0])
    if not A:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    R, pivot_cols = rref(A)
    free = [c for c in range(cols) if c not in pivot_cols]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivot_cols):
            v[pc] = -R[r][f]
        basis.append(v)
    return basis


def solve_rational(A, b, ncols=None):
    """Some rational solution of ``A x = b``, or ``None``."""
    cols = ncols if ncols is not None else (len(A[0]) if A else 0)
    if not A:
        return [Fraction(0)] * cols
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivot_cols = rref(aug)
    if cols in pivot_cols:
        return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivot_cols):
        x[pc] = R[r][cols]
    return x

"""Exact Gaussian elimination over a field (Fraction or RationalQ entries).

Matrices are lists of row lists; entries must support +, -, *, /, bool.
"""

__all__ = ["rref", "rank", "solve", "nullspace"]


def rref(mat, ncols=None):
    """Reduced row echelon form.

    Returns (rows, pivot_cols): rows is the nonzero part of the RREF,
    pivot_cols the pivot column indices in order.
    """
    rows = [list(r) for r in mat]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for k in range(r, len(rows)):
            if rows[k][c]:
                piv = k
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(mat, ncols=None):
    return len(rref(mat, ncols)[1])


def solve(mat, rhs):
    """Solve mat @ x = rhs if consistent; returns x (with zeros at free
    columns) or None if inconsistent."""
    if not mat:
        return [] if all(not b for b in rhs) else None
    aug = [list(r) + [b] for r, b in zip(mat, rhs)]
    n = len(mat[0])
    rows, pivots = rref(aug, ncols=n + 1)
    if n in pivots:
        return None
    zero = rhs[0] - rhs[0] if rhs else 0
    x = [zero] * n
    for r, c in enumerate(pivots):
        x[c] = rows[r][n]
    return x


def nullspace(mat, ncols):
    """Basis of the right kernel, one vector per free column."""
    rows, pivots = rref(mat, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    if rows:
        one = None
        for row in rows:
            for x in row:
                if x:
                    one = x / x
                    break
            if one is not None:
                break
        zero = one - one
    else:
        from fractions import Fraction
        one, zero = Fraction(1), Fraction(0)
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis

"""Exact dense linear algebra over a field (Fraction or CyclotomicScalar).

Matrices are lists of rows.  Nothing here is clever: plain Gauss-Jordan
elimination, which is all the small blocks in this package need.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c] if isinstance(m[r][c], (int, Fraction)) else m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            f = m[i][c]
            if i != r and f:
                row_r = m[r]
                m[i] = [x - f * y for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list[list], n_cols: int) -> list[list]:
    """Basis of {x : rows @ x = 0}, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    red, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve_augmented(rows: list[list]) -> list:
    """Solve a square system given as [A | b]; raises if singular."""
    n = len(rows)
    red, pivots = rref(rows)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [red[i][n] for i in range(n)]


def inverse(matrix: list[list]) -> list[list]:
    n = len(matrix)
    one, zero = Fraction(1), Fraction(0)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]

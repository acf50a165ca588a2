"""Small exact matrix helpers shared by the form and transfer code.

Matrices are plain tuples of tuples.  Entries only need ring arithmetic, so
the same helpers serve base-field scalars and algebra elements; determinants
over a field go through Bareiss elimination, while the division-free cofactor
expansion is reserved for entries with zero divisors.
"""
from __future__ import annotations

from .errors import MathDomainError
from .fields import Scalar

COFACTOR_RANK_GUARD = 8


def freeze(rows):
    return tuple(tuple(row) for row in rows)


def is_square_matrix(rows) -> bool:
    return all(len(row) == len(rows) for row in rows)


def is_symmetric(rows) -> bool:
    n = len(rows)
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def identity(n, one, zero):
    return freeze(
        [[one if i == j else zero for j in range(n)] for i in range(n)]
    )


def block_diag(a, b, zero):
    n, m = len(a), len(b)
    out = []
    for i in range(n):
        out.append(list(a[i]) + [zero] * m)
    for i in range(m):
        out.append([zero] * n + list(b[i]))
    return freeze(out)


def kron(a, b):
    n, m = len(a), len(b)
    out = []
    for i in range(n):
        for k in range(m):
            out.append([a[i][j] * b[k][l] for j in range(n) for l in range(m)])
    return freeze(out)


def mat_mul(a, b):
    n, mid, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for k in range(1, mid):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return freeze(out)


def mat_transpose(a):
    return freeze(zip(*a))


def congruent(p, m):
    """transpose(p) * m * p."""
    return mat_mul(mat_transpose(p), mat_mul(m, p))


def det_bareiss(rows) -> Scalar:
    """Determinant of a matrix of field scalars by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        raise MathDomainError("empty matrix has no determinant here")
    a = [list(row) for row in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return rows[0][0].field.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else num / prev
            a[i][k] = a[i][k].field.zero()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_cofactor(rows, zero):
    """Division-free determinant by first-row cofactor expansion.

    Shared minors are memoized on their column set, which keeps the expansion
    at O(n * 2^n) ring multiplications; the rank guard keeps that honest.
    """
    n = len(rows)
    if n == 0:
        raise MathDomainError("empty matrix has no determinant here")
    if n > COFACTOR_RANK_GUARD:
        raise MathDomainError(
            f"cofactor determinant limited to rank {COFACTOR_RANK_GUARD}"
        )
    memo = {}

    def minor(cols):
        # the row is determined by how many columns remain
        if cols in memo:
            return memo[cols]
        row = n - len(cols)
        acc = zero
        for idx, c in enumerate(cols):
            entry = rows[row][c]
            rest = cols[:idx] + cols[idx + 1 :]
            term = entry if not rest else entry * minor(rest)
            acc = acc - term if idx % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))

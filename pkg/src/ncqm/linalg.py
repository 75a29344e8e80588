"""Exact dense linear algebra on tuple-of-tuple ``Fraction`` matrices.

Matrices are small (dim <= 8 in practice), so plain Python loops over
``fractions.Fraction`` are fast enough and keep every result exact.
"""

from fractions import Fraction
from typing import Sequence, Tuple

from .errors import DimensionMismatch, SingularMatrix

Mat = Tuple[Tuple[Fraction, ...], ...]


def as_mat(rows: Sequence[Sequence]) -> Mat:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    n = len(out)
    if any(len(row) != n for row in out):
        raise DimensionMismatch("matrix must be square, got ragged or rectangular rows")
    return out


def identity(n: int) -> Mat:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(n: int) -> Mat:
    return tuple((Fraction(0),) * n for _ in range(n))


def diag(values: Sequence) -> Mat:
    n = len(values)
    return tuple(
        tuple(Fraction(values[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def matmul(a: Mat, b: Mat) -> Mat:
    if len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt)
        for row in a
    )


def scale(c, a: Mat) -> Mat:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def congruence(s: Mat, a: Mat) -> Mat:
    """Return ``s @ a @ s.T``."""
    return matmul(matmul(s, a), transpose(s))


def row_reduce(a: Mat):
    """Gaussian elimination; returns (echelon rows, pivot columns, sign of permutation)."""
    m = [list(row) for row in a]
    rows, cols = len(m), len(m[0]) if m else 0
    pivots = []
    sign = 1
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        for i in range(r + 1, rows):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots, sign


def det(a: Mat) -> Fraction:
    m, pivots, sign = row_reduce(a)
    if len(pivots) < len(a):
        return Fraction(0)
    out = Fraction(sign)
    for i in range(len(a)):
        out *= m[i][i]
    return out


def rank(a: Mat) -> int:
    return len(row_reduce(a)[1])


def inverse(a: Mat) -> Mat:
    n = len(a)
    m = [list(row) + list(e) for row, e in zip(a, identity(n))]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is not invertible")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def solve(a: Mat, b: Sequence) -> Tuple[Fraction, ...]:
    """Solve ``a @ x = b`` for square invertible ``a``."""
    inv = inverse(a)
    b = [Fraction(x) for x in b]
    return tuple(sum((x * y for x, y in zip(row, b)), Fraction(0)) for row in inv)


def is_antisymmetric(a: Mat) -> bool:
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(i, n))


def is_symmetric(a: Mat) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def leading_minors(a: Mat) -> Tuple[Fraction, ...]:
    return tuple(det(tuple(row[:k] for row in a[:k])) for k in range(1, len(a) + 1))


def to_float(a: Mat):
    import numpy as np

    return np.array([[float(x) for x in row] for row in a], dtype=float)

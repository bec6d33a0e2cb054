"""Quaternions as 4-tuples (a, b, c, d) = a + bi + cj + dk and quaternionic matrices.

H^m is a right H-module; matrices act by left multiplication.  A quaternionic
matrix is a dict {(row, col): quaternion}.
"""
from __future__ import annotations

from fractions import Fraction

from ..exactmat import Matrix, Scalar

ONE = (1, 0, 0, 0)
QI = (0, 1, 0, 0)
QJ = (0, 0, 1, 0)
QK = (0, 0, 0, 1)
UNITS = (ONE, QI, QJ, QK)


def qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def qconj(q):
    return (q[0], -q[1], -q[2], -q[3])


def qadd(p, q):
    return tuple(x + y for x, y in zip(p, q))


def qscale(q, c):
    return tuple(c * x for x in q)


def is_zero(q):
    return not any(q)


def left(q) -> Matrix:
    """4x4 real matrix of x -> q x in the basis 1, i, j, k."""
    cols = [qmul(q, u) for u in UNITS]
    return Matrix.from_rows([[cols[c][r] for c in range(4)] for r in range(4)])


def right(q) -> Matrix:
    """4x4 real matrix of x -> x q."""
    cols = [qmul(u, q) for u in UNITS]
    return Matrix.from_rows([[cols[c][r] for c in range(4)] for r in range(4)])


def qgrid_mul(A: dict, B: dict) -> dict:
    out = {}
    rows_b: dict[int, list] = {}
    for (k, j), q in B.items():
        rows_b.setdefault(k, []).append((j, q))
    for (i, k), p in A.items():
        for j, q in rows_b.get(k, ()):
            out[(i, j)] = qadd(out.get((i, j), (0, 0, 0, 0)), qmul(p, q))
    return {k: v for k, v in out.items() if not is_zero(v)}


def qgrid_star(A: dict) -> dict:
    """Quaternionic conjugate transpose."""
    return {(j, i): qconj(q) for (i, j), q in A.items()}


def qgrid_add(A: dict, B: dict, sign=1) -> dict:
    out = dict(A)
    for k, q in B.items():
        out[k] = qadd(out.get(k, (0, 0, 0, 0)), qscale(q, sign))
    return {k: v for k, v in out.items() if not is_zero(v)}


def qgrid_unit(i, j, q=ONE) -> dict:
    return {(i, j): tuple(Fraction(x) for x in q)}


def to_real(A: dict, m: int, cols: int | None = None) -> Matrix:
    """Real 4m x 4n block model (left multiplication on H^n)."""
    cols = m if cols is None else cols
    ent = {}
    for (i, j), q in A.items():
        L = left(q)
        for (r, c), s in L.entries().items():
            ent[(4 * i + r, 4 * j + c)] = s.re
    return Matrix.from_dict(4 * m, 4 * cols, ent)


def right_scalar(q, m: int) -> Matrix:
    """Right multiplication by the quaternion q on H^m (commutes with to_real)."""
    R = right(q)
    ent = {}
    for i in range(m):
        for (r, c), s in R.entries().items():
            ent[(4 * i + r, 4 * i + c)] = s.re
    return Matrix.from_dict(4 * m, 4 * m, ent)


def to_complex(A: dict, m: int) -> Matrix:
    """Complex 2m x 2m model [[A1, -conj A2], [A2, conj A1]] for A = A1 + j A2.

    H^m = C^m + j C^m as a right C-module; left multiplication is C-linear.
    """
    ent = {}
    for (i, j), (a, b, c, d) in A.items():
        a1 = Scalar(a, b)
        a2 = Scalar(c, -d)
        ent[(i, j)] = a1
        ent[(m + i, m + j)] = a1.conjugate()
        ent[(m + i, j)] = a2
        ent[(i, m + j)] = -a2.conjugate()
    return Matrix.from_dict(2 * m, 2 * m, {k: v for k, v in ent.items() if v})

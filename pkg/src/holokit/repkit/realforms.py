"""Real structures on complex representations of real Lie algebras."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..exactmat import I, Matrix, Subspace, rank_nullspace, realify_block
from ..liecore import centralizer_in
from ..liecore.modules import restrict
from .factors import FactorRep

__all__ = ["NoRealStructure", "antilinear_commutant", "real_structure", "rational_sqrt", "two_squares"]


class NoRealStructure(ValueError):
    pass


def _conj_real(N: int) -> Matrix:
    """Complex conjugation on R^{2N} (interleaved coordinates)."""
    return Matrix.from_dict(2 * N, 2 * N, {(k, k): (1 if k % 2 == 0 else -1) for k in range(2 * N)})


def antilinear_commutant(images, N: int) -> list[Matrix]:
    """Real 2N x 2N matrices of antilinear maps commuting with the images."""
    K = _conj_real(N)
    basis = []
    for i in range(N):
        for j in range(N):
            basis.append(realify_block(Matrix.unit(N, i, j)) @ K)
            basis.append(realify_block(Matrix.unit(N, i, j, I)) @ K)
    ops = sorted((realify_block(X) for X in images), key=lambda g: g.nnz())
    return centralizer_in(basis, ops, 2 * N)


def rational_sqrt(r: Fraction) -> Fraction | None:
    if r < 0:
        return None
    a, b = r.numerator, r.denominator
    sa, sb = isqrt(a), isqrt(b)
    if sa * sa == a and sb * sb == b:
        return Fraction(sa, sb)
    return None


def two_squares(r: Fraction, bound: int = 200) -> tuple[Fraction, Fraction] | None:
    """Rationals (x, y) with x^2 + y^2 = r, by a small search."""
    for d in range(1, bound):
        t = r * d * d
        if t.denominator != 1:
            continue
        t = t.numerator
        for x in range(isqrt(t) + 1):
            y2 = t - x * x
            y = isqrt(y2)
            if y * y == y2:
                return Fraction(x, d), Fraction(y, d)
    return None


def real_structure(rep: FactorRep) -> FactorRep:
    """The real form eta^R of a complex representation with a real structure.

    An antilinear commutant element R has R^2 = r (a real scalar); r > 0 and
    a sum of two rational squares yields sigma with sigma^2 = 1 over Q(i),
    and the fixed space of sigma is the real form.
    """
    N = rep.dim
    sol = antilinear_commutant(rep.images, N)
    if not sol:
        raise NoRealStructure("no antilinear intertwiner")
    R = sol[0]
    R2 = R @ R
    r = R2[0, 0].re
    if R2 != Matrix.identity(2 * N, r):
        raise NoRealStructure("antilinear intertwiner does not square to a scalar")
    if r <= 0:
        raise NoRealStructure("quaternionic structure (R^2 < 0)")
    s = rational_sqrt(r)
    if s is not None:
        sigma = R.scale(1 / s)
    else:
        ab = two_squares(r)
        if ab is None:
            raise NoRealStructure(f"cannot normalise R^2 = {r} over Q(i)")
        C = realify_block(Matrix.identity(N, ab[0] + ab[1] * I))
        sigma = (C @ R).scale(1 / r)
    _, fixed = rank_nullspace(sigma - Matrix.identity(2 * N))
    if fixed.dim != N:
        raise NoRealStructure("fixed space has the wrong dimension")
    imgs = restrict([realify_block(X) for X in rep.images], fixed)
    return FactorRep("R", N, imgs)

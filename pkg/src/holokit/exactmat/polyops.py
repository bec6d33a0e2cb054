"""Minimal polynomials and their factorisation for rational matrices."""
from __future__ import annotations

from fractions import Fraction

import flint
import sympy

from .matrix import Matrix

__all__ = [
    "to_flint",
    "minpoly",
    "charpoly",
    "factor",
    "rational_roots",
    "poly_at",
    "count_real_roots",
    "idempotent_polys",
]


def to_flint(m: Matrix) -> flint.fmpq_mat:
    if not m.is_real():
        raise ValueError("rational matrix expected")
    out = flint.fmpq_mat(m.rows, m.cols)
    for i, r in m.re.items():
        for j, v in r.items():
            v = Fraction(v)
            out[i, j] = flint.fmpq(v.numerator, v.denominator)
    return out


def _frac(q) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def minpoly(m: Matrix) -> flint.fmpq_poly:
    return to_flint(m).minpoly()


def charpoly(m: Matrix) -> flint.fmpq_poly:
    return to_flint(m).charpoly()


def factor(p: flint.fmpq_poly) -> list[tuple[flint.fmpq_poly, int]]:
    """Monic irreducible factors with multiplicities."""
    _, facs = p.factor()
    out = []
    for f, e in facs:
        lc = f.leading_coefficient()
        out.append((f / lc, e))
    return out


def rational_roots(p: flint.fmpq_poly) -> list[Fraction]:
    return sorted(_frac(-f.coeffs()[0]) for f, _ in factor(p) if f.degree() == 1)


def poly_at(p: flint.fmpq_poly, m: Matrix) -> Matrix:
    """Horner evaluation of ``p`` at a square matrix."""
    n = m.rows
    coeffs = [_frac(c) for c in p.coeffs()]
    acc = Matrix.zeros(n)
    for c in reversed(coeffs):
        acc = acc @ m
        if c:
            acc = acc + Matrix.identity(n, c)
    return acc


def count_real_roots(p: flint.fmpq_poly) -> int:
    """Number of distinct real roots (Sturm sequence via sympy)."""
    x = sympy.Symbol("x")
    coeffs = [sympy.Rational(int(c.p), int(c.q)) for c in p.coeffs()]
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="QQ")
    return int(poly.sqf_part().count_roots())


def idempotent_polys(mp: flint.fmpq_poly) -> list[tuple[flint.fmpq_poly, flint.fmpq_poly]]:
    """Split ``mp`` into coprime prime-power parts ``q_k`` and polynomials
    ``e_k`` with ``e_k = 1 mod q_k`` and ``e_k = 0 mod q_l`` (l != k).

    Evaluated at a matrix with minimal polynomial ``mp``, the ``e_k`` are the
    primary idempotents.
    """
    parts = [(f ** e, f) for f, e in factor(mp)]
    out = []
    for q, f in parts:
        rest = mp // q
        g, s, t = rest.xgcd(q)
        # s*rest + t*q = g, g a nonzero constant
        e = (s * rest) / g.coeffs()[0]
        e = e % mp
        out.append((f, e))
    return out

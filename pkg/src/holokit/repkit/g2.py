"""G2 as the derivation algebra of the octonions or the split octonions."""
from __future__ import annotations

from fractions import Fraction

from ..exactmat import Matrix, linalg
from ..liecore import LinRep
from .quaternion import qconj, qmul

__all__ = ["octonion_mul", "derivations", "make_g2", "g2_factor"]


def octonion_mul(x, y, gamma: int = -1):
    """Cayley-Dickson doubling of H: (a,b)(c,d) = (ac + gamma d*b, da + b c*).

    gamma = -1 gives the division octonions, gamma = +1 the split octonions.
    """
    a, b = tuple(x[:4]), tuple(x[4:])
    c, d = tuple(y[:4]), tuple(y[4:])
    p = tuple(s + gamma * t for s, t in zip(qmul(a, c), qmul(qconj(d), b)))
    q = tuple(s + t for s, t in zip(qmul(d, a), qmul(b, qconj(c))))
    return p + q


def _unit(k):
    return tuple(1 if i == k else 0 for i in range(8))


def derivations(gamma: int) -> list[Matrix]:
    """Basis of Der(O) restricted to Im O = span(e_1..e_7), as 7x7 matrices."""
    # unknown D[r][c] (r, c in 1..7) at index (r-1)*7 + (c-1); D e_c = sum_r D[r][c] e_r
    prod = {(i, j): octonion_mul(_unit(i), _unit(j), gamma) for i in range(8) for j in range(8)}
    eqs = []
    for i in range(1, 8):
        for j in range(1, 8):
            # D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0, coordinate t
            rows = [dict() for _ in range(8)]
            for k, coef in enumerate(prod[(i, j)]):
                if coef and k > 0:
                    for r in range(1, 8):
                        idx = (r - 1) * 7 + (k - 1)
                        rows[r][idx] = rows[r].get(idx, 0) + coef
            for r in range(1, 8):
                idx = (r - 1) * 7 + (i - 1)
                for t, coef in enumerate(prod[(r, j)]):
                    if coef:
                        rows[t][idx] = rows[t].get(idx, 0) - coef
                idx = (r - 1) * 7 + (j - 1)
                for t, coef in enumerate(prod[(i, r)]):
                    if coef:
                        rows[t][idx] = rows[t].get(idx, 0) - coef
            eqs.extend({k: Fraction(v) for k, v in r.items() if v} for r in rows)
    ker = linalg.nullspace(eqs, 49)
    return [Matrix.from_vec(v, 7) for v in ker]


def g2_factor(form: str):
    from .factors import Factor

    if form not in ("split", "compact"):
        raise ValueError("form must be 'split' or 'compact'")
    gamma = 1 if form == "split" else -1
    return Factor("G2^1" if form == "split" else "G2", "R", 7, derivations(gamma))


def make_g2(form: str) -> LinRep:
    fac = g2_factor(form)
    return LinRep(7, fac.basis, meta={"family": "g2", "form": form}, name=fac.name)

"""Spin and half-spin representations through a Fock space.

V carries a symmetric form B; a Witt basis e_i, f_i (and u in odd
dimension) with B(e_i, f_j) = delta_ij, B(u, u) = 1 is chosen over Q(i).
On Lambda(C^k): gamma(e_i) = a_i^+, gamma(f_i) = 2 a_i, gamma(u) = parity,
so that {gamma(v), gamma(w)} = 2 B(v, w).  For X in so(V, B),
rho(X) = 1/8 sum_k [gamma(X b_k), gamma(b^k)] over the Witt basis and its dual.
"""
from __future__ import annotations

from fractions import Fraction

from ..exactmat import I, Matrix, Scalar
from .factors import Factor, FactorRep
from . import quaternion as Q

__all__ = ["witt_basis", "fock_operators", "SpinModel", "spin_rep", "half_spin_rep", "complex_model"]


def _vec(n, items):
    v = {}
    for k, s in items:
        s = Scalar.coerce(s)
        if s:
            v[k] = v.get(k, Scalar(0)) + s
    return v


def witt_basis(form: Matrix):
    """Witt basis for a diagonal form with entries +-1.

    Returns (es, fs, u) as sparse vectors over Q(i); u is None in even dimension.
    """
    n = form.rows
    signs = [form[i, i].re for i in range(n)]
    if any(s not in (1, -1) for s in signs) or form.nnz() != n:
        raise ValueError("diagonal +-1 form expected")
    es, fs = [], []
    half = Fraction(1, 2)
    for a in range(0, n - 1, 2):
        b = a + 1
        sa, sb = signs[a], signs[b]
        if sa == sb:
            es.append(_vec(n, [(a, half), (b, Scalar(0, half))]))
            fs.append(_vec(n, [(a, sa), (b, Scalar(0, -sa))]))
        else:
            # sa = -sb: e = (x_a + x_b)/2, f = sa (x_a - x_b)
            es.append(_vec(n, [(a, half), (b, half)]))
            fs.append(_vec(n, [(a, sa), (b, -sa)]))
    u = None
    if n % 2:
        s = signs[-1]
        u = _vec(n, [(n - 1, 1 if s == 1 else I)])
    return es, fs, u


def _B(form, v, w):
    acc = Scalar(0)
    for i, x in v.items():
        for j, y in w.items():
            b = form[i, j]
            if b:
                acc = acc + x * y * b
    return acc


def fock_operators(k: int):
    """Creation, annihilation and parity operators on Lambda(C^k) (basis = bitmasks)."""
    N = 1 << k
    cre, ann = [], []
    for i in range(k):
        ce, ae = {}, {}
        for S in range(N):
            sign = -1 if bin(S & ((1 << i) - 1)).count("1") % 2 else 1
            if S >> i & 1:
                ae[(S ^ (1 << i), S)] = sign
            else:
                ce[(S | (1 << i), S)] = sign
        cre.append(Matrix.from_dict(N, N, ce))
        ann.append(Matrix.from_dict(N, N, ae))
    par = Matrix.from_dict(N, N, {(S, S): (-1 if bin(S).count("1") % 2 else 1) for S in range(N)})
    return cre, ann, par


class SpinModel:
    """Clifford data for (V, B) with a chosen Witt basis."""

    def __init__(self, form: Matrix):
        self.form = form
        self.n = form.rows
        self.es, self.fs, self.u = witt_basis(form)
        self.k = len(self.es)
        self.cre, self.ann, self.par = fock_operators(self.k)

    def gamma(self, v: dict) -> Matrix:
        N = 1 << self.k
        acc = Matrix.zeros(N)
        for i in range(self.k):
            a = _B(self.form, v, self.fs[i])
            if a:
                acc = acc + self.cre[i].scale(a)
            b = _B(self.form, v, self.es[i])
            if b:
                acc = acc + self.ann[i].scale(b * 2)
        if self.u is not None:
            c = _B(self.form, v, self.u)
            if c:
                acc = acc + self.par.scale(c)
        return acc

    def _duals(self):
        pairs = [(e, f) for e, f in zip(self.es, self.fs)] + [(f, e) for e, f in zip(self.es, self.fs)]
        if self.u is not None:
            pairs.append((self.u, self.u))
        return pairs

    def rho(self, X: Matrix) -> Matrix:
        N = 1 << self.k
        acc = Matrix.zeros(N)
        for b, bd in self._duals():
            Xb = {}
            for (r, c), s in X.entries().items():
                x = b.get(c)
                if x:
                    Xb[r] = Xb.get(r, Scalar(0)) + s * x
            Xb = {r: s for r, s in Xb.items() if s}
            if not Xb:
                continue
            acc = acc + self.gamma(Xb).bracket(self.gamma(bd))
        return acc.scale(Fraction(1, 8))

    def parity_indices(self, even: bool):
        return [S for S in range(1 << self.k) if (bin(S).count("1") % 2 == 0) == even]


def complex_model(fac: Factor) -> tuple[list[Matrix], Matrix]:
    """Complex matrices of the real basis and the preserved symmetric form."""
    if fac.field == "H":
        m = fac.m
        return [Q.to_complex(A, m) for A in fac.real_basis()], Matrix.identity(2 * m)
    form = fac.meta.get("form")
    if form is None:
        raise ValueError(f"{fac.name} has no orthogonal form")
    return fac.real_basis(), form


def spin_rep(fac: Factor) -> FactorRep:
    mats, form = complex_model(fac)
    model = SpinModel(form)
    return FactorRep("C", 1 << model.k, [model.rho(X) for X in mats])


def half_spin_rep(fac: Factor, even: bool = True) -> FactorRep:
    mats, form = complex_model(fac)
    if form.rows % 2:
        raise ValueError("half-spin needs even dimension")
    model = SpinModel(form)
    idx = model.parity_indices(even)
    return FactorRep("C", len(idx), [model.rho(X).submatrix(idx, idx) for X in mats])

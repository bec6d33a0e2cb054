"""The classical real and complex Lie algebras as factors with defining representations."""
from __future__ import annotations

from fractions import Fraction

from ..exactmat import I, Matrix, Scalar
from ..liecore import LinRep
from . import quaternion as Q
from .factors import Factor, FactorRep, direct_sum_linrep, tensor

__all__ = ["classical_factor", "can", "make_classical", "FAMILIES", "InvalidParameters",
           "center_R", "center_C", "eta"]


class InvalidParameters(ValueError):
    pass


E = Matrix.unit


def eta(p: int, q: int) -> list[int]:
    return [1] * p + [-1] * q


def _gl(m):
    return [E(m, i, j) for i in range(m) for j in range(m)]


def _sl(m):
    out = [E(m, i, j) for i in range(m) for j in range(m) if i != j]
    out += [E(m, i, i) - E(m, i + 1, i + 1) for i in range(m - 1)]
    return out


def _antisym(m):
    return [E(m, i, j) - E(m, j, i) for i in range(m) for j in range(i + 1, m)]


def _so_pq(p, q):
    et = eta(p, q)
    return [E(m := p + q, i, j).scale(et[i]) - E(m, j, i).scale(et[j])
            for i in range(p + q) for j in range(i + 1, p + q)]


def _omega(m):
    n = 2 * m
    ent = {}
    for i in range(m):
        ent[(i, m + i)] = 1
        ent[(m + i, i)] = -1
    return Matrix.from_dict(n, n, ent)


def _sp(m):
    n = 2 * m
    W = _omega(m)
    out = []
    for i in range(n):
        for j in range(i, n):
            S = E(n, i, j) + E(n, j, i) if i != j else E(n, i, i)
            out.append(W @ S)
    return out


def _u_pq(p, q, special):
    """eta * (anti-Hermitian); the diagonal part is imaginary and commutes with eta."""
    n = p + q
    et = eta(p, q)
    D = Matrix.from_dict(n, n, {(i, i): et[i] for i in range(n)})
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(D @ (E(n, i, j) - E(n, j, i)))
            out.append(D @ (E(n, i, j, I) + E(n, j, i, I)))
    if special:
        out += [E(n, i, i, I) - E(n, i + 1, i + 1, I) for i in range(n - 1)]
    else:
        out += [E(n, i, i, I) for i in range(n)]
    return out


def _qgl(m):
    return [Q.qgrid_unit(i, j, u) for i in range(m) for j in range(m) for u in Q.UNITS]


def _qsl(m):
    out = [Q.qgrid_unit(i, j, u) for i in range(m) for j in range(m) if i != j for u in Q.UNITS]
    out += [Q.qgrid_unit(i, i, u) for i in range(m) for u in Q.UNITS[1:]]
    out += [Q.qgrid_add(Q.qgrid_unit(i, i), Q.qgrid_unit(i + 1, i + 1), -1) for i in range(m - 1)]
    return out


def _qherm(m, anti):
    """Quaternionic Hermitian (or anti-Hermitian) matrices."""
    out = []
    diag_units = Q.UNITS[1:] if anti else Q.UNITS[:1]
    for i in range(m):
        for u in diag_units:
            out.append(Q.qgrid_unit(i, i, u))
        for j in range(i + 1, m):
            for u in Q.UNITS:
                X = Q.qgrid_unit(i, j, u)
                Y = Q.qgrid_unit(j, i, Q.qconj(u))
                out.append(Q.qgrid_add(X, Y, -1 if anti else 1))
    return out


def _qdiag(m, vals):
    return {(i, i): (Fraction(v), Fraction(0), Fraction(0), Fraction(0)) for i, v in enumerate(vals)}


def _so_H(m):
    jI = {(i, i): Q.QJ for i in range(m)}
    return [Q.qgrid_mul(jI, H) for H in _qherm(m, anti=False)]


def _sp_pq(p, q):
    D = _qdiag(p + q, eta(p, q))
    return [Q.qgrid_mul(D, A) for A in _qherm(p + q, anti=True)]


FAMILIES = {
    # name: (params, validator, builder)
    "gl_R": ("m",), "sl_R": ("m",), "gl_C": ("m",), "sl_C": ("m",),
    "gl_H": ("m",), "sl_H": ("m",), "so_pq": ("p", "q"), "so_C": ("m",),
    "so_H": ("m",), "sp_R": ("m",), "sp_C": ("m",), "sp_pq": ("p", "q"),
    "su_pq": ("p", "q"), "u_pq": ("p", "q"),
}

_LABEL = {
    "gl_R": "gl({m},R)", "sl_R": "sl({m},R)", "gl_C": "gl({m},C)", "sl_C": "sl({m},C)",
    "gl_H": "gl({m},H)", "sl_H": "sl({m},H)", "so_pq": "so({p},{q})", "so_C": "so({m},C)",
    "so_H": "so({m},H)", "sp_R": "sp({m},R)", "sp_C": "sp({m},C)", "sp_pq": "sp({p},{q})",
    "su_pq": "su({p},{q})", "u_pq": "u({p},{q})",
}


def _check(family, params):
    if family not in FAMILIES:
        raise InvalidParameters(f"unknown family {family!r}")
    need = FAMILIES[family]
    for k in need:
        if k not in params:
            raise InvalidParameters(f"{family} needs parameter {k}")
        v = params[k]
        if not isinstance(v, int) or v < 0:
            raise InvalidParameters(f"parameter {k} must be a non-negative integer")
    if "m" in need and params["m"] < 1:
        raise InvalidParameters("m must be at least 1")
    if "p" in need:
        p, q = params["p"], params["q"]
        if q > p:
            raise InvalidParameters("the lists require p >= q")
        if p + q < 1:
            raise InvalidParameters("p + q must be positive")


def classical_factor(family: str, **params) -> Factor:
    _check(family, params)
    m = params.get("m")
    p, q = params.get("p"), params.get("q")
    name = _LABEL[family].format(**params)
    if family == "gl_R":
        return Factor(name, "R", m, _gl(m))
    if family == "sl_R":
        return Factor(name, "R", m, _sl(m))
    if family == "gl_C":
        return Factor(name, "C", m, _gl(m), complex_alg=True)
    if family == "sl_C":
        return Factor(name, "C", m, _sl(m), complex_alg=True)
    if family == "gl_H":
        return Factor(name, "H", m, _qgl(m))
    if family == "sl_H":
        return Factor(name, "H", m, _qsl(m))
    if family == "so_pq":
        return Factor(name, "R", p + q, _so_pq(p, q),
                      meta={"form": Matrix.from_dict(p + q, p + q, {(i, i): e for i, e in enumerate(eta(p, q))})})
    if family == "so_C":
        return Factor(name, "C", m, _antisym(m), complex_alg=True, meta={"form": Matrix.identity(m)})
    if family == "so_H":
        return Factor(name, "H", m, _so_H(m))
    if family == "sp_R":
        return Factor(name, "R", 2 * m, _sp(m), meta={"omega": _omega(m)})
    if family == "sp_C":
        return Factor(name, "C", 2 * m, _sp(m), complex_alg=True, meta={"omega": _omega(m)})
    if family == "sp_pq":
        return Factor(name, "H", p + q, _sp_pq(p, q))
    if family == "su_pq":
        return Factor(name, "C", p + q, _u_pq(p, q, True))
    if family == "u_pq":
        return Factor(name, "C", p + q, _u_pq(p, q, False))
    raise AssertionError(family)


def center_R(name="R") -> Factor:
    return Factor(name, "R", 1, [Matrix.identity(1)])


def center_C(name="C") -> Factor:
    return Factor(name, "C", 1, [Matrix.identity(1)], complex_alg=True)


def can(fac: Factor) -> FactorRep:
    """Defining representation; quaternionic spaces are realified with J = right i."""
    if fac.field == "H":
        m = fac.m
        return FactorRep("R", 4 * m, [Q.to_real(A, m) for A in fac.real_basis()],
                         J=Q.right_scalar(Q.QI, m))
    return FactorRep(fac.field, fac.m, fac.real_basis())


def make_classical(family: str, **params) -> LinRep:
    """The classical algebra on its canonical space (realified, J recorded)."""
    fac = classical_factor(family, **params)
    return direct_sum_linrep([fac], [tensor((0, can(fac)))], name=fac.name,
                             meta={"family": family, **{k: str(v) for k, v in params.items()}})

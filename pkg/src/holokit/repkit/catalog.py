"""Machine-readable catalog of the holonomy lists and the irreducible Type-II families."""
from __future__ import annotations

import warnings
from contextvars import ContextVar
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from ..exactmat import I, Matrix, Scalar, format_rational, parse_rational
from ..exactmat.linalg import nullspace
from ..liecore import LinRep, derived_and_split
from . import quaternion as Q
from .classical import can, center_C, center_R, classical_factor
from .factors import (Factor, FactorRep, Piece, direct_sum_linrep, dual, ext_power, realify_rep,
                      restrict_rep, scaled, sym_form_action, sym_power, tensor, trivial,
                      contraction_kernel)
from .g2 import g2_factor
from .realforms import real_structure
from .spin import half_spin_rep, spin_rep

__all__ = [
    "CatalogEntry", "ConditionViolated", "MetadataOnly", "UnknownEntry",
    "CATALOG", "get_entry", "construct_entry", "enumerate_catalog", "parse_param",
    "format_param", "manifest", "space_dim_of", "TYPE2_BASES", "PARAM_SAMPLES",
]


class ConditionViolated(ValueError):
    pass


class MetadataOnly(Exception):
    pass


class UnknownEntry(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    list_id: str
    typ: str                      # "I", "II", "III", "IV", "V"
    part: str                     # "A", "B", "C"
    h: str
    rho: str
    dim_field: str                # "C" or "R"
    dim_text: str
    params: tuple
    conditions: str
    dim: Callable = field(repr=False, compare=False, default=None)
    check: Callable = field(repr=False, compare=False, default=None)
    build: Callable | None = field(repr=False, compare=False, default=None)
    summands: Callable = field(repr=False, compare=False, default=None)
    flags: dict = field(default_factory=dict, compare=False)

    @property
    def metadata_only(self) -> bool:
        return self.build is None

    @property
    def real_class(self) -> str:
        return {"A": "TotallyComplex", "B": "TotallyReal", "C": "RealComplex"}[self.part]

    def space_dim(self, params) -> int:
        d = self.dim(**params)
        return 2 * d if self.dim_field == "C" else d

    def to_manifest(self) -> dict:
        return {
            "id": self.list_id, "type": self.typ, "part": self.part, "h": self.h,
            "rho": self.rho, "dim_field": self.dim_field, "dim": self.dim_text,
            "params": list(self.params), "conditions": self.conditions,
            "real_class": self.real_class, "metadata_only": self.metadata_only,
            "flags": {k: v for k, v in sorted(self.flags.items())},
        }


# -- parameters ---------------------------------------------------------------

PARAM_SAMPLES = {
    "lam": [Scalar(-1), Scalar(0, 1)],
    "mu": [Fraction(-1), Fraction(1, 2)],
    "theta": [(Fraction(1), Fraction(0)), (Fraction(3, 5), Fraction(4, 5)), (Fraction(0), Fraction(1))],
}
INT_PARAMS = ("m", "n", "p", "q")


def parse_param(name: str, text: str):
    text = text.strip()
    if name in INT_PARAMS:
        try:
            return int(text)
        except ValueError:
            raise ConditionViolated(f"{name} must be an integer, got {text!r}") from None
    if name == "lam":
        return Scalar.parse(text)
    if name == "mu":
        return parse_rational(text)
    if name == "theta":
        if text == "0":
            return (Fraction(1), Fraction(0))
        if text in ("pi/2", "π/2"):
            return (Fraction(0), Fraction(1))
        c, s = text.split(",")
        return (parse_rational(c), parse_rational(s))
    if name == "base":
        return text
    raise ConditionViolated(f"unknown parameter {name!r}")


def format_param(name: str, v) -> str:
    if name == "lam":
        return str(Scalar.coerce(v))
    if name == "mu":
        return format_rational(Fraction(v))
    if name == "theta":
        c, s = v
        if (c, s) == (1, 0):
            return "0"
        if (c, s) == (0, 1):
            return "pi/2"
        return f"{format_rational(c)},{format_rational(s)}"
    return str(v)


def _theta_ok(t):
    c, s = t
    return c * c + s * s == 1 and c >= 0 and s >= 0


# -- piece helpers ------------------------------------------------------------

_SEMISIMPLE = ContextVar("semisimple", default=False)


def derived_combos(fac: Factor) -> list[dict]:
    """Real-basis combinations spanning [f, f].

    The centre of every factor acts by scalars on its defining space, so
    [f, f] is the trace-free part; a reductive factor of dimension <= 2 is
    abelian.
    """
    if fac.real_dim <= 2:
        return []
    rows = [{}, {}]
    for a, X in enumerate(can(fac).images):
        t = Scalar.coerce(X.trace())
        if t.re:
            rows[0][a] = t.re
        if t.im:
            rows[1][a] = t.im
    return nullspace(rows, fac.real_dim)


def _build(factors, pieces, **kw):
    if _SEMISIMPLE.get():
        kw["combos"] = [derived_combos(f) for f in factors]
    return direct_sum_linrep(factors, pieces, **kw)


def _complexified(rep: FactorRep) -> FactorRep:
    return FactorRep("C", rep.dim, rep.images)


def _sigma(theta) -> FactorRep:
    c, s = theta
    return FactorRep("C", 1, [Matrix.identity(1, Scalar(c, s))])


def _qtensor(i1: int, f1: Factor, i2: int, f2: Factor) -> Piece:
    """H^r (x)_H H^s realised on quaternionic r x s matrices: (A, B).M = AM - MB."""
    r, s = f1.m, f2.m
    units = [(i, j, t) for i in range(r) for j in range(s) for t in range(4)]
    index = {u: k for k, u in enumerate(units)}
    d = len(units)

    def mat(op):
        ent = {}
        for k, (i, j, t) in enumerate(units):
            img = op(Q.qgrid_unit(i, j, Q.UNITS[t]))
            for (a, b), qv in img.items():
                for tt in range(4):
                    if qv[tt]:
                        key = (index[(a, b, tt)], k)
                        ent[key] = ent.get(key, 0) + qv[tt]
        return Matrix.from_dict(d, d, ent)

    im1 = [mat(lambda M, A=A: Q.qgrid_mul(A, M)) for A in f1.real_basis()]
    im2 = [mat(lambda M, B=B: Q.qgrid_add({}, Q.qgrid_mul(M, B), -1)) for B in f2.real_basis()]
    return Piece("R", d, {i1: im1, i2: im2})


def _center_on_H(idx: int, coeffs, hrep: FactorRep) -> FactorRep:
    """Central factor acting by a I + b J on a quaternionic space (J = right i)."""
    n = hrep.dim
    return FactorRep("R", n, [Matrix.identity(n, a) + hrep.J.scale(b) for a, b in coeffs], hrep.J)


def _with_center_on_H(hfac: Factor, coeffs, center: Factor) -> LinRep:
    hrep = can(hfac)
    crep = _center_on_H(0, coeffs, hrep)
    piece = Piece("R", hrep.dim, {0: crep.images, 1: hrep.images}, hrep.J)
    return _build([center, hfac], [piece])


def _ext3_0(fac: Factor) -> FactorRep:
    rep = can(fac)
    e3 = ext_power(rep, 3)
    ker = contraction_kernel(e3, fac.meta["omega"], rep.dim)
    return restrict_rep(e3, ker)


# -- entry builders -------------------------------------------------------------

F = classical_factor


def b_IA1(m):
    f = F("gl_C", m=m)
    return _build([f], [tensor((0, can(f)))])


def b_IA2(m):
    c, f = center_C(), F("so_C", m=m)
    return _build([c, f], [tensor((0, can(c)), (1, can(f)))])


def b_IA3(p, q):
    c, a, b = center_C(), F("sl_C", m=p), F("sl_C", m=q)
    return _build([c, a, b], [tensor((0, can(c)), (1, can(a)), (2, can(b)))])


def b_IA4(m):
    f = F("gl_C", m=m)
    return _build([f], [tensor((0, sym_power(can(f), 2)))])


def b_IA5(m):
    f = F("gl_C", m=m)
    return _build([f], [tensor((0, ext_power(can(f), 2)))])


def b_IA6():
    c, f = center_C(), F("so_C", m=10)
    return _build([c, f], [tensor((0, can(c)), (1, half_spin_rep(f)))])


def b_IB1a(n):
    f = F("gl_R", m=n)
    return _build([f], [tensor((0, can(f)))])


def b_IB2a(p, q):
    c, f = center_R(), F("so_pq", p=p, q=q)
    return _build([c, f], [tensor((0, can(c)), (1, can(f)))])


def b_IB3a(p, q):
    c, a, b = center_R(), F("sl_R", m=p), F("sl_R", m=q)
    return _build([c, a, b], [tensor((0, can(c)), (1, can(a)), (2, can(b)))])


def b_IB3b(p):
    c, f = center_R(), F("sl_C", m=p)
    r = realify_rep(can(f))
    herm = sym_form_action(r.images, [r.J], symmetric=True)
    return _build([c, f], [tensor((0, can(c)), (1, herm))])


def b_IB3c(p, q):
    c, a, b = center_R(), F("sl_H", m=p), F("sl_H", m=q)
    return _build([c, a, b], [tensor((0, can(c)), _qtensor(1, a, 2, b))])


def b_IB4a(m):
    f = F("gl_R", m=m)
    return _build([f], [tensor((0, sym_power(can(f), 2)))])


def _quaternionic_forms(m, symmetric):
    f = F("gl_H", m=m)
    rights = [Q.right_scalar(u, m) for u in Q.UNITS[1:]]
    return f, sym_form_action(can(f).images, rights, symmetric=symmetric)


def b_IB4b(m):
    f, rep = _quaternionic_forms(m, symmetric=False)
    return _build([f], [tensor((0, rep))])


def b_IB5a(m):
    f = F("gl_R", m=m)
    return _build([f], [tensor((0, ext_power(can(f), 2)))])


def b_IB5b(m):
    f, rep = _quaternionic_forms(m, symmetric=True)
    return _build([f], [tensor((0, rep))])


def _half_spin_real(fac):
    for even in (True, False):
        try:
            return real_structure(half_spin_rep(fac, even))
        except ValueError:
            continue
    raise ValueError(f"no half-spin of {fac.name} has a real structure")


def b_IB6(p, q):
    c, f = center_R(), F("so_pq", p=p, q=q)
    return _build([c, f], [tensor((0, can(c)), (1, _half_spin_real(f)))])


# List III-A


def b_IIIA1(m):
    f = F("sl_C", m=m)
    return _build([f], [tensor((0, can(f))), tensor((0, can(f)))])


def b_IIIA2(m, lam):
    c, f = center_C(), F("sl_C", m=m)
    return _build([c, f], [tensor((0, can(c)), (1, can(f))), tensor((0, scaled(can(c), lam)), (1, can(f)))])


def b_IIIA3(m):
    c1, c2, f = center_C("C1"), center_C("C2"), F("sl_C", m=m)
    return _build([c1, c2, f], [tensor((0, can(c1)), (1, trivial(c2, "C")), (2, can(f))),
                                tensor((0, trivial(c1, "C")), (1, can(c2)), (2, can(f)))])


def b_IIIA4(m):
    f = F("sl_C", m=m)
    return _build([f], [tensor((0, can(f))), tensor((0, dual(can(f))))])


def b_IIIA5(m):
    f = F("gl_C", m=m)
    return _build([f], [tensor((0, can(f))), tensor((0, dual(can(f))))])


def b_IIIA6(m):
    f = F("sp_C", m=m)
    return _build([f], [tensor((0, can(f))), tensor((0, can(f)))])


def b_IIIA7(m):
    f, g = F("sp_C", m=m), F("sp_C", m=1)
    return _build([f, g], [tensor((0, can(f)), (1, can(g)))])


# Rows 8 and 10 carry a fixed gamma(c): the center acts by c on the first
# summand and by 1 on the second, i.e. by 1 and 1/c after rescaling. With c on
# the second summand K(h) no longer spans h.

def b_IIIA8(p, q):
    c, a, b = center_C(), F("sl_C", m=p), F("sl_C", m=q)
    lam = Fraction(p + q, p)
    return _build([c, a, b], [tensor((0, can(c)), (1, trivial(a, "C")), (2, can(b))),
                              tensor((0, scaled(can(c), lam)), (1, can(a)), (2, can(b)))])


def b_IIIA9(m):
    c1, c2, a, b = center_C("C1"), center_C("C2"), F("sl_C", m=m), F("sl_C", m=2)
    return _build([c1, c2, a, b],
                  [tensor((0, can(c1)), (1, trivial(c2, "C")), (2, trivial(a, "C")), (3, can(b))),
                   tensor((0, trivial(c1, "C")), (1, can(c2)), (2, can(a)), (3, can(b)))])


def b_IIIA10(m):
    c, f = center_C(), F("sl_C", m=m)
    return _build([c, f], [tensor((0, can(c)), (1, can(f))),
                           tensor((0, scaled(can(c), Fraction(2))), (1, sym_power(can(f), 2)))])


def b_IIIA11():
    c1, c2, f = center_C("C1"), center_C("C2"), F("sl_C", m=2)
    return _build([c1, c2, f], [tensor((0, can(c1)), (1, trivial(c2, "C")), (2, can(f))),
                                tensor((0, trivial(c1, "C")), (1, can(c2)), (2, sym_power(can(f), 2)))])


# List III-B


def b_IIIB2a(m, mu):
    c, f = center_R(), F("sl_R", m=m)
    return _build([c, f], [tensor((0, can(c)), (1, can(f))), tensor((0, scaled(can(c), mu)), (1, can(f)))])


def b_IIIB3a(m):
    c1, c2, f = center_R("R1"), center_R("R2"), F("sl_R", m=m)
    return _build([c1, c2, f], [tensor((0, can(c1)), (1, trivial(c2)), (2, can(f))),
                                tensor((0, trivial(c1)), (1, can(c2)), (2, can(f)))])


def b_IIIB4a(m):
    f = F("sl_R", m=m)
    return _build([f], [tensor((0, can(f))), tensor((0, dual(can(f))))])


def b_IIIB5a(m):
    f = F("gl_R", m=m)
    return _build([f], [tensor((0, can(f))), tensor((0, dual(can(f))))])


def b_IIIB7a(m):
    f, g = F("sp_R", m=m), F("sp_R", m=1)
    return _build([f, g], [tensor((0, can(f)), (1, can(g)))])


def b_IIIB7b(p, q):
    f, g = F("sp_pq", p=p, q=q), F("sp_pq", p=1, q=0)
    return _build([f, g], [_qtensor(0, f, 1, g)])


def b_IIIB8a(p, q):
    c, a, b = center_R(), F("sl_R", m=p), F("sl_R", m=q)
    mu = Fraction(p + q, p)
    return _build([c, a, b], [tensor((0, can(c)), (1, trivial(a)), (2, can(b))),
                              tensor((0, scaled(can(c), mu)), (1, can(a)), (2, can(b)))])


def b_IIIB9a(m):
    c1, c2, a, b = center_R("R1"), center_R("R2"), F("sl_R", m=m), F("sl_R", m=2)
    return _build([c1, c2, a, b],
                  [tensor((0, can(c1)), (1, trivial(c2)), (2, trivial(a)), (3, can(b))),
                   tensor((0, trivial(c1)), (1, can(c2)), (2, can(a)), (3, can(b)))])


def b_IIIB10a(m):
    c, f = center_R(), F("sl_R", m=m)
    return _build([c, f], [tensor((0, can(c)), (1, can(f))),
                           tensor((0, scaled(can(c), Fraction(2))), (1, sym_power(can(f), 2)))])


def b_IIIB11a():
    c1, c2, f = center_R("R1"), center_R("R2"), F("sl_R", m=2)
    return _build([c1, c2, f], [tensor((0, can(c1)), (1, trivial(c2)), (2, can(f))),
                                tensor((0, trivial(c1)), (1, can(c2)), (2, sym_power(can(f), 2)))])


# List III-C


def b_IIIC1a(m):
    f = F("sl_R", m=m)
    return _build([f], [tensor((0, _complexified(can(f))))])


def b_IIIC1b(m):
    f = F("sl_H", m=m)
    return _build([f], [tensor((0, can(f)))])


def b_IIIC2b(m, theta):
    c, f = center_R(), F("sl_R", m=m)
    return _build([c, f], [tensor((0, _sigma(theta)), (1, can(f)))])


def b_IIIC2c(m, theta):
    return _with_center_on_H(F("sl_H", m=m), [theta], center_R())


def b_IIIC3b(m):
    c, f = center_C(), F("sl_R", m=m)
    return _build([c, f], [tensor((0, can(c)), (1, can(f)))])


def b_IIIC3c(m):
    return _with_center_on_H(F("sl_H", m=m), [(1, 0), (0, 1)], center_C())


def b_IIIC4b(p, q):
    f = F("su_pq", p=p, q=q)
    return _build([f], [tensor((0, can(f)))])


def b_IIIC5b(p, q):
    f = F("u_pq", p=p, q=q)
    return _build([f], [tensor((0, can(f)))])


def b_IIIC6a(m):
    f = F("sp_R", m=m)
    return _build([f], [tensor((0, _complexified(can(f))))])


def b_IIIC6b(p, q):
    f = F("sp_pq", p=p, q=q)
    return _build([f], [tensor((0, can(f)))])


# List IV


def b_IVA1(m):
    f = F("sp_C", m=m)
    return _build([f], [tensor((0, can(f)))])


def b_IVA2(m):
    f, g = F("so_C", m=m), F("sp_C", m=1)
    return _build([f, g], [tensor((0, can(f)), (1, can(g)))])


def b_IVA3():
    f = F("sp_C", m=1)
    return _build([f], [tensor((0, sym_power(can(f), 3)))])


def b_IVA4():
    f = F("sp_C", m=3)
    return _build([f], [tensor((0, _ext3_0(f)))])


def b_IVA5():
    f = F("sl_C", m=6)
    return _build([f], [tensor((0, ext_power(can(f), 3)))])


def b_IVA6():
    f = F("so_C", m=12)
    return _build([f], [tensor((0, half_spin_rep(f)))])


def b_IVB1a(m):
    f = F("sp_R", m=m)
    return _build([f], [tensor((0, can(f)))])


def b_IVB2a(p, q):
    f, g = F("so_pq", p=p, q=q), F("sp_R", m=1)
    return _build([f, g], [tensor((0, can(f)), (1, can(g)))])


def b_IVB2b(m):
    f, g = F("so_H", m=m), F("sp_pq", p=1, q=0)
    return _build([f, g], [_qtensor(0, f, 1, g)])


def b_IVB3a():
    f = F("sp_R", m=1)
    return _build([f], [tensor((0, sym_power(can(f), 3)))])


def b_IVB4a():
    f = F("sp_R", m=3)
    return _build([f], [tensor((0, _ext3_0(f)))])


def b_IVB5a():
    f = F("sl_R", m=6)
    return _build([f], [tensor((0, ext_power(can(f), 3)))])


def b_IVB5_su(p, q):
    f = F("su_pq", p=p, q=q)
    return _build([f], [tensor((0, real_structure(ext_power(can(f), 3))))])


def b_IVB6_so(p, q):
    f = F("so_pq", p=p, q=q)
    return _build([f], [tensor((0, _half_spin_real(f)))])


def b_IVB6c():
    f = F("so_H", m=6)
    return _build([f], [tensor((0, _half_spin_real(f)))])


# List V


def b_VA1():
    g = g2_factor("compact")
    f = Factor("G2^C", "C", 7, g.basis, complex_alg=True)
    return _build([f], [tensor((0, can(f)))])


def b_VA2():
    f = F("so_C", m=7)
    return _build([f], [tensor((0, spin_rep(f)))])


def b_VA3():
    c, f = center_C(), F("sl_C", m=2)
    return _build([c, f], [tensor((0, can(c)), (1, sym_power(can(f), 3)))])


def b_VA4():
    c, f = center_C(), F("sp_C", m=2)
    return _build([c, f], [tensor((0, can(c)), (1, can(f)))])


def b_VB1(form):
    f = g2_factor(form)
    return _build([f], [tensor((0, can(f)))])


def b_VB2(p, q):
    f = F("so_pq", p=p, q=q)
    return _build([f], [tensor((0, real_structure(spin_rep(f))))])


def b_VB3a():
    c, f = center_R(), F("sl_R", m=2)
    return _build([c, f], [tensor((0, can(c)), (1, sym_power(can(f), 3)))])


def b_VB4a():
    c, f = center_R(), F("sp_R", m=2)
    return _build([c, f], [tensor((0, can(c)), (1, can(f)))])


# -- the table ----------------------------------------------------------------

def _E(list_id, typ, part, h, rho, dim_field, dim_text, params, conditions, dim, check, build,
       summands=lambda **k: 1, **flags):
    return CatalogEntry(list_id, typ, part, h, rho, dim_field, dim_text, tuple(params), conditions,
                        dim, check, build, summands, flags)


def _pq(p, q):
    return p >= q >= 0


def _two(**k):
    return 2


_LISTS = [
    # List I-A
    _E("I-A:1", "I", "A", "gl(m,C)", "can", "C", "m", ["m"], "m >= 1",
       lambda m: m, lambda m: m >= 1, b_IA1, property_C=True),
    _E("I-A:2", "I", "A", "C + so(m,C)", "gamma (x)_C can", "C", "m", ["m"], "m >= 3",
       lambda m: m, lambda m: m >= 3, b_IA2, property_C=True),
    _E("I-A:3", "I", "A", "C + sl(p,C) + sl(q,C)", "gamma (x)_C can_p (x)_C can_q", "C", "p q", ["p", "q"],
       "p >= q >= 2, (p,q) != (2,2)", lambda p, q: p * q, lambda p, q: p >= q >= 2 and (p, q) != (2, 2),
       b_IA3, property_C=True),
    _E("I-A:4", "I", "A", "gl(m,C)", "Sym^2(can)", "C", "m(m+1)/2", ["m"], "m >= 3",
       lambda m: m * (m + 1) // 2, lambda m: m >= 3, b_IA4, property_C=True),
    _E("I-A:5", "I", "A", "gl(m,C)", "Ext^2(can)", "C", "m(m-1)/2", ["m"], "m >= 5",
       lambda m: m * (m - 1) // 2, lambda m: m >= 5, b_IA5, property_C=True),
    _E("I-A:6", "I", "A", "C + so(10,C)", "gamma (x)_C half-spin", "C", "16", [], "",
       lambda: 16, lambda: True, b_IA6, property_C=True),
    _E("I-A:7", "I", "A", "C + E6^C", "gamma (x)_C can", "C", "27", [], "",
       lambda: 27, lambda: True, None, property_C=True),
    # List I-B
    _E("I-B:1a", "I", "B", "gl(n,R)", "can", "R", "n", ["n"], "n >= 2",
       lambda n: n, lambda n: n >= 2, b_IB1a, property_C=True),
    _E("I-B:2a", "I", "B", "R + so(p,q)", "gamma (x) can", "R", "p+q", ["p", "q"], "p >= q >= 0, p+q >= 3",
       lambda p, q: p + q, lambda p, q: _pq(p, q) and p + q >= 3, b_IB2a, property_C=True),
    _E("I-B:3a", "I", "B", "R + sl(p,R) + sl(q,R)", "gamma (x) can_p (x) can_q", "R", "p q", ["p", "q"],
       "p >= q >= 2, (p,q) != (2,2)", lambda p, q: p * q, lambda p, q: p >= q >= 2 and (p, q) != (2, 2),
       b_IB3a, property_C=True),
    _E("I-B:3b", "I", "B", "R + sl(p,C)", "gamma (x) Herm(can_p)", "R", "p^2", ["p"], "p >= 3",
       lambda p: p * p, lambda p: p >= 3, b_IB3b, property_C=True),
    _E("I-B:3c", "I", "B", "R + sl(p,H) + sl(q,H)", "gamma (x) (can_p (x)_H can_q)", "R", "4 p q", ["p", "q"],
       "p >= q >= 1, (p,q) != (1,1)", lambda p, q: 4 * p * q, lambda p, q: p >= q >= 1 and (p, q) != (1, 1),
       b_IB3c, property_C=True),
    _E("I-B:4a", "I", "B", "gl(m,R)", "Sym^2(can)", "R", "m(m+1)/2", ["m"], "m >= 3",
       lambda m: m * (m + 1) // 2, lambda m: m >= 3, b_IB4a, property_C=True),
    _E("I-B:4b", "I", "B", "gl(m,H)", "Antiherm(can)", "R", "m(2m+1)", ["m"], "m >= 2",
       lambda m: m * (2 * m + 1), lambda m: m >= 2, b_IB4b, property_C=True),
    _E("I-B:5a", "I", "B", "gl(m,R)", "Ext^2(can)", "R", "m(m-1)/2", ["m"], "m >= 5",
       lambda m: m * (m - 1) // 2, lambda m: m >= 5, b_IB5a, property_C=True),
    _E("I-B:5b", "I", "B", "gl(m,H)", "Herm(can)", "R", "m(2m-1)", ["m"], "m >= 3",
       lambda m: m * (2 * m - 1), lambda m: m >= 3, b_IB5b, property_C=True),
    _E("I-B:6a", "I", "B", "R + so(5,5)", "gamma (x) half-spin^R", "R", "16", [], "",
       lambda: 16, lambda: True, lambda: b_IB6(5, 5), property_C=True),
    _E("I-B:6b", "I", "B", "R + so(9,1)", "gamma (x) half-spin^R", "R", "16", [], "",
       lambda: 16, lambda: True, lambda: b_IB6(9, 1), property_C=True),
    _E("I-B:7a", "I", "B", "R + E6^1", "gamma (x) can", "R", "27", [], "",
       lambda: 27, lambda: True, None, property_C=True),
    _E("I-B:7b", "I", "B", "R + E6^4", "gamma (x) can", "R", "27", [], "",
       lambda: 27, lambda: True, None, property_C=True),
    # List III-A
    _E("III-A:1", "III", "A", "sl(m,C)", "can + can", "C", "2m", ["m"], "m >= 2",
       lambda m: 2 * m, lambda m: m >= 2, b_IIIA1, _two),
    _E("III-A:2", "III", "A", "C + sl(m,C)", "(gamma (x)_C can) + (gamma(lam) (x)_C can)", "C", "2m",
       ["m", "lam"], "m >= 2", lambda m, lam: 2 * m, lambda m, lam: m >= 2, b_IIIA2, _two),
    _E("III-A:3", "III", "A", "C^2 + sl(m,C)", "(pi_1 (x)_C can) + (pi_2 (x)_C can)", "C", "2m", ["m"],
       "m >= 2", lambda m: 2 * m, lambda m: m >= 2, b_IIIA3, _two),
    _E("III-A:4", "III", "A", "sl(m,C)", "can + can*", "C", "2m", ["m"], "m >= 3",
       lambda m: 2 * m, lambda m: m >= 3, b_IIIA4, _two),
    _E("III-A:5", "III", "A", "gl(m,C)", "can + can*", "C", "2m", ["m"], "m >= 3",
       lambda m: 2 * m, lambda m: m >= 3, b_IIIA5, _two),
    _E("III-A:6", "III", "A", "sp(m,C)", "can + can", "C", "4m", ["m"], "m >= 2",
       lambda m: 4 * m, lambda m: m >= 2, b_IIIA6, _two),
    _E("III-A:7", "III", "A", "sp(m,C) + sp(1,C)", "can (x)_C can", "C", "4m", ["m"], "m >= 2",
       lambda m: 4 * m, lambda m: m >= 2, b_IIIA7, S_clause_iii=True),
    _E("III-A:8", "III", "A", "C + sl(p,C) + sl(q,C)",
       "(gamma (x)_C rho_0 (x)_C can_q) + (gamma(p/(p+q)) (x)_C can_p (x)_C can_q)", "C", "(p+1)q",
       ["p", "q"], "p >= 2, q >= 2", lambda p, q: (p + 1) * q, lambda p, q: p >= 2 and q >= 2, b_IIIA8, _two),
    _E("III-A:9", "III", "A", "C^2 + sl(m,C) + sl(2,C)",
       "(pi_1 (x)_C rho_0 (x)_C can_2) + (pi_2 (x)_C can_m (x)_C can_2)", "C", "2m+2", ["m"], "m >= 2",
       lambda m: 2 * m + 2, lambda m: m >= 2, b_IIIA9, _two),
    _E("III-A:10", "III", "A", "C + sl(m,C)", "(gamma (x)_C can) + (gamma(1/2) (x)_C Sym^2(can))", "C",
       "m(m+3)/2", ["m"], "m >= 2", lambda m: m * (m + 3) // 2, lambda m: m >= 2, b_IIIA10, _two),
    _E("III-A:11", "III", "A", "C^2 + sl(2,C)", "(pi_1 (x)_C can) + (pi_2 (x)_C Sym^2(can))", "C", "5", [],
       "", lambda: 5, lambda: True, b_IIIA11, _two),
    # List III-B
    _E("III-B:2a", "III", "B", "R + sl(m,R)", "(gamma (x) can) + (gamma(mu) (x) can)", "R", "2m",
       ["m", "mu"], "m >= 2, mu != 1", lambda m, mu: 2 * m, lambda m, mu: m >= 2 and mu != 1, b_IIIB2a, _two),
    _E("III-B:3a", "III", "B", "R^2 + sl(m,R)", "(pi_1 (x) can) + (pi_2 (x) can)", "R", "2m", ["m"],
       "m >= 2", lambda m: 2 * m, lambda m: m >= 2, b_IIIB3a, _two),
    _E("III-B:4a", "III", "B", "sl(m,R)", "can + can*", "R", "2m", ["m"], "m >= 3",
       lambda m: 2 * m, lambda m: m >= 3, b_IIIB4a, _two),
    _E("III-B:5a", "III", "B", "gl(m,R)", "can + can*", "R", "2m", ["m"], "m >= 3",
       lambda m: 2 * m, lambda m: m >= 3, b_IIIB5a, _two),
    _E("III-B:7a", "III", "B", "sp(m,R) + sp(1,R)", "can (x) can", "R", "4m", ["m"], "m >= 2",
       lambda m: 4 * m, lambda m: m >= 2, b_IIIB7a, S_clause_iii=True),
    _E("III-B:7b", "III", "B", "sp(p,q) + sp(1)", "can (x)_H can", "R", "4(p+q)", ["p", "q"],
       "p+q >= 2, p >= q >= 0", lambda p, q: 4 * (p + q), lambda p, q: _pq(p, q) and p + q >= 2, b_IIIB7b,
       S_clause_iii=True),
    _E("III-B:8a", "III", "B", "R + sl(p,R) + sl(q,R)",
       "(gamma (x) rho_0 (x) can_q) + (gamma(p/(p+q)) (x) can_p (x) can_q)", "R", "(p+1)q", ["p", "q"],
       "p >= 2, q >= 2", lambda p, q: (p + 1) * q, lambda p, q: p >= 2 and q >= 2, b_IIIB8a, _two),
    _E("III-B:9a", "III", "B", "R^2 + sl(m,R) + sl(2,R)",
       "(pi_1 (x) rho_0 (x) can_2) + (pi_2 (x) can_m (x) can_2)", "R", "2m+2", ["m"], "m >= 2",
       lambda m: 2 * m + 2, lambda m: m >= 2, b_IIIB9a, _two),
    _E("III-B:10a", "III", "B", "R + sl(m,R)", "(gamma (x) can) + (gamma(1/2) (x) Sym^2(can))", "R",
       "m(m+3)/2", ["m"], "m >= 2", lambda m: m * (m + 3) // 2, lambda m: m >= 2, b_IIIB10a, _two),
    _E("III-B:11a", "III", "B", "R^2 + sl(2,R)", "(pi_1 (x) can) + (pi_2 (x) Sym^2(can))", "R", "5", [],
       "", lambda: 5, lambda: True, b_IIIB11a, _two),
    # List III-C
    _E("III-C:1a", "III", "C", "sl(m,R)", "can + can = can (x) C", "C", "m", ["m"], "m >= 2",
       lambda m: m, lambda m: m >= 2, b_IIIC1a, _two),
    _E("III-C:1b", "III", "C", "sl(m,H)", "can", "C", "2m", ["m"], "m >= 1",
       lambda m: 2 * m, lambda m: m >= 1, b_IIIC1b),
    _E("III-C:2b", "III", "C", "R + sl(m,R)", "sigma_theta (x) can", "C", "m", ["m", "theta"],
       "m >= 2, 0 <= theta <= pi/2", lambda m, theta: m, lambda m, theta: m >= 2 and _theta_ok(theta),
       b_IIIC2b, lambda m, theta: 2 if theta == (1, 0) else 1, asserted_without_proof=True),
    _E("III-C:2c", "III", "C", "R + sl(m,H)", "sigma_theta (x)_C can", "C", "2m", ["m", "theta"],
       "m >= 1, 0 <= theta <= pi/2", lambda m, theta: 2 * m, lambda m, theta: m >= 1 and _theta_ok(theta),
       b_IIIC2c, asserted_without_proof=True),
    _E("III-C:3b", "III", "C", "C + sl(m,R)", "gamma (x) can", "C", "m", ["m"], "m >= 2",
       lambda m: m, lambda m: m >= 2, b_IIIC3b, asserted_without_proof=True),
    _E("III-C:3c", "III", "C", "C + sl(m,H)", "gamma (x)_C can", "C", "2m", ["m"], "m >= 1",
       lambda m: 2 * m, lambda m: m >= 1, b_IIIC3c, asserted_without_proof=True),
    _E("III-C:4b", "III", "C", "su(p,q)", "can", "C", "p+q", ["p", "q"], "p >= q >= 0, p+q >= 3",
       lambda p, q: p + q, lambda p, q: _pq(p, q) and p + q >= 3, b_IIIC4b),
    _E("III-C:5b", "III", "C", "u(p,q)", "can", "C", "p+q", ["p", "q"], "p >= q >= 0, p+q >= 3",
       lambda p, q: p + q, lambda p, q: _pq(p, q) and p + q >= 3, b_IIIC5b),
    _E("III-C:6a", "III", "C", "sp(m,R)", "can + can = can (x) C", "C", "2m", ["m"], "m >= 2",
       lambda m: 2 * m, lambda m: m >= 2, b_IIIC6a, _two),
    _E("III-C:6b", "III", "C", "sp(p,q)", "can", "C", "2(p+q)", ["p", "q"], "p >= q >= 0, p+q >= 2",
       lambda p, q: 2 * (p + q), lambda p, q: _pq(p, q) and p + q >= 2, b_IIIC6b),
    # List IV-A
    _E("IV-A:1", "IV", "A", "sp(m,C)", "can", "C", "2m", ["m"], "m >= 2",
       lambda m: 2 * m, lambda m: m >= 2, b_IVA1),
    _E("IV-A:2", "IV", "A", "so(m,C) + sp(1,C)", "can (x)_C can", "C", "2m", ["m"], "m >= 3",
       lambda m: 2 * m, lambda m: m >= 3, b_IVA2),
    _E("IV-A:3", "IV", "A", "sp(1,C)", "Sym^3(can)", "C", "4", [], "", lambda: 4, lambda: True, b_IVA3),
    _E("IV-A:4", "IV", "A", "sp(3,C)", "Ext^3_0(can)", "C", "14", [], "", lambda: 14, lambda: True, b_IVA4),
    _E("IV-A:5", "IV", "A", "sl(6,C)", "Ext^3(can)", "C", "20", [], "", lambda: 20, lambda: True, b_IVA5),
    _E("IV-A:6", "IV", "A", "so(12,C)", "half-spin", "C", "32", [], "", lambda: 32, lambda: True, b_IVA6),
    _E("IV-A:7", "IV", "A", "E7^C", "can", "C", "56", [], "", lambda: 56, lambda: True, None),
    # List IV-B
    _E("IV-B:1a", "IV", "B", "sp(m,R)", "can", "R", "2m", ["m"], "m >= 2",
       lambda m: 2 * m, lambda m: m >= 2, b_IVB1a),
    _E("IV-B:2a", "IV", "B", "so(p,q) + sp(1,R)", "can (x) can", "R", "2(p+q)", ["p", "q"],
       "p+q >= 3, p >= q >= 0", lambda p, q: 2 * (p + q), lambda p, q: _pq(p, q) and p + q >= 3, b_IVB2a),
    _E("IV-B:2b", "IV", "B", "so(m,H) + sp(1)", "can (x)_H can", "R", "4m", ["m"], "m >= 2",
       lambda m: 4 * m, lambda m: m >= 2, b_IVB2b),
    _E("IV-B:3a", "IV", "B", "sp(1,R)", "Sym^3(can)", "R", "4", [], "", lambda: 4, lambda: True, b_IVB3a),
    _E("IV-B:4a", "IV", "B", "sp(3,R)", "Ext^3_0(can)", "R", "14", [], "", lambda: 14, lambda: True, b_IVB4a),
    _E("IV-B:5a", "IV", "B", "sl(6,R)", "Ext^3(can)", "R", "20", [], "", lambda: 20, lambda: True, b_IVB5a),
    _E("IV-B:5b", "IV", "B", "su(3,3)", "Ext^3(can)^R", "R", "20", [], "", lambda: 20, lambda: True,
       lambda: b_IVB5_su(3, 3)),
    _E("IV-B:5c", "IV", "B", "su(5,1)", "Ext^3(can)^R", "R", "20", [], "", lambda: 20, lambda: True,
       lambda: b_IVB5_su(5, 1)),
    _E("IV-B:6a", "IV", "B", "so(6,6)", "half-spin^R", "R", "32", [], "", lambda: 32, lambda: True,
       lambda: b_IVB6_so(6, 6)),
    _E("IV-B:6b", "IV", "B", "so(10,2)", "half-spin^R", "R", "32", [], "", lambda: 32, lambda: True,
       lambda: b_IVB6_so(10, 2)),
    _E("IV-B:6c", "IV", "B", "so(6,H)", "half-spin^R", "R", "32", [], "", lambda: 32, lambda: True, b_IVB6c),
    _E("IV-B:7a", "IV", "B", "E7^1", "can", "R", "56", [], "", lambda: 56, lambda: True, None),
    _E("IV-B:7b", "IV", "B", "E7^3", "can", "R", "56", [], "", lambda: 56, lambda: True, None),
    # List V
    _E("V-A:1", "V", "A", "G2^C", "can", "C", "7", [], "", lambda: 7, lambda: True, b_VA1),
    _E("V-A:2", "V", "A", "so(7,C)", "spin", "C", "8", [], "", lambda: 8, lambda: True, b_VA2),
    _E("V-A:3", "V", "A", "C + sl(2,C)", "gamma (x)_C Sym^3(can)", "C", "4", [], "", lambda: 4, lambda: True,
       b_VA3),
    _E("V-A:4", "V", "A", "C + sp(2,C)", "gamma (x)_C can", "C", "4", [], "", lambda: 4, lambda: True, b_VA4),
    _E("V-B:1a", "V", "B", "G2^1", "can", "R", "7", [], "", lambda: 7, lambda: True, lambda: b_VB1("split")),
    _E("V-B:1b", "V", "B", "G2", "can", "R", "7", [], "", lambda: 7, lambda: True, lambda: b_VB1("compact")),
    _E("V-B:2a", "V", "B", "so(4,3)", "spin^R", "R", "8", [], "", lambda: 8, lambda: True,
       lambda: b_VB2(4, 3)),
    _E("V-B:2b", "V", "B", "so(7)", "spin^R", "R", "8", [], "", lambda: 8, lambda: True, lambda: b_VB2(7, 0)),
    _E("V-B:3a", "V", "B", "R + sl(2,R)", "gamma (x) Sym^3(can)", "R", "4", [], "", lambda: 4, lambda: True,
       b_VB3a),
    _E("V-B:4a", "V", "B", "R + sp(2,R)", "gamma (x) can", "R", "4", [], "", lambda: 4, lambda: True, b_VB4a),
]

# -- irreducible Type-II families --------------------------------------------
# ``base`` names a List I row; the family consists of its semisimple part
# (II-A, II-B) or of that part extended by a circle of complex scalars (II-C).

TYPE2_BASES = {
    "II-A": ("I-A:1", "I-A:2", "I-A:3", "I-A:4", "I-A:5", "I-A:6"),
    "II-B": ("I-B:1a", "I-B:2a", "I-B:3a", "I-B:3b", "I-B:3c", "I-B:4a", "I-B:4b", "I-B:5a", "I-B:5b",
             "I-B:6a", "I-B:6b"),
    "II-C": ("I-A:1", "I-A:2", "I-A:3", "I-A:4", "I-A:5", "I-A:6"),
}


def _split_base(params):
    base = params["base"]
    rest = {k: v for k, v in params.items() if k not in ("base", "theta")}
    return base, rest


def semisimple_part(h: LinRep) -> LinRep:
    s = derived_and_split(h).semisimple_algebra()
    return LinRep(h.space_dim, s.gens, h.complex_structure, dict(h.meta), check=False)


def semisimple_entry(list_id: str, params: dict) -> LinRep:
    """Semisimple part of a catalog row, assembled factor by factor."""
    tok = _SEMISIMPLE.set(True)
    try:
        return construct_entry(list_id, params)
    finally:
        _SEMISIMPLE.reset(tok)


def _type2_builder(fam):
    def build(**params):
        base, rest = _split_base(params)
        if fam != "II-C":
            return semisimple_entry(base, rest)
        h = construct_entry(base, rest)
        s = semisimple_entry(base, rest)
        if fam != "II-C":
            return s
        c, t = params["theta"]
        J = h.complex_structure
        rot = Matrix.identity(h.space_dim, c) + J.scale(t)
        return LinRep.from_matrices(h.space_dim, list(s.gens) + [rot], complex_structure=J)
    return build


def _type2_check(fam):
    def check(**params):
        base, rest = _split_base(params)
        if base not in TYPE2_BASES[fam]:
            return False
        e = CATALOG[base]
        if set(rest) != set(e.params) or not e.check(**rest):
            return False
        if fam == "II-A" and base == "I-A:1" and rest["m"] < 2:
            return False
        if fam == "II-B" and base == "I-B:1a" and rest["n"] < 2:
            return False
        if fam == "II-C":
            return _theta_ok(params["theta"])
        return True
    return check


def _type2_dim(**params):
    base, rest = _split_base(params)
    return CATALOG[base].dim(**rest)


def _type2_summands(**params):
    base, rest = _split_base(params)
    # the circle of real scalars alone acts reducibly on C
    if base == "I-A:1" and rest.get("m") == 1 and params.get("theta") == (1, 0):
        return 2
    return 1


_TYPE2 = [
    _E("II-A", "II", "A", "s (semisimple part of a List I-A algebra)", "restriction of the base rho",
       "C", "dim of base", ["base", "..."], "base in List I-A, s irreducible", _type2_dim,
       _type2_check("II-A"), _type2_builder("II-A"), family=True),
    _E("II-B", "II", "B", "s (semisimple part of a List I-B algebra)", "restriction of the base rho",
       "R", "dim of base", ["base", "..."], "base in List I-B, s irreducible", _type2_dim,
       _type2_check("II-B"), _type2_builder("II-B"), family=True),
    _E("II-C", "II", "C", "R + s (s from a List I-A algebra)", "sigma_theta (x)_C restriction of base",
       "C", "dim of base", ["base", "...", "theta"], "base in List I-A, 0 <= theta <= pi/2", _type2_dim,
       _type2_check("II-C"), _type2_builder("II-C"), _type2_summands, family=True),
]

CATALOG: dict[str, CatalogEntry] = {e.list_id: e for e in _LISTS + _TYPE2}


def get_entry(list_id: str) -> CatalogEntry:
    try:
        return CATALOG[list_id]
    except KeyError:
        raise UnknownEntry(list_id) from None


def _normalise(entry: CatalogEntry, params: dict) -> dict:
    out = {}
    for k, v in params.items():
        out[k] = parse_param(k, v) if isinstance(v, str) else v
    if entry.typ == "II":
        return out
    if set(out) != set(entry.params):
        raise ConditionViolated(f"{entry.list_id} takes parameters {list(entry.params)}, got {sorted(out)}")
    return out


def space_dim_of(list_id: str, params: dict) -> int:
    e = get_entry(list_id)
    return e.space_dim(_normalise(e, params))


def _warn_soft(entry, p):
    if "lam" in p:
        lam = Scalar.coerce(p["lam"])
        if lam.norm2() > 1 or (lam.norm2() == 1 and lam.im < 0):
            warnings.warn(f"{entry.list_id}: lam outside the normal form |lam| <= 1, Im lam >= 0 on the circle")
    if "mu" in p and abs(Fraction(p["mu"])) > 1:
        warnings.warn(f"{entry.list_id}: mu outside the normal form |mu| <= 1")


def construct_entry(list_id: str, params: dict | None = None) -> LinRep:
    """Matrix model of a catalog row; parameters may be given as strings."""
    e = get_entry(list_id)
    p = _normalise(e, dict(params or {}))
    if e.typ == "II" and "base" not in p:
        raise ConditionViolated(f"{list_id} needs a base parameter")
    try:
        ok = e.check(**p)
    except (TypeError, KeyError) as exc:
        raise ConditionViolated(f"{list_id}: bad parameters {sorted(p)}") from exc
    if not ok:
        raise ConditionViolated(f"{list_id}: parameters {_fmt(p)} violate {e.conditions!r}")
    if e.metadata_only:
        raise MetadataOnly(f"{list_id} ({e.h}) has no matrix model; dimension {e.dim_text}")
    _warn_soft(e, p)
    h = e.build(**p)
    meta = dict(h.meta)
    meta.update({"list_id": list_id, "params": {k: format_param(k, v) for k, v in sorted(p.items())}})
    return LinRep(h.space_dim, h.gens, h.complex_structure, meta, name=f"{list_id}{_fmt(p)}", check=False)


def _fmt(p):
    if not p:
        return ""
    return "(" + ", ".join(f"{k}={format_param(k, v)}" for k, v in sorted(p.items())) + ")"


def _int_grid(names, bound):
    return product(*[range(0, bound + 1) for _ in names])


def instances(entry: CatalogEntry, max_space_dim: int):
    """Parameter dicts of ``entry`` with realified dimension <= ``max_space_dim``."""
    if entry.typ == "II":
        out = []
        for base in TYPE2_BASES[entry.list_id]:
            for bp in instances(CATALOG[base], max_space_dim):
                thetas = PARAM_SAMPLES["theta"] if entry.list_id == "II-C" else [None]
                for t in thetas:
                    p = {"base": base, **bp}
                    if t is not None:
                        p["theta"] = t
                    if entry.check(**p):
                        out.append(p)
        return out
    ints = [k for k in entry.params if k in INT_PARAMS]
    conts = [k for k in entry.params if k not in INT_PARAMS]
    out = []
    for iv in _int_grid(ints, max_space_dim):
        for cv in product(*[PARAM_SAMPLES[k] for k in conts]):
            p = dict(zip(ints, iv)) | dict(zip(conts, cv))
            if entry.check(**p) and entry.space_dim(p) <= max_space_dim:
                out.append(p)
    return out


def enumerate_catalog(max_space_dim: int = 32, include_metadata: bool = False, include_type2: bool = True):
    """Yield ``(entry, params)`` over the catalog with bounded realified dimension."""
    for e in CATALOG.values():
        if e.metadata_only:
            if include_metadata and e.space_dim({}) <= max_space_dim:
                yield e, {}
            continue
        if e.typ == "II" and not include_type2:
            continue
        for p in instances(e, max_space_dim):
            yield e, p


def manifest() -> list[dict]:
    return [e.to_manifest() for e in CATALOG.values()]

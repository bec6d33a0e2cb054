"""Sparse exact solvers for h^(1), C(h), K(h), h_K and K^1(h).

Unknowns are coordinates against the generator basis g_0, ..., g_{d-1} of h,
so membership in h is built in and only the symmetry (resp. Bianchi)
equations are assembled.  Packed orders: pairs (i, j) with i < j and
triples i < j < k, lexicographic.

    h^(1): B(e_i, .) = sum_a c[i, a] g_a,   B(e_i, e_j) = B(e_j, e_i)
    K(h):  R(e_i, e_j) = sum_a r[(i, j), a] g_a,
           R(e_i, e_j) e_k + R(e_j, e_k) e_i + R(e_k, e_i) e_j = 0
    K^1:   S_x = sum_k s[x, k] R_k,   S_x(y, z) + S_y(z, x) + S_z(x, y) = 0
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactmat import Matrix, Subspace, linalg, format_rational
from ..liecore import LinRep, center_basis

__all__ = ["ProlongationResult", "BergerResult", "SizeCapExceeded", "first_prolongation",
           "property_C_check", "berger_test", "pair_index", "triple_index"]

# unknown counts above which K(h) resp. K^1(h) are not attempted
K_CAP = 40000
K1_CAP = 30000


class SizeCapExceeded(RuntimeError):
    pass


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {(i, j): k for k, (i, j) in enumerate((i, j) for i in range(n) for j in range(i + 1, n))}


def triple_index(n: int) -> dict[tuple[int, int, int], int]:
    trip = [(i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n)]
    return {t: a for a, t in enumerate(trip)}


def _gen_entries(h: LinRep):
    # (row, col, value) triples of every generator; generators are real
    return [[(r, c, v) for r, row in sorted(g.re.items()) for c, v in sorted(row.items())] for g in h.gens]


def _span_dim(rows) -> int:
    return linalg.rank([r for r in rows if r])


@dataclass
class ProlongationResult:
    n: int
    dim_h: int
    dim_h1: int
    basis: list = field(repr=False)        # dicts {(i, j, k): B(e_i, e_j)_k} with i <= j
    c_of_h: Subspace = field(repr=False)   # C(h) in h-coordinates
    dim_c: int = 0
    center_dim: int = 0
    property_C: bool = False

    def to_dict(self, emit_bases: bool = False) -> dict:
        out = {"dim_h1": self.dim_h1, "dim_C_of_h": self.dim_c, "dim_h": self.dim_h,
               "center_dim": self.center_dim, "property_C": self.property_C}
        if emit_bases:
            out["basis"] = [[[i, j, k, format_rational(v)] for (i, j, k), v in sorted(B.items())] for B in self.basis]
        return out


def _h1_kernel(h: LinRep):
    n, d = h.n, h.dim
    ents = _gen_entries(h)
    eqs: dict[tuple, dict[int, Fraction]] = {}
    for a, lst in enumerate(ents):
        for (k, c, v) in lst:
            # g_a[k, c] multiplies c[t, a] in the (t, c) symmetry equation, row k
            for t in range(n):
                if t == c:
                    continue
                key = (min(t, c), max(t, c), k)
                row = eqs.setdefault(key, {})
                u = t * d + a
                row[u] = row.get(u, 0) + (v if t < c else -v)
    rows = [{u: x for u, x in r.items() if x} for _, r in sorted(eqs.items())]
    return linalg.nullspace(rows, n * d), ents


def first_prolongation(h: LinRep) -> ProlongationResult:
    n, d = h.n, h.dim
    ker, ents = _h1_kernel(h)
    basis = []
    crow = []
    for vec in ker:
        B = {}
        for i in range(n):
            coeffs = {a: vec[i * d + a] for a in range(d) if vec.get(i * d + a)}
            if coeffs:
                crow.append(coeffs)
            for a, x in coeffs.items():
                for (k, j, v) in ents[a]:
                    if i <= j:
                        key = (i, j, k)
                        B[key] = B.get(key, 0) + x * v
        basis.append({key: v for key, v in B.items() if v})
    c = Subspace(d, crow, field="R") if crow else Subspace(d, [], field="R")
    z = len(center_basis(h))
    return ProlongationResult(n, d, len(ker), basis, c, c.dim, z, c.dim == d and z > 0)


def property_C_check(h: LinRep) -> bool:
    return first_prolongation(h).property_C


@dataclass
class BergerResult:
    n: int
    dim_h: int
    dim_K: int | None
    dim_hK: int | None
    first_criterion: bool | None
    dim_K1: int | None
    second_criterion: bool | None
    K_basis: list = field(repr=False, default_factory=list)  # dicts {(pair, a): coeff}
    skipped: list = field(default_factory=list)

    def to_dict(self, emit_bases: bool = False) -> dict:
        out = {"dim_K": self.dim_K, "dim_h_K": self.dim_hK, "first_criterion": self.first_criterion,
               "dim_K1": self.dim_K1, "second_criterion": self.second_criterion,
               "second_criterion_is_necessary_only": True}
        if self.skipped:
            out["skipped"] = list(self.skipped)
        if emit_bases:
            out["K_basis"] = [[[p, a, format_rational(v)] for (p, a), v in sorted(R.items())] for R in self.K_basis]
        return out


def _curvature_kernel(h: LinRep):
    n, d = h.n, h.dim
    pidx = pair_index(n)
    ents = _gen_entries(h)
    eqs: dict[tuple, dict[int, Fraction]] = {}
    for a, lst in enumerate(ents):
        for (l, c, v) in lst:
            # g_a e_c contributes through R(e_x, e_y) e_c for the pair {x, y} = triple \ {c}
            for x in range(n):
                for y in range(x + 1, n):
                    if c == x or c == y:
                        continue
                    t = tuple(sorted((x, y, c)))
                    sign = -1 if c == t[1] else 1
                    row = eqs.setdefault((t, l), {})
                    u = pidx[(x, y)] * d + a
                    row[u] = row.get(u, 0) + sign * v
    rows = [{u: x for u, x in r.items() if x} for _, r in sorted(eqs.items())]
    return linalg.nullspace(rows, len(pidx) * d)


def _k1_dim(n: int, d: int, K: list[dict]) -> int:
    pidx = pair_index(n)
    pairs = {p: xy for xy, p in pidx.items()}
    m = len(K)
    eqs: dict[tuple, dict[int, Fraction]] = {}
    for kap, R in enumerate(K):
        for (p, a), v in R.items():
            x, y = pairs[p]
            for t in range(n):
                if t == x or t == y:
                    continue
                tri = tuple(sorted((x, y, t)))
                sign = -1 if t == tri[1] else 1
                row = eqs.setdefault((tri, a), {})
                u = t * m + kap
                row[u] = row.get(u, 0) + sign * v
    rows = [{u: x for u, x in r.items() if x} for _, r in sorted(eqs.items())]
    return n * m - linalg.rank(rows) if rows else n * m


def berger_test(h: LinRep, k_cap: int = K_CAP, k1_cap: int = K1_CAP) -> BergerResult:
    """Berger's necessary tests: h_K = h and K^1(h) != 0.

    Solves for K(h) only below ``k_cap`` unknowns and for K^1(h) only below
    ``k1_cap``; skipped stages are reported as None and listed in ``skipped``.
    """
    n, d = h.n, h.dim
    npairs = n * (n - 1) // 2
    if npairs * d > k_cap:
        return BergerResult(n, d, None, None, None, None, None, [], ["K", "K1"])
    ker = _curvature_kernel(h)
    K = []
    vals = []
    for vec in ker:
        R = {}
        for u, x in vec.items():
            p, a = divmod(u, d)
            R[(p, a)] = x
        K.append(R)
    by_pair: dict[tuple[int, int], dict[int, Fraction]] = {}
    for kap, R in enumerate(K):
        for (p, a), x in R.items():
            by_pair.setdefault((kap, p), {})[a] = x
    vals = list(by_pair.values())
    dim_hK = _span_dim(vals) if vals else 0
    first = dim_hK == d
    if n * len(K) > k1_cap:
        return BergerResult(n, d, len(K), dim_hK, first, None, None, K, ["K1"])
    dk1 = _k1_dim(n, d, K) if K else 0
    return BergerResult(n, d, len(K), dim_hK, first, dk1, dk1 > 0, K)

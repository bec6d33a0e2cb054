"""Center, derived algebra, commutant and the trace form of a linear Lie algebra."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactmat import Matrix, Subspace, linalg
from ..exactmat import polyops
from ..exactmat.linalg import ModularEchelon, integer_row
from .linrep import LinRep, NotReductive, independent_subset

__all__ = [
    "ReductiveSplit",
    "centralizer_in",
    "center",
    "center_basis",
    "derived_basis",
    "derived_and_split",
    "commutant",
    "commutant_basis",
    "trace_gram",
    "signature",
    "is_reductive",
    "is_semisimple_element",
]


def _combine(mats, coeffs, n):
    acc = Matrix.zeros(n)
    for k, c in coeffs.items():
        acc = acc + mats[k].scale(c)
    return acc


def centralizer_in(basis: list[Matrix], ops, n: int) -> list[Matrix]:
    """Basis of {X in span(basis) : [X, g] = 0 for every g in ops}.

    One generator at a time: each step solves a linear system in the
    coordinates of the current solution space, which shrinks quickly.
    """
    cur = list(basis)
    for g in ops:
        if not cur:
            break
        imgs = [X.bracket(g) for X in cur]
        if all(m.is_zero() for m in imgs):
            continue
        # equation per matrix position: sum_k x_k imgs_k[pos] = 0
        eqs: dict[int, dict[int, Fraction]] = {}
        for k, m in enumerate(imgs):
            for pos, v in m.vec().items():
                eqs.setdefault(pos, {})[k] = v
        ker = linalg.nullspace(list(eqs.values()), len(cur))
        cur = [_combine(cur, v, n) for v in ker]
    return cur


def _as_subspace(n: int, mats) -> Subspace:
    return Subspace(n * n, [m.vec() for m in mats], field="R")


def _matrices(n: int, sub: Subspace) -> list[Matrix]:
    return [Matrix.from_vec(v, n) for v in sub.vectors()]


def center_basis(h: LinRep) -> list[Matrix]:
    return centralizer_in(list(h.gens), h.generating_order, h.n)


def center(h: LinRep) -> Subspace:
    """{X in h : [X, h] = 0} as a subspace of gl(n) (row-major coordinates)."""
    return _as_subspace(h.n, center_basis(h))


def derived_basis(h: LinRep, target: int | None = None) -> list[Matrix]:
    """Independent brackets spanning [h, h]; stops early once ``target`` are found."""
    g = h.gens
    if target is None:
        return independent_subset([g[a].bracket(g[b]) for a in range(len(g)) for b in range(a + 1, len(g))])
    ech = ModularEchelon()
    keep = []
    for a in range(len(g)):
        for b in range(a + 1, len(g)):
            m = g[a].bracket(g[b])
            if not m.is_zero() and ech.add(integer_row(m.vec())) is not None:
                keep.append(m)
                if len(keep) == target:
                    return keep
    return keep


def _trace_perp_dim(h: LinRep, zs: list[Matrix]) -> int:
    """dim of {X in h : tr(XZ) = 0 for Z in zs}."""
    rows = [{k: (g @ Z).trace().re for k, g in enumerate(h.gens)} for Z in zs]
    rows = [{k: v for k, v in r.items() if v} for r in rows]
    return h.dim - len(linalg.rref(rows))


def commutant_basis(h: LinRep) -> list[Matrix]:
    """Canonical basis of {M in gl(n) : [M, h] = 0}."""
    n = h.n
    units = [Matrix.unit(n, i, j) for i in range(n) for j in range(n)]
    sol = centralizer_in(units, h.generating_order, n)
    return _matrices(n, _as_subspace(n, sol))


def commutant(h: LinRep) -> Subspace:
    return _as_subspace(h.n, commutant_basis(h))


@dataclass(frozen=True)
class ReductiveSplit:
    """h = center + semisimple; both stored as subspaces of gl(n)."""

    center: Subspace
    semisimple: Subspace
    space_dim: int

    def center_algebra(self) -> LinRep:
        return LinRep(self.space_dim, _matrices(self.space_dim, self.center), check=False)

    def semisimple_algebra(self) -> LinRep:
        return LinRep(self.space_dim, _matrices(self.space_dim, self.semisimple), check=False)


def derived_and_split(h: LinRep) -> ReductiveSplit:
    n = h.n
    zm = center_basis(h)
    z = _as_subspace(n, zm)
    for X in zm:
        if not is_semisimple_element(X):
            raise NotReductive("center contains a non-semisimple element")
    # [h, h] is trace-orthogonal to z; when the trace form is nondegenerate on z
    # the derived algebra is a complement of z exactly when it fills z-perp
    perp = _trace_perp_dim(h, zm)
    if perp + z.dim == h.dim:
        d = _as_subspace(n, derived_basis(h, perp))
        if d.dim != perp:
            raise NotReductive(f"center ({z.dim}) + derived ({d.dim}) does not span h ({h.dim})")
        return ReductiveSplit(z, d, n)
    d = _as_subspace(n, derived_basis(h))
    if z.dim + d.dim != h.dim or (z + d).dim != h.dim:
        raise NotReductive(f"center ({z.dim}) + derived ({d.dim}) does not span h ({h.dim})")
    # iterate: for reductive h the derived algebra is already perfect
    while True:
        dm = _matrices(n, d)
        dd = _as_subspace(n, derived_basis(LinRep(n, dm, check=False)))
        if dd.dim == d.dim:
            break
        d = dd
    return ReductiveSplit(z, d, n)


def is_semisimple_element(X: Matrix) -> bool:
    """Diagonalisable over C: the minimal polynomial is squarefree."""
    mp = polyops.minpoly(X)
    return all(e == 1 for _, e in polyops.factor(mp))


def is_reductive(h: LinRep) -> bool:
    try:
        derived_and_split(h)
    except NotReductive:
        return False
    return True


def trace_gram(mats) -> list[list[Fraction]]:
    """Gram matrix of the trace form tr(XY)."""
    k = len(mats)
    G = [[Fraction(0)] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            t = (mats[a] @ mats[b]).trace().re
            G[a][b] = G[b][a] = Fraction(t)
    return G


def signature(G) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a rational symmetric form.

    Congruence diagonalisation: a zero diagonal with a nonzero off-diagonal
    entry G_ij is fixed by replacing e_i with e_i + e_j.
    """
    G = [list(map(Fraction, r)) for r in G]
    k = len(G)
    pos = neg = 0
    live = list(range(k))
    while live:
        p = next((i for i in live if G[i][i]), None)
        if p is None:
            pair = next(((i, j) for i in live for j in live if i < j and G[i][j]), None)
            if pair is None:
                break
            i, j = pair
            for t in range(k):
                G[i][t] += G[j][t]
            for t in range(k):
                G[t][i] += G[t][j]
            p = i
        d = G[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        live.remove(p)
        row = G[p]
        for i in live:
            f = row[i] / d
            if f:
                Gi = G[i]
                for j in live:
                    if row[j]:
                        Gi[j] -= f * row[j]
    return pos, neg, len(live)

"""Direct-product splitting, real/complex classification and complexification."""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..exactmat import Matrix, Subspace, block_diag, linalg, polyops, realify_block
from .linrep import LinRep, inverse
from .modules import RETRIES, irreducible_summands, module_commutant, restrict
from .structure import derived_and_split

__all__ = [
    "RealClass",
    "intertwiners",
    "decompose_direct_product",
    "real_class",
    "has_complex_structure",
    "complexify_alg",
    "SPartial",
    "property_S_partial",
]


class RealClass(str, Enum):
    TOTALLY_COMPLEX = "TotallyComplex"
    REAL_COMPLEX = "RealComplex"
    TOTALLY_REAL = "TotallyReal"


def intertwiners(ga, gb) -> list[Matrix]:
    """Basis of {X : gb_k X = X ga_k for all k} (X maps the a-space to the b-space)."""
    da = ga[0].rows if ga else 0
    db = gb[0].rows if gb else 0
    N = da * db
    eqs = []
    for A, B in zip(ga, gb):
        # (B X - X A)[i, j] = sum_l B[i,l] X[l,j] - sum_l X[i,l] A[l,j]
        rows: dict[tuple, dict[int, Fraction]] = {}
        for i, r in B.re.items():
            for l, v in r.items():
                for j in range(da):
                    rows.setdefault((i, j), {})
                    k = l * da + j
                    rows[(i, j)][k] = rows[(i, j)].get(k, 0) + v
        for l, r in A.re.items():
            for j, v in r.items():
                for i in range(db):
                    rows.setdefault((i, j), {})
                    k = i * da + l
                    rows[(i, j)][k] = rows[(i, j)].get(k, 0) - v
        eqs.extend({k: v for k, v in r.items() if v} for r in rows.values())
    return [Matrix.from_vec(v, db, da) for v in linalg.nullspace(eqs, N)]


# -- direct products ----------------------------------------------------------

def _adapted(summands, n):
    """Change of basis P whose columns run through the summand bases."""
    cols = [v for s in summands for v in s.basis]
    ent = {(i, j): x for j, v in enumerate(cols) for i, x in v.items()}
    return Matrix.from_dict(n, n, ent)


def decompose_direct_product(h: LinRep, seed: int = 0, over_complex: bool | None = None,
                             retries: int = RETRIES) -> list[LinRep]:
    """Finest splitting of h as a direct product of linear Lie algebras.

    With invariant summands W_1..W_k and projectors Pi_i, the vectors c with
    sum_i c_i Pi_i h in h form a unital subalgebra of Q^k; its echelon basis
    is the set of block indicators of the finest admissible partition.
    ``over_complex`` (default: h.meta["complexified"]) splits into complex
    subspaces, i.e. invariant under the complex structure as well.
    """
    n = h.n
    if over_complex is None:
        over_complex = bool(h.meta.get("complexified"))
    mod = h
    if over_complex:
        mod = LinRep(n, list(h.gens) + [h.complex_structure], check=False)
    summ = irreducible_summands(mod, seed, retries)
    k = len(summ)
    P = _adapted(summ, n)
    Pinv = inverse(P)
    ends = []
    for s in summ:
        ends.append((ends[-1] if ends else 0) + s.dim)
    starts = [e - s.dim for e, s in zip(ends, summ)]
    proj = [P @ Matrix.from_dict(n, n, {(t, t): 1 for t in range(a, b)}) @ Pinv
            for a, b in zip(starts, ends)]
    eqs: dict[tuple, dict[int, Fraction]] = {}
    span = h.span
    for a, g in enumerate(h.gens):
        for i, Pi in enumerate(proj):
            for pos, v in span.residue((Pi @ g).vec()).items():
                eqs.setdefault((a, pos), {})[i] = v
    ker = linalg.nullspace(list(eqs.values()), k)
    blocks = Subspace(k, ker, field="R").vectors()
    out = []
    for ind in sorted(blocks, key=min):
        idx = sorted(ind)
        basis = [v for i in idx for v in summ[i].basis]
        sub = Subspace(n, basis, field="R")
        mats = []
        for g in h.gens:
            Pg = Matrix.zeros(n)
            for i in idx:
                Pg = Pg + proj[i] @ g
            mats.append(Pg)
        gens = restrict(mats, sub)
        J = None
        if over_complex and h.complex_structure is not None:
            J = restrict([h.complex_structure], sub)[0]
        fac = LinRep.from_matrices(sub.dim, gens, complex_structure=J,
                                   meta={"block": [sorted(v.items()) for v in sub.vectors()]})
        out.append(fac)
    return out


# -- real / complex classes ---------------------------------------------------

def _isotypic_classes(summ):
    classes: list[list] = []
    for s in summ:
        for c in classes:
            t = c[0]
            if t.dim == s.dim and t.kind == s.kind and intertwiners(list(t.gens), list(s.gens)):
                c.append(s)
                break
        else:
            classes.append([s])
    return classes


def _j_exists(summ) -> bool:
    """An invariant J exists iff each real-type isotypic class has even multiplicity."""
    return all(len(c) % 2 == 0 for c in _isotypic_classes(summ) if c[0].kind == "R")


def has_complex_structure(h: LinRep, seed: int = 0) -> bool:
    return _j_exists(irreducible_summands(h, seed))


def _left_stabilizer(h: LinRep, E) -> list[Matrix]:
    """{A in span(E) : A h in h}."""
    eqs: dict[tuple, dict[int, Fraction]] = {}
    span = h.span
    for a, g in enumerate(h.gens):
        for k, A in enumerate(E):
            for pos, v in span.residue((A @ g).vec()).items():
                eqs.setdefault((a, pos), {})[k] = v
    ker = linalg.nullspace(list(eqs.values()), len(E))
    out = []
    for v in ker:
        acc = Matrix.zeros(h.n)
        for k, c in v.items():
            acc = acc + E[k].scale(c)
        out.append(acc)
    return out


def _center_of(alg, n):
    from .structure import centralizer_in
    return centralizer_in(alg, alg, n)


def real_class(h: LinRep, seed: int = 0) -> RealClass:
    """TotallyReal, RealComplex or TotallyComplex: is there an invariant J, and is h J-closed for one?"""
    n = h.n
    E = module_commutant(list(h.gens) or [Matrix.zeros(n)], n)
    if len(E) == 1:
        # only scalars commute with h, so no invariant J exists at all
        return RealClass.TOTALLY_REAL
    summ = irreducible_summands(h, seed)
    if not _j_exists(summ):
        return RealClass.TOTALLY_REAL
    L = _left_stabilizer(h, E)
    Z = _center_of(L, n)
    rng = random.Random(seed)
    z = Matrix.zeros(n)
    for A in Z:
        z = z + A.scale(rng.randint(1, 7))
    mp = polyops.minpoly(z)
    for f, e in polyops.idempotent_polys(mp):
        if polyops.count_real_roots(f) == 0:
            continue
        if f.degree() > 1:
            return RealClass.REAL_COMPLEX
        # a real central component: J must come from the rest of L there
        Pe = polyops.poly_at(e, z)
        eL = [Pe @ A @ Pe for A in L]
        eE = [Pe @ A @ Pe for A in E]
        dl = Subspace(n * n, [m.vec() for m in eL]).dim
        de = Subspace(n * n, [m.vec() for m in eE]).dim
        if dl != de:
            return RealClass.REAL_COMPLEX
        cols = [dict() for _ in range(n)]
        for i, r in Pe.re.items():
            for j, v in r.items():
                cols[j][i] = v
        V = Subspace(n, [c for c in cols if c], field="R")
        sub = LinRep(V.dim, restrict(list(h.gens), V), check=False)
        if not _j_exists(irreducible_summands(sub, seed)):
            return RealClass.REAL_COMPLEX
    return RealClass.TOTALLY_COMPLEX


def complexify_alg(h: LinRep) -> LinRep:
    """h (x) C inside gl(n, C), realified on R^{2n} with J = realified iI."""
    n = h.n
    i_ = Matrix.identity(n, 1)
    gens = [realify_block(g) for g in h.gens]
    gens += [realify_block(Matrix(n, n, None, g.re)) for g in h.gens]
    J = realify_block(Matrix(n, n, None, i_.re))
    meta = dict(h.meta)
    meta["complexified"] = True
    return LinRep(2 * n, gens, J, meta, name=(h.name + "^C") if h.name else "", check=False)


@dataclass(frozen=True)
class SPartial:
    clause_i: bool
    clause_ii: bool

    def to_dict(self):
        return {"clause_i": self.clause_i, "clause_ii": self.clause_ii}


def property_S_partial(h: LinRep, seed: int = 0) -> SPartial:
    """Clauses decided from the action of the semisimple part s alone:
    (i) s acts reducibly; (ii) s is not J-closed yet admits an invariant J."""
    s = derived_and_split(h).semisimple_algebra()
    ci = len(irreducible_summands(s, seed)) > 1
    cii = real_class(s, seed) == RealClass.REAL_COMPLEX
    return SPartial(ci, cii)

"""Invariant subspaces of a linear Lie algebra and their Schur types over R."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..exactmat import Matrix, Subspace, linalg, polyops, rank_nullspace
from ..exactmat.linalg import PRIMES, ModularEchelon
from .linrep import LinRep, NotTotallyReducible, Undetermined
from .structure import centralizer_in, signature, trace_gram

__all__ = [
    "Summand",
    "irreducible_summands",
    "invariant_summands",
    "restrict",
    "spin",
    "module_commutant",
    "schur_type",
]

RETRIES = 8


@dataclass(frozen=True)
class Summand:
    """An invariant subspace W of R^n, the action on W and its Schur type.

    ``basis`` holds vectors of R^n; ``gens`` are the generator actions in
    those coordinates; ``kind`` is "R", "C" or "H" (End_h(W) over R).
    """

    basis: tuple
    gens: tuple
    kind: str
    endo: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def subspace(self, n: int) -> Subspace:
        return Subspace(n, self.basis, field="R")


def _bracket_mod_p(X: dict, g: dict, gT: dict, d: int, p: int) -> dict:
    """[X, g] mod p; X flat {i*d+j: v}, g and its transpose as row dicts."""
    out: dict[int, int] = {}
    for idx, v in X.items():
        a, b = divmod(idx, d)
        for c, w in g.get(b, {}).items():        # (Xg)_{ac} += X_ab g_bc
            k = a * d + c
            out[k] = (out.get(k, 0) + v * w) % p
        for e, w in gT.get(a, {}).items():       # (gX)_{eb} += g_ea X_ab
            k = e * d + b
            out[k] = (out.get(k, 0) - v * w) % p
    return {k: v for k, v in out.items() if v}


def _commutant_mod_p(gens, d: int, p: int = PRIMES[0]) -> list[Matrix] | None:
    """Commutant computed modulo p, lifted and certified.

    The kernel modulo p is never smaller than the rational one, so a set of
    lifted solutions that verifies exactly and has the modular dimension is a
    basis. Returns None when reconstruction or verification fails.
    """
    N = d * d
    mods = []
    for g in gens:
        rows: dict[int, dict[int, int]] = {}
        cols: dict[int, dict[int, int]] = {}
        for i, r in g.re.items():
            for j, v in r.items():
                if v.denominator % p == 0:
                    return None
                w = v.numerator * pow(v.denominator, -1, p) % p
                rows.setdefault(i, {})[j] = w
                cols.setdefault(j, {})[i] = w
        mods.append((rows, cols))
    cur = [{k: 1} for k in range(N)]
    for rows, cols in mods:
        if not cur:
            break
        imgs = [_bracket_mod_p(X, rows, cols, d, p) for X in cur]
        if not any(imgs):
            continue
        ech = ModularEchelon(p)
        for k, img in enumerate(imgs):
            row = dict(img)
            row[N + k] = 1
            ech.add(row)
        new = []
        for c, r in ech.pivots.items():
            if c < N:
                continue
            acc: dict[int, int] = {}
            for t, coef in r.items():
                for idx, v in cur[t - N].items():
                    acc[idx] = (acc.get(idx, 0) + coef * v) % p
            acc = {k: v for k, v in acc.items() if v}
            if acc:
                new.append(acc)
        cur = new
    ech = ModularEchelon(p)
    for X in cur:
        ech.add(X)
    if ech.rank() != len(cur):
        return None
    out = []
    for _, r in ech.reduced():
        vec = {}
        for k, v in r.items():
            q = linalg._ratrecon(v, p)
            if q is None:
                return None
            vec[k] = q
        out.append(Matrix.from_vec(vec, d))
    ints = [_integer_rows(g) for g in gens]
    for X in out:
        xi = _integer_rows(X)
        if any(not _commutes(xi, gi) for gi in ints):
            return None
    return out


def _integer_rows(M: Matrix) -> dict[int, dict[int, int]]:
    """Rows of a positive multiple of a real matrix with integer entries."""
    den = 1
    for r in M.re.values():
        for v in r.values():
            den = den * v.denominator // gcd(den, v.denominator)
    return {i: {j: int(v * den) for j, v in r.items()} for i, r in M.re.items() if r}


def _times(A: dict, B: dict) -> dict:
    out: dict[tuple[int, int], int] = {}
    for i, r in A.items():
        for k, a in r.items():
            for j, b in B.get(k, {}).items():
                out[(i, j)] = out.get((i, j), 0) + a * b
    return {key: v for key, v in out.items() if v}


def _commutes(A: dict, B: dict) -> bool:
    return _times(A, B) == _times(B, A)


_COMMUTANT_CACHE: dict = {}


def module_commutant(gens, d: int) -> list[Matrix]:
    """Canonical basis of the commutant of ``gens`` in gl(d); recent results are cached."""
    key = (d, tuple(gens))
    hit = _COMMUTANT_CACHE.get(key)
    if hit is not None:
        return list(hit)
    order = sorted(gens, key=lambda g: g.nnz())
    sol = _commutant_mod_p(order, d)
    if sol is None:
        start = [Matrix.unit(d, i, j) for i in range(d) for j in range(d)]
        sol = centralizer_in(start, order, d)
    sub = Subspace(d * d, [m.vec() for m in sol], field="R")
    out = [Matrix.from_vec(v, d) for v in sub.vectors()]
    if len(_COMMUTANT_CACHE) > 64:
        _COMMUTANT_CACHE.clear()
    _COMMUTANT_CACHE[key] = tuple(out)
    return out


def restrict(gens, sub: Subspace) -> list[Matrix]:
    """Action of ``gens`` on an invariant subspace, in its echelon basis."""
    d = sub.dim
    B = sub.vectors()
    out = []
    for g in gens:
        ent = {}
        for j, b in enumerate(B):
            for i, c in enumerate(sub.coordinates(g.apply(b))):
                if c:
                    ent[(i, j)] = c
        out.append(Matrix.from_dict(d, d, ent))
    return out


def _mod_p(M: Matrix, p: int) -> list[tuple[int, dict[int, int]]]:
    out = []
    for i, r in M.re.items():
        row = {j: x.numerator * pow(x.denominator, -1, p) % p for j, x in r.items()}
        out.append((i, {j: x for j, x in row.items() if x}))
    return out


def spin_dim_mod_p(v: dict, gens, d: int, p: int = PRIMES[0], mg=None) -> int:
    """Dimension of the spin of ``v`` computed modulo p: a lower bound for the
    rational dimension (rank can only drop under reduction)."""
    if mg is None:
        mg = [_mod_p(g, p) for g in gens]
    ech = ModularEchelon(p)
    w0 = {i: x.numerator * pow(x.denominator, -1, p) % p for i, x in v.items()}
    w0 = {i: x for i, x in w0.items() if x}
    if not w0 or ech.add(w0) is None:
        return 0
    queue = [w0]
    count = 1
    while queue and count < d:
        w = queue.pop()
        for g in mg:
            u = {}
            for i, row in g:
                acc = 0
                for j, x in row.items():
                    y = w.get(j)
                    if y:
                        acc += x * y
                acc %= p
                if acc:
                    u[i] = acc
            if u and ech.add(dict(u)) is not None:
                count += 1
                queue.append(u)
                if count == d:
                    break
    return count


def spin(v: dict, gens, d: int, mg=None) -> Subspace:
    """Smallest invariant subspace containing ``v``; ``mg`` caches the gens mod p."""
    if spin_dim_mod_p(v, gens, d, mg=mg) == d:
        return Subspace.full(d)
    basis = [v]
    red = linalg.rref(basis)
    queue = [v]
    while queue and len(red) < d:
        w = queue.pop()
        for g in gens:
            u = g.apply(w)
            if u and linalg.reduce_against(u, red):
                basis.append(u)
                queue.append(u)
                red = linalg.rref(basis)
                if len(red) == d:
                    break
    return Subspace(d, basis, field="R")


def _projection(E, U: Subspace, d: int) -> Matrix | None:
    """An equivariant projection P in span(E) with image U, or None."""
    k = len(E)
    rows, rhs = [], []
    for u in U.vectors():
        imgs = [A.apply(u) for A in E]
        for i in range(d):
            rows.append({a: im[i] for a, im in enumerate(imgs) if im.get(i)})
            rhs.append(Fraction(u.get(i, 0)))
    for i in range(d):
        res = [U.residue(A.apply({i: Fraction(1)})) for A in E]
        keys = set().union(*res) if res else set()
        for p in keys:
            rows.append({a: r[p] for a, r in enumerate(res) if r.get(p)})
            rhs.append(Fraction(0))
    x = linalg.solve(rows, rhs, k)
    if x is None:
        return None
    P = Matrix.zeros(d)
    for a, c in x.items():
        P = P + E[a].scale(c)
    return P


def _split_by(E, U: Subspace, d: int):
    """Split R^d as U + complement, or prove total reducibility fails."""
    if U.dim in (0, d):
        return None
    P = _projection(E, U, d)
    if P is None:
        raise NotTotallyReducible(f"invariant subspace of dim {U.dim} has no invariant complement")
    _, K = rank_nullspace(P)
    return [U, K]


def _candidates(E, rng, retries):
    yield from E
    for _ in range(retries):
        acc = Matrix.zeros(E[0].rows)
        for A in E:
            c = rng.randint(-3, 3)
            if c:
                acc = acc + A.scale(c)
        yield acc


def _split_with_element(A: Matrix, E, d: int):
    mp = polyops.minpoly(A)
    facs = polyops.factor(mp)
    if len(facs) > 1:
        parts = []
        for _, e in polyops.idempotent_polys(mp):
            Pk = polyops.poly_at(e, A)
            parts.append(Subspace(d, [c for c in _columns(Pk) if c], field="R"))
        return [p for p in parts if p.dim]
    f, mult = facs[0]
    if mult > 1:
        F = polyops.poly_at(f, A)
        U = Subspace(d, [c for c in _columns(F) if c], field="R")
        return _split_by(E, U, d)
    return None


def _columns(M: Matrix):
    cols = [dict() for _ in range(M.cols)]
    for i, r in M.re.items():
        for j, v in r.items():
            cols[j][i] = v
    return cols


def _spin_vectors(gens, d, rng, retries):
    for g in gens[:4]:
        for lam in polyops.rational_roots(polyops.minpoly(g)):
            _, K = rank_nullspace(g - Matrix.identity(d, lam))
            yield from K.vectors()[:2]
    for i in range(d):
        yield {i: Fraction(1)}
    for _ in range(retries):
        v = {i: Fraction(rng.randint(-3, 3)) for i in range(d)}
        yield {i: x for i, x in v.items() if x}


def _find_split(gens, E, d, rng, retries):
    if len(E) == 1:
        return None
    for A in _candidates(E, rng, retries):
        parts = _split_with_element(A, E, d)
        if parts:
            return parts
    mg = [_mod_p(g, PRIMES[0]) for g in gens]
    for v in _spin_vectors(gens, d, rng, retries):
        if not v:
            continue
        parts = _split_by(E, spin(v, gens, d, mg), d)
        if parts:
            return parts
    return None


def schur_type(E, d: int) -> str:
    """"R", "C" or "H" for a commutant that certifies irreducibility over R."""
    k = len(E)
    if k == 1:
        return "R"
    if k == 2:
        A = next(M for M in E if M != Matrix.identity(d, M[0, 0]))
        facs = polyops.factor(polyops.minpoly(A))
        if len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree() == 2:
            c = [Fraction(int(q.p), int(q.q)) for q in facs[0][0].coeffs()]
            if c[1] ** 2 - 4 * c[0] * c[2] < 0:
                return "C"
    if k == 4:
        if all(A.bracket(B).is_zero() for A in E for B in E):
            raise Undetermined("commutative commutant of dim 4")
        # trace-zero part of a quaternion algebra; negative definite iff H
        pure = _trace_zero(E, d)
        pos, neg, zero = signature(trace_gram(pure))
        if neg == 3 and pos == 0 and zero == 0:
            return "H"
    raise Undetermined(f"commutant of dim {k} does not certify irreducibility over R")


def _trace_zero(E, d):
    tr = [M.trace().re for M in E]
    piv = next(a for a, t in enumerate(tr) if t)
    out = []
    for a, M in enumerate(E):
        if a == piv:
            continue
        out.append(M - E[piv].scale(Fraction(tr[a]) / tr[piv]) if tr[a] else M)
    return out


def _lift(basis, sub: Subspace):
    """Vectors of R^n for a subspace given in coordinates of ``basis``."""
    out = []
    for v in sub.vectors():
        acc: dict[int, Fraction] = {}
        for j, c in v.items():
            for i, x in basis[j].items():
                acc[i] = acc.get(i, 0) + c * x
        out.append({i: x for i, x in acc.items() if x})
    return out


def irreducible_summands(h: LinRep, seed: int = 0, retries: int = RETRIES) -> list[Summand]:
    """Decompose R^n into irreducible invariant subspaces with Schur types.

    Splits come from primary idempotents of commutant elements and from
    spinning vectors with an equivariant projection onto the span.
    """
    rng = random.Random(seed)
    n = h.n
    gens = list(h.gens) or [Matrix.zeros(n)]
    work = [([{i: Fraction(1)} for i in range(n)], gens)]
    done = []
    while work:
        basis, g = work.pop()
        d = len(basis)
        E = module_commutant(g, d)
        parts = _find_split(g, E, d, rng, retries)
        if parts is None:
            done.append(Summand(tuple(basis), tuple(g), schur_type(E, d), tuple(E)))
            continue
        for U in parts:
            work.append((_lift(basis, U), restrict(g, U)))
    done.sort(key=lambda s: (-s.dim, min(min(v) for v in s.basis)))
    return done


def invariant_summands(h: LinRep, seed: int = 0, retries: int = RETRIES) -> list[Subspace]:
    return [s.subspace(h.n) for s in irreducible_summands(h, seed, retries)]

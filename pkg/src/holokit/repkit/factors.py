"""Abstract factors of a reductive algebra, their representations, and assembly.

A ``Factor`` is a simple (or gl-type, or one-dimensional central) real Lie
algebra with a real basis given by matrices of its defining representation.
A ``FactorRep`` lists images of that real basis on a space over R or C.
A ``Piece`` is a representation of the whole product algebra (an outer
tensor product of factor representations); a direct sum of pieces is
assembled into a real ``LinRep``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactmat import I, Matrix, Scalar, Subspace, block_diag, kron, realify_block
from ..liecore import LinRep

__all__ = ["Factor", "FactorRep", "Piece", "tensor", "direct_sum_linrep", "promote"]


@dataclass
class Factor:
    """``field``: "R", "C" or "H" (the defining space); ``complex_alg``: the
    abstract algebra is complex, so its real basis is ``basis`` + i*``basis``.
    For "H" factors ``basis`` holds quaternionic grids.
    """

    name: str
    field: str
    m: int
    basis: list
    complex_alg: bool = False
    meta: dict = field(default_factory=dict)

    def real_basis(self) -> list:
        if not self.complex_alg:
            return list(self.basis)
        return list(self.basis) + [X.scale(I) for X in self.basis]

    @property
    def real_dim(self) -> int:
        return len(self.basis) * (2 if self.complex_alg else 1)


@dataclass
class FactorRep:
    """Images of a factor's real basis on a ``dim``-dimensional space over ``field``.

    ``J`` is an optional complex structure of a real space commuting with
    the images (kept for quaternionic and realified representations).
    """

    field: str
    dim: int
    images: list
    J: Matrix | None = None


@dataclass
class Piece:
    field: str
    dim: int
    images: dict  # factor index -> list of matrices
    J: Matrix | None = None


def promote(images, field):
    return images  # real matrices are valid complex matrices as they stand


def _lift(fidx: int, rep: FactorRep) -> Piece:
    return Piece(rep.field, rep.dim, {fidx: list(rep.images)}, rep.J)


def tensor(*parts) -> Piece:
    """Outer tensor product of pieces (or (index, FactorRep) pairs).

    A real factor tensored with a complex one is complexified first.
    """
    ps = [p if isinstance(p, Piece) else _lift(*p) for p in parts]
    fld = "C" if any(p.field == "C" for p in ps) else "R"
    acc = ps[0]
    for p in ps[1:]:
        Ia = Matrix.identity(acc.dim)
        Ib = Matrix.identity(p.dim)
        imgs = {}
        for f, lst in acc.images.items():
            imgs[f] = [kron(X, Ib) for X in lst]
        for f, lst in p.images.items():
            if f in imgs:
                raise ValueError("a factor may occur once per tensor product")
            imgs[f] = [kron(Ia, X) for X in lst]
        J = None
        if fld == "R" and (acc.J is not None) != (p.J is not None):
            J = kron(acc.J, Ib) if acc.J is not None else kron(Ia, p.J)
        acc = Piece(fld, acc.dim * p.dim, imgs, J)
    acc.field = fld
    return acc


def direct_sum_linrep(factors: list[Factor], pieces: list[Piece], name="", meta=None,
                      complex_structure: bool | None = None, combos=None) -> LinRep:
    """Assemble a direct sum of pieces into a real linear Lie algebra.

    Complex pieces are realified and carry J = realified i*Id; real pieces
    keep their own J when every piece has one. ``combos[f]``, when given,
    replaces the real basis of factor f by these combinations of it.
    """
    fld = "C" if any(p.field == "C" for p in pieces) else "R"
    gens = []
    for f, fac in enumerate(factors):
        images = []
        for a in range(fac.real_dim):
            blocks = []
            for p in pieces:
                lst = p.images.get(f)
                blocks.append(lst[a] if lst is not None else Matrix.zeros(p.dim))
            X = block_diag(*blocks)
            images.append(realify_block(X) if fld == "C" else X)
        if combos is None:
            gens.extend(images)
            continue
        for c in combos[f]:
            acc = Matrix.zeros(images[0].rows)
            for a, x in c.items():
                acc = acc + images[a].scale(x)
            gens.append(acc)
    if fld == "C":
        n = 2 * sum(p.dim for p in pieces)
        J = realify_block(Matrix.identity(n // 2, I))
    else:
        n = sum(p.dim for p in pieces)
        J = block_diag(*[p.J for p in pieces]) if all(p.J is not None for p in pieces) else None
    if complex_structure is False:
        J = None
    h = LinRep.from_matrices(n, gens, complex_structure=J, meta=meta or {}, name=name)
    return h


# -- functors on factor representations -------------------------------------

def _entries(X: Matrix):
    return X.entries()


def dual(rep: FactorRep) -> FactorRep:
    return FactorRep(rep.field, rep.dim, [-X.T for X in rep.images])


def scaled(rep: FactorRep, lam) -> FactorRep:
    s = Scalar.coerce(lam)
    fld = "C" if (s.im or rep.field == "C") else "R"
    return FactorRep(fld, rep.dim, [X.scale(s) for X in rep.images])


def trivial(fac: Factor, field_: str = "R") -> FactorRep:
    return FactorRep(field_, 1, [Matrix.zeros(1) for _ in range(fac.real_dim)])


def _multisets(d, k, start=0):
    if k == 0:
        yield ()
        return
    for i in range(start, d):
        for rest in _multisets(d, k - 1, i):
            yield (i,) + rest


def _subsets(d, k, start=0):
    if k == 0:
        yield ()
        return
    for i in range(start, d):
        for rest in _subsets(d, k - 1, i + 1):
            yield (i,) + rest


def sym_power(rep: FactorRep, k: int) -> FactorRep:
    """Sym^k acting by derivations on the monomial basis (sorted multi-indices)."""
    mons = list(_multisets(rep.dim, k))
    index = {m: a for a, m in enumerate(mons)}
    out = []
    for X in rep.images:
        cols = {}
        for (j, i), v in _entries(X).items():
            cols.setdefault(i, []).append((j, v))
        ent = {}
        for a, mon in enumerate(mons):
            for t, i in enumerate(mon):
                for j, v in cols.get(i, ()):
                    new = tuple(sorted(mon[:t] + (j,) + mon[t + 1:]))
                    key = (index[new], a)
                    ent[key] = ent.get(key, Scalar(0)) + v
        out.append(Matrix.from_dict(len(mons), len(mons), ent))
    return FactorRep(rep.field, len(mons), out)


def ext_power(rep: FactorRep, k: int) -> FactorRep:
    """Ext^k on the basis of increasing index tuples."""
    mons = list(_subsets(rep.dim, k))
    index = {m: a for a, m in enumerate(mons)}
    out = []
    for X in rep.images:
        cols = {}
        for (j, i), v in _entries(X).items():
            cols.setdefault(i, []).append((j, v))
        ent = {}
        for a, mon in enumerate(mons):
            for t, i in enumerate(mon):
                for j, v in cols.get(i, ()):
                    if j in mon and j != i:
                        continue
                    new = list(mon)
                    new[t] = j
                    # sort with sign
                    sign = 1
                    arr = new
                    for x in range(len(arr)):
                        for y in range(len(arr) - 1 - x):
                            if arr[y] > arr[y + 1]:
                                arr[y], arr[y + 1] = arr[y + 1], arr[y]
                                sign = -sign
                    key = (index[tuple(arr)], a)
                    ent[key] = ent.get(key, Scalar(0)) + v * sign
        out.append(Matrix.from_dict(len(mons), len(mons), ent))
    return FactorRep(rep.field, len(mons), out)


def restrict_rep(rep: FactorRep, vectors) -> FactorRep:
    """Restriction to an invariant subspace spanned by ``vectors`` (over rep.field)."""
    sub = Subspace(rep.dim, vectors, field="C" if rep.field == "C" else "R")
    B = sub.vectors()
    d = sub.dim
    out = []
    for X in rep.images:
        ent = {}
        for j, b in enumerate(B):
            img = {}
            for (r, c), v in X.entries().items():
                x = b.get(c)
                if x:
                    img[r] = img.get(r, Scalar(0)) + v * x
            img = {r: v for r, v in img.items() if v}
            for i, c in enumerate(sub.coordinates(img)):
                if c:
                    ent[(i, j)] = c
        out.append(Matrix.from_dict(d, d, ent))
    return FactorRep(rep.field, d, out)


def sym_form_action(images, constraints, symmetric: bool) -> FactorRep:
    """Action X.H = XH + HX^T on {H : H^T = +-H, [H, C] = 0 for C in constraints}.

    Over real block models this gives Sym^2/Ext^2 and the Hermitian and
    anti-Hermitian matrices over C or H.
    """
    from ..liecore import centralizer_in

    n = images[0].rows
    base = []
    for i in range(n):
        if symmetric:
            base.append(Matrix.unit(n, i, i))
        for j in range(i + 1, n):
            base.append(Matrix.unit(n, i, j) + Matrix.unit(n, j, i).scale(1 if symmetric else -1))
    S = centralizer_in(base, constraints, n) if constraints else base
    sub = Subspace(n * n, [H.vec() for H in S], field="R")
    Hs = [Matrix.from_vec(v, n) for v in sub.vectors()]
    d = len(Hs)
    out = []
    for X in images:
        ent = {}
        for j, H in enumerate(Hs):
            Y = X @ H + H @ X.T
            for i, c in enumerate(sub.coordinates(Y.vec())):
                if c:
                    ent[(i, j)] = c
        out.append(Matrix.from_dict(d, d, ent))
    return FactorRep("R", d, out)


def realify_rep(rep: FactorRep) -> FactorRep:
    if rep.field == "R":
        return rep
    J = realify_block(Matrix.identity(rep.dim, I))
    return FactorRep("R", 2 * rep.dim, [realify_block(X) for X in rep.images], J)


def contraction_kernel(rep3: FactorRep, omega: Matrix, d: int) -> list[dict]:
    """Kernel of Ext^3 -> V, a^b^c -> w(a,b)c - w(a,c)b + w(b,c)a."""
    mons = list(_subsets(d, 3))
    rows: dict[int, dict[int, Fraction]] = {}
    for col, (a, b, c) in enumerate(mons):
        for (x, y, z, s) in ((a, b, c, 1), (a, c, b, -1), (b, c, a, 1)):
            w = omega[x, y].re
            if w:
                rows.setdefault(z, {})[col] = rows.get(z, {}).get(col, 0) + s * w
    from ..exactmat import linalg

    return linalg.nullspace(list(rows.values()), len(mons))

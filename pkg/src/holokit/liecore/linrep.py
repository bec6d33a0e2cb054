"""Linear Lie algebras h in gl(n, R) given by a basis of generator matrices."""
from __future__ import annotations

import random
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from ..exactmat import Matrix, Subspace, block_diag, linalg
from ..exactmat.linalg import ModularEchelon, integer_row

__all__ = [
    "LinRep",
    "NotTotallyReducible",
    "NotReductive",
    "Undetermined",
    "NotClosed",
    "lie_closure",
    "independent_subset",
    "direct_product",
    "random_conjugator",
]


class NotTotallyReducible(Exception):
    """An invariant subspace exists with no invariant complement."""


class NotReductive(Exception):
    """center + derived algebra does not span the algebra."""


class Undetermined(Exception):
    """Rational methods cannot settle a question that is posed over R."""


class NotClosed(ValueError):
    """The generators do not span a Lie subalgebra."""


def independent_subset(mats: list[Matrix]) -> list[Matrix]:
    """Greedy maximal linearly independent sublist (exact).

    Candidates are screened modulo a prime; rows independent mod p are
    independent over Q, and the rest are then checked exactly against the
    span of the kept rows.
    """
    mats = [m for m in mats if not m.is_zero()]
    ech = ModularEchelon()
    keep = []
    rest = []
    for m in mats:
        if ech.add(integer_row(m.vec())) is not None:
            keep.append(m)
        else:
            rest.append(m)
    while True:
        red = linalg.rref([k.vec() for k in keep])
        missed = [m for m in rest if linalg.reduce_against(m.vec(), red)]
        if not missed:
            return keep
        m = missed[0]
        keep.append(m)
        rest = [r for r in rest if r is not m]


class LinRep:
    """A Lie subalgebra of gl(n, R) with an independent generator basis.

    ``complex_structure`` is an optional J with J^2 = -I commuting with every
    generator; ``meta`` carries free-form provenance tags.
    """

    def __init__(self, space_dim: int, gens, complex_structure: Matrix | None = None,
                 meta: dict | None = None, name: str = "", check: bool = True):
        self.space_dim = int(space_dim)
        self.gens = tuple(gens)
        self.complex_structure = complex_structure
        self.meta = dict(meta or {})
        self.name = name
        for g in self.gens:
            if g.shape != (self.space_dim, self.space_dim):
                raise ValueError(f"generator of shape {g.shape} in gl({self.space_dim})")
            if not g.is_real():
                raise ValueError("generators must be real matrices")
        if check:
            if self.span.dim != len(self.gens):
                raise ValueError("generators are linearly dependent")
            J = complex_structure
            if J is not None:
                n = self.space_dim
                if J @ J != Matrix.identity(n, -1):
                    raise ValueError("complex structure must square to -I")
                if any(not J.bracket(g).is_zero() for g in self.gens):
                    raise ValueError("complex structure must commute with the algebra")

    @classmethod
    def from_matrices(cls, space_dim, mats, **kw) -> "LinRep":
        return cls(space_dim, independent_subset(list(mats)), **kw)

    # -- basic data ---------------------------------------------------
    @property
    def n(self) -> int:
        return self.space_dim

    @property
    def dim(self) -> int:
        return len(self.gens)

    def __len__(self):
        return self.dim

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"LinRep{tag}(n={self.space_dim}, dim={self.dim})"

    @cached_property
    def span(self) -> Subspace:
        return Subspace(self.space_dim ** 2, [g.vec() for g in self.gens], field="R")

    @cached_property
    def _coord_red(self):
        N = self.space_dim ** 2
        rows = []
        for a, g in enumerate(self.gens):
            v = g.vec()
            v[N + a] = Fraction(1)
            rows.append(v)
        return linalg.rref(rows)

    def contains(self, m: Matrix) -> bool:
        return self.span.contains(m.vec())

    def coords(self, m: Matrix) -> list[Fraction]:
        """Coefficients of ``m`` with respect to ``gens``."""
        N = self.space_dim ** 2
        res = linalg.reduce_against(m.vec(), self._coord_red)
        if any(k < N for k in res):
            raise ValueError("matrix not in the algebra")
        return [-res.get(N + a, Fraction(0)) for a in range(self.dim)]

    def element(self, coeffs) -> Matrix:
        acc = Matrix.zeros(self.space_dim)
        for c, g in zip(coeffs, self.gens):
            if c:
                acc = acc + g.scale(c)
        return acc

    def is_closed(self) -> bool:
        return all(self.contains(a.bracket(b)) for a, b in combinations(self.gens, 2))

    def check_closed(self):
        for a, b in combinations(self.gens, 2):
            if not self.contains(a.bracket(b)):
                raise NotClosed("bracket leaves the span")
        return self

    @cached_property
    def generating_order(self) -> list[Matrix]:
        """Generators sorted sparsest first (cheap equation sets go first)."""
        return sorted(self.gens, key=lambda g: g.nnz())

    # -- derived constructions ----------------------------------------
    def with_meta(self, **kw) -> "LinRep":
        meta = dict(self.meta)
        meta.update(kw)
        return LinRep(self.space_dim, self.gens, self.complex_structure, meta, self.name, check=False)

    def renamed(self, name: str) -> "LinRep":
        return LinRep(self.space_dim, self.gens, self.complex_structure, self.meta, name, check=False)

    def conjugate(self, P: Matrix, P_inv: Matrix | None = None) -> "LinRep":
        """The algebra P^-1 h P (the same representation in new coordinates)."""
        if P_inv is None:
            P_inv = inverse(P)
        J = self.complex_structure
        J2 = None if J is None else P_inv @ J @ P
        return LinRep(self.space_dim, [P_inv @ g @ P for g in self.gens], J2, self.meta, self.name, check=False)

    def subalgebra(self, mats, name="") -> "LinRep":
        return LinRep.from_matrices(self.space_dim, mats, name=name)


def inverse(P: Matrix) -> Matrix:
    n = P.rows
    rows = []
    for i in range(n):
        r = {j: v for j, v in P.re.get(i, {}).items()}
        r[n + i] = Fraction(1)
        rows.append(r)
    red = linalg.rref(rows)
    if len(red) != n or any(c >= n for c, _ in red):
        raise ZeroDivisionError("singular change of basis")
    ent = {}
    for c, r in red:
        for k, v in r.items():
            if k >= n:
                ent[(c, k - n)] = v
    return Matrix.from_dict(n, n, ent)


def lie_closure(seed, space_dim: int | None = None, name: str = "") -> LinRep:
    """Smallest bracket-closed subspace containing ``seed``."""
    seed = list(seed)
    if space_dim is None:
        if not seed:
            raise ValueError("empty seed needs space_dim")
        space_dim = seed[0].rows
    for m in seed:
        if m.shape != (space_dim, space_dim):
            raise ValueError("seed matrices must be square of equal size")
    basis = independent_subset(seed)
    red = linalg.rref([b.vec() for b in basis])
    frontier = list(basis)
    while frontier:
        new = []
        for a in frontier:
            for b in basis:
                c = a.bracket(b)
                if c.is_zero():
                    continue
                if linalg.reduce_against(c.vec(), red):
                    basis.append(c)
                    new.append(c)
                    red = linalg.rref([x.vec() for x in basis])
        frontier = new
    return LinRep(space_dim, basis, name=name)


def direct_product(*reps: LinRep, name: str = "") -> LinRep:
    """Block-diagonal direct product of linear Lie algebras."""
    dims = [r.space_dim for r in reps]
    gens = []
    for k, r in enumerate(reps):
        for g in r.gens:
            blocks = [g if l == k else Matrix.zeros(dims[l]) for l in range(len(reps))]
            gens.append(block_diag(*blocks))
    return LinRep(sum(dims), gens, name=name, check=False)


def random_conjugator(n: int, seed: int = 0, spread: int = 2) -> Matrix:
    """An invertible integer matrix with small entries (unit triangular product)."""
    rng = random.Random(seed)
    L = Matrix.from_dict(n, n, {**{(i, i): 1 for i in range(n)},
                                **{(i, j): rng.randint(-spread, spread) for i in range(n) for j in range(i)}})
    U = Matrix.from_dict(n, n, {**{(i, i): 1 for i in range(n)},
                                **{(i, j): rng.randint(-spread, spread) for i in range(n) for j in range(i + 1, n)}})
    perm = list(range(n))
    rng.shuffle(perm)
    Pm = Matrix.from_dict(n, n, {(i, perm[i]): 1 for i in range(n)})
    return Pm @ L @ U

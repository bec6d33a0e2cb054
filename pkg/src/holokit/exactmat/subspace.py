"""Canonical subspaces of Q^n and Q(i)^n."""
from __future__ import annotations

from fractions import Fraction

from . import linalg
from .scalar import Scalar

__all__ = ["Subspace", "AmbientMismatch", "complex_rref"]


class AmbientMismatch(ValueError):
    pass


def complex_rref(rows) -> list[tuple[int, dict[int, Scalar]]]:
    """Plain Gauss-Jordan over Q(i); used for the small complex subspaces."""
    work = []
    for r in rows:
        d = {k: Scalar.coerce(v) for k, v in r.items()}
        d = {k: v for k, v in d.items() if v}
        if d:
            work.append(d)
    piv: dict[int, dict[int, Scalar]] = {}
    for r in work:
        for c in sorted(k for k in r if k in piv):
            a = r.get(c)
            if not a:
                continue
            for k, v in piv[c].items():
                nv = r.get(k, Scalar(0)) - a * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if not r:
            continue
        c = min(r)
        inv = Scalar(1) / r[c]
        r = {k: v * inv for k, v in r.items()}
        for pc, pr in piv.items():
            a = pr.get(c)
            if a:
                for k, v in r.items():
                    nv = pr.get(k, Scalar(0)) - a * v
                    if nv:
                        pr[k] = nv
                    else:
                        pr.pop(k, None)
        piv[c] = r
    return [(c, piv[c]) for c in sorted(piv)]


def _is_complex(vectors) -> bool:
    for v in vectors:
        for x in v.values():
            if isinstance(x, Scalar):
                if x.im:
                    return True
    return False


def _realvals(v):
    out = {}
    for k, x in v.items():
        if isinstance(x, Scalar):
            x = x.re
        if x:
            out[k] = Fraction(x)
    return out


class Subspace:
    """A linear subspace stored as its reduced row echelon basis.

    Two equal subspaces have identical ``basis`` tuples, so equality is a
    plain comparison. ``field`` is ``"R"`` (rational entries) or ``"C"``
    (Gaussian-rational entries).
    """

    __slots__ = ("ambient_dim", "field", "_red", "basis")

    def __init__(self, ambient_dim: int, vectors=(), field: str | None = None, _reduced=None):
        self.ambient_dim = ambient_dim
        vectors = [dict(v) for v in vectors]
        for v in vectors:
            if v and (max(v) >= ambient_dim or min(v) < 0):
                raise AmbientMismatch("vector index outside ambient dimension")
        if field is None:
            field = "C" if _is_complex(vectors) else "R"
        self.field = field
        if _reduced is not None:
            red = _reduced
        elif field == "R":
            red = linalg.rref([_realvals(v) for v in vectors])
        else:
            red = complex_rref(vectors)
        self._red = red
        self.basis = tuple(tuple(sorted(r.items())) for _, r in red)

    @classmethod
    def zero(cls, n, field="R"):
        return cls(n, (), field=field)

    @classmethod
    def full(cls, n, field="R"):
        if field != "R":
            return cls(n, ({i: 1} for i in range(n)), field=field)
        return cls(n, (), field="R", _reduced=[(i, {i: Fraction(1)}) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self._red)

    def vectors(self) -> list[dict]:
        return [dict(r) for _, r in self._red]

    def reduced(self):
        return self._red

    def _coerce_vec(self, v):
        if self.field == "R":
            return _realvals(v)
        return {k: Scalar.coerce(x) for k, x in v.items() if x}

    def residue(self, v) -> dict:
        v = self._coerce_vec(v)
        if self.field == "R":
            return linalg.reduce_against(v, self._red)
        acc = dict(v)
        for c, r in self._red:
            a = acc.get(c)
            if a:
                for k, x in r.items():
                    nv = acc.get(k, Scalar(0)) - a * x
                    if nv:
                        acc[k] = nv
                    else:
                        acc.pop(k, None)
        return acc

    def contains(self, v) -> bool:
        return not self.residue(v)

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v) -> list:
        """Coefficients of ``v`` in the stored basis; ValueError if outside."""
        if self.residue(v):
            raise ValueError("vector not in subspace")
        v = self._coerce_vec(v)
        zero = Fraction(0) if self.field == "R" else Scalar(0)
        return [v.get(c, zero) for c, _ in self._red]

    def _pair(self, o):
        if not isinstance(o, Subspace):
            raise TypeError("expected a Subspace")
        if o.ambient_dim != self.ambient_dim:
            raise AmbientMismatch(f"ambient {self.ambient_dim} vs {o.ambient_dim}")
        return "C" if "C" in (self.field, o.field) else "R"

    def __add__(self, o):
        f = self._pair(o)
        return Subspace(self.ambient_dim, self.vectors() + o.vectors(), field=f)

    def annihilator(self) -> "Subspace":
        """{w : sum_k w_k v_k = 0 for all v in self} (bilinear pairing)."""
        n = self.ambient_dim
        if self.field == "R":
            return Subspace(n, linalg.nullspace([r for _, r in self._red], n), field="R")
        pivs = {c for c, _ in self._red}
        out = []
        for f in range(n):
            if f in pivs:
                continue
            v = {f: Scalar(1)}
            for c, r in self._red:
                a = r.get(f)
                if a:
                    v[c] = -a
            out.append(v)
        return Subspace(n, out, field="C")

    def intersection(self, o) -> "Subspace":
        f = self._pair(o)
        a = self if self.field == f else Subspace(self.ambient_dim, self.vectors(), field=f)
        b = o if o.field == f else Subspace(o.ambient_dim, o.vectors(), field=f)
        return (a.annihilator() + b.annihilator()).annihilator()

    __and__ = intersection

    def issubset(self, o) -> bool:
        self._pair(o)
        return all(o.contains(v) for v in self.vectors())

    __le__ = issubset

    def __eq__(self, o):
        if not isinstance(o, Subspace):
            return NotImplemented
        self._pair(o)
        if self.field != o.field:
            return self.dim == o.dim and self.issubset(o)
        return self.basis == o.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"

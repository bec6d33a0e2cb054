"""Exact matrices over Q(i) with dict-of-rows storage."""
from __future__ import annotations

from fractions import Fraction

from .scalar import Scalar, as_fraction

__all__ = ["Matrix", "block_diag", "kron", "realify_block"]


def _clean(rows):
    return {i: r for i, r in rows.items() if r}


def _addto(acc, i, j, v):
    row = acc.get(i)
    if row is None:
        acc[i] = {j: v}
        return
    nv = row.get(j, 0) + v
    if nv:
        row[j] = nv
    else:
        row.pop(j, None)


def _mul_parts(a, b):
    out = {}
    for i, ra in a.items():
        acc = {}
        for k, x in ra.items():
            rb = b.get(k)
            if not rb:
                continue
            for j, y in rb.items():
                acc[j] = acc.get(j, 0) + x * y
        acc = {j: v for j, v in acc.items() if v}
        if acc:
            out[i] = acc
    return out


def _add_parts(a, b, sign=1):
    out = {i: dict(r) for i, r in a.items()}
    for i, r in b.items():
        for j, v in r.items():
            _addto(out, i, j, v if sign == 1 else -v)
    return _clean(out)


def _scale_parts(a, c):
    if c == 0:
        return {}
    return {i: {j: v * c for j, v in r.items()} for i, r in a.items()}


class Matrix:
    """Sparse exact matrix; ``re``/``im`` hold nonzero rational entries by row.

    Instances are treated as immutable; every operation returns a new matrix.
    """

    __slots__ = ("rows", "cols", "re", "im", "_hash")

    def __init__(self, rows: int, cols: int, re=None, im=None):
        self.rows = rows
        self.cols = cols
        self.re = _clean(re or {})
        self.im = _clean(im or {})
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def zeros(cls, rows, cols=None):
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n, scale=1):
        s = Scalar.coerce(scale)
        re = {i: {i: s.re} for i in range(n)} if s.re else {}
        im = {i: {i: s.im} for i in range(n)} if s.im else {}
        return cls(n, n, re, im)

    @classmethod
    def unit(cls, n, i, j, value=1, cols=None):
        s = Scalar.coerce(value)
        m = n if cols is None else cols
        re = {i: {j: s.re}} if s.re else {}
        im = {i: {j: s.im}} if s.im else {}
        return cls(n, m, re, im)

    @classmethod
    def from_rows(cls, grid):
        grid = [list(r) for r in grid]
        nr = len(grid)
        nc = len(grid[0]) if grid else 0
        re, im = {}, {}
        for i, r in enumerate(grid):
            if len(r) != nc:
                raise ValueError("ragged matrix rows")
            for j, x in enumerate(r):
                s = Scalar.coerce(x)
                if s.re:
                    re.setdefault(i, {})[j] = s.re
                if s.im:
                    im.setdefault(i, {})[j] = s.im
        return cls(nr, nc, re, im)

    @classmethod
    def from_dict(cls, rows, cols, entries):
        """``entries``: {(i, j): value} with rational or Scalar values."""
        re, im = {}, {}
        for (i, j), x in entries.items():
            s = x if isinstance(x, Scalar) else None
            if s is None:
                v = as_fraction(x)
                if v:
                    _addto(re, i, j, v)
                continue
            if s.re:
                _addto(re, i, j, s.re)
            if s.im:
                _addto(im, i, j, s.im)
        return cls(rows, cols, re, im)

    # -- access -------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def is_real(self):
        return not self.im

    def is_zero(self):
        return not self.re and not self.im

    def __getitem__(self, ij):
        i, j = ij
        return Scalar(self.re.get(i, {}).get(j, 0), self.im.get(i, {}).get(j, 0))

    def entries(self):
        """Nonzero entries as ``{(i, j): Scalar}``."""
        out = {}
        for i, r in self.re.items():
            for j, v in r.items():
                out[(i, j)] = Scalar(v, 0)
        for i, r in self.im.items():
            for j, v in r.items():
                out[(i, j)] = Scalar(out[(i, j)].re if (i, j) in out else 0, v)
        return out

    def nnz(self):
        keys = {(i, j) for i, r in self.re.items() for j in r}
        keys |= {(i, j) for i, r in self.im.items() for j in r}
        return len(keys)

    def to_rows(self):
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def vec(self) -> dict[int, Fraction]:
        """Row-major coordinate vector of a real matrix."""
        if self.im:
            raise ValueError("vec() of a complex matrix; use realify or cvec")
        c = self.cols
        return {i * c + j: v for i, r in self.re.items() for j, v in r.items()}

    def cvec(self) -> dict[int, Scalar]:
        c = self.cols
        return {i * c + j: s for (i, j), s in self.entries().items()}

    @classmethod
    def from_vec(cls, vec, rows, cols=None):
        cols = rows if cols is None else cols
        ent = {}
        for k, v in vec.items():
            ent[divmod(k, cols)] = v
        return cls.from_dict(rows, cols, ent)

    # -- arithmetic ---------------------------------------------------
    def _check(self, o):
        if self.shape != o.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {o.shape}")

    def __add__(self, o):
        self._check(o)
        return Matrix(self.rows, self.cols, _add_parts(self.re, o.re), _add_parts(self.im, o.im))

    def __sub__(self, o):
        self._check(o)
        return Matrix(self.rows, self.cols, _add_parts(self.re, o.re, -1), _add_parts(self.im, o.im, -1))

    def __neg__(self):
        return Matrix(self.rows, self.cols, _scale_parts(self.re, -1), _scale_parts(self.im, -1))

    def scale(self, c):
        s = Scalar.coerce(c)
        if s.im == 0:
            return Matrix(self.rows, self.cols, _scale_parts(self.re, s.re), _scale_parts(self.im, s.re))
        re = _add_parts(_scale_parts(self.re, s.re), _scale_parts(self.im, s.im), -1)
        im = _add_parts(_scale_parts(self.re, s.im), _scale_parts(self.im, s.re))
        return Matrix(self.rows, self.cols, re, im)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, o):
        if self.cols != o.rows:
            raise ValueError(f"cannot multiply {self.shape} by {o.shape}")
        if not self.im and not o.im:
            return Matrix(self.rows, o.cols, _mul_parts(self.re, o.re))
        re = _add_parts(_mul_parts(self.re, o.re), _mul_parts(self.im, o.im), -1)
        im = _add_parts(_mul_parts(self.re, o.im), _mul_parts(self.im, o.re))
        return Matrix(self.rows, o.cols, re, im)

    def __mul__(self, o):
        if isinstance(o, Matrix):
            return self @ o
        return self.scale(o)

    def apply(self, v: dict) -> dict:
        """Matrix times a sparse real column vector ``{index: value}``."""
        out = {}
        for i, r in self.re.items():
            s = 0
            for j, x in r.items():
                y = v.get(j)
                if y:
                    s += x * y
            if s:
                out[i] = s
        return out

    def bracket(self, o):
        return self @ o - o @ self

    def transpose(self):
        def tr(part):
            out = {}
            for i, r in part.items():
                for j, v in r.items():
                    out.setdefault(j, {})[i] = v
            return out

        return Matrix(self.cols, self.rows, tr(self.re), tr(self.im))

    @property
    def T(self):
        return self.transpose()

    def conj(self):
        return Matrix(self.rows, self.cols, self.re, _scale_parts(self.im, -1))

    def H(self):
        return self.conj().transpose()

    def trace(self) -> Scalar:
        return Scalar(
            sum(r.get(i, 0) for i, r in self.re.items()),
            sum(r.get(i, 0) for i, r in self.im.items()),
        )

    def real_part(self):
        return Matrix(self.rows, self.cols, self.re)

    def imag_part(self):
        return Matrix(self.rows, self.cols, self.im)

    def submatrix(self, rows, cols):
        ri = {r: k for k, r in enumerate(rows)}
        ci = {c: k for k, c in enumerate(cols)}

        def cut(part):
            out = {}
            for i, r in part.items():
                if i in ri:
                    row = {ci[j]: v for j, v in r.items() if j in ci}
                    if row:
                        out[ri[i]] = row
            return out

        return Matrix(len(rows), len(cols), cut(self.re), cut(self.im))

    def realify(self):
        """Q(i)-linear m x m matrix as a real 2m x 2m matrix.

        Coordinates interleave (Re z_k, Im z_k); ``a+bi`` becomes [[a,-b],[b,a]].
        """
        return realify_block(self)

    def __eq__(self, o):
        if not isinstance(o, Matrix):
            return NotImplemented
        return self.shape == o.shape and self.re == o.re and self.im == o.im

    def __hash__(self):
        if self._hash is None:
            items = tuple(sorted((i, j, v) for i, r in self.re.items() for j, v in r.items()))
            iitems = tuple(sorted((i, j, v) for i, r in self.im.items() for j, v in r.items()))
            self._hash = hash((self.rows, self.cols, items, iitems))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def pretty(self):
        cells = [[str(self[i, j]) for j in range(self.cols)] for i in range(self.rows)]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)


def realify_block(m: Matrix) -> Matrix:
    re = {}
    for i, r in m.re.items():
        for j, a in r.items():
            _addto(re, 2 * i, 2 * j, a)
            _addto(re, 2 * i + 1, 2 * j + 1, a)
    for i, r in m.im.items():
        for j, b in r.items():
            _addto(re, 2 * i, 2 * j + 1, -b)
            _addto(re, 2 * i + 1, 2 * j, b)
    return Matrix(2 * m.rows, 2 * m.cols, re)


def block_diag(*blocks: Matrix) -> Matrix:
    re, im = {}, {}
    r0 = c0 = 0
    for b in blocks:
        for i, r in b.re.items():
            re[r0 + i] = {c0 + j: v for j, v in r.items()}
        for i, r in b.im.items():
            im[r0 + i] = {c0 + j: v for j, v in r.items()}
        r0 += b.rows
        c0 += b.cols
    return Matrix(r0, c0, re, im)


def kron(a: Matrix, b: Matrix) -> Matrix:
    if a.is_real() and b.is_real():
        re = {}
        for i, ra in a.re.items():
            for k, rb in b.re.items():
                row = {}
                for j, x in ra.items():
                    for l, y in rb.items():
                        row[j * b.cols + l] = x * y
                re[i * b.rows + k] = row
        return Matrix(a.rows * b.rows, a.cols * b.cols, re)
    ent = {}
    ea = a.entries()
    eb = b.entries()
    for (i, j), x in ea.items():
        for (k, l), y in eb.items():
            key = (i * b.rows + k, j * b.cols + l)
            ent[key] = ent.get(key, Scalar(0)) + x * y
    return Matrix.from_dict(a.rows * b.rows, a.cols * b.cols, ent)

"""Exact linear algebra over the Gaussian rationals."""
from .scalar import Scalar, I, as_fraction, parse_rational, format_rational
from .matrix import Matrix, block_diag, kron, realify_block
from .subspace import Subspace, AmbientMismatch, complex_rref
from . import linalg


def rank_nullspace(m: Matrix):
    """``(rank, kernel)`` of ``m`` acting on column vectors, exactly.

    Complex matrices are handled through their realification: the rational
    kernel of [[A, -B], [B, A]] is the realified Q(i)-kernel of A + iB.
    """
    n = m.cols
    if m.is_real():
        rows = [dict(r) for r in m.re.values()]
        red = linalg.rref(rows)
        ker = Subspace(n, linalg.nullspace([r for _, r in red], n), field="R")
        return len(red), ker
    big = m.realify()
    rows = [dict(r) for r in big.re.values()]
    kreal = linalg.nullspace(rows, 2 * n)
    vecs = []
    for v in kreal:
        w = {}
        for k, x in v.items():
            j, part = divmod(k, 2)
            w[j] = w.get(j, Scalar(0)) + (Scalar(x) if part == 0 else Scalar(0, x))
        vecs.append({j: s for j, s in w.items() if s})
    ker = Subspace(n, vecs, field="C")
    return n - ker.dim, ker


__all__ = [
    "Scalar",
    "I",
    "Matrix",
    "Subspace",
    "AmbientMismatch",
    "block_diag",
    "kron",
    "realify_block",
    "rank_nullspace",
    "as_fraction",
    "parse_rational",
    "format_rational",
    "complex_rref",
    "linalg",
]

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from holokit.exactmat import (Matrix, Scalar, Subspace, AmbientMismatch, rank_nullspace,
                              format_rational, parse_rational, realify_block, I)

small = st.integers(-4, 4)


def grid(r, c):
    return st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)


def test_scalar_parse_and_format():
    assert Scalar.parse("3/5+4/5i") == Scalar(Fraction(3, 5), Fraction(4, 5))
    assert Scalar.parse("-i") == Scalar(0, -1)
    assert Scalar.parse("2") == Scalar(2)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(3) == "3/1"
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_scalar_field_ops():
    z = Scalar(1, 2)
    assert z * z.conjugate() == Scalar(5)
    assert (z / z) == Scalar(1)
    assert Scalar.from_json(z.to_json()) == z


def test_rank_nullspace_examples():
    r, k = rank_nullspace(Matrix.identity(2))
    assert (r, k.dim) == (2, 0)
    r, k = rank_nullspace(Matrix.from_rows([[1, 1]]))
    assert r == 1 and k == Subspace(2, [{0: 1, 1: -1}])
    r, k = rank_nullspace(Matrix.from_rows([[1] * 3] * 3))
    assert (r, k.dim) == (1, 2)


def test_complex_kernel():
    # the row (1, i) kills (i, -1)
    r, k = rank_nullspace(Matrix.from_rows([[Scalar(1), Scalar(0, 1)]]))
    assert r == 1 and k.dim == 1
    v = k.vectors()[0]
    assert v.get(0, Scalar(0)) + Scalar(0, 1) * v.get(1, Scalar(0)) == Scalar(0)


@settings(max_examples=40, deadline=None)
@given(grid(4, 5))
def test_rank_matches_sympy_and_transpose(g):
    M = Matrix.from_rows(g)
    r, k = rank_nullspace(M)
    assert r == sympy.Matrix(g).rank()
    assert r == rank_nullspace(M.T)[0]
    assert r + k.dim == 5
    for v in k.vectors():
        assert not M.apply(v)


@settings(max_examples=30, deadline=None)
@given(grid(2, 4), grid(2, 4))
def test_grassmann_identity(a, b):
    A, B = Subspace(4, [dict(enumerate(r)) for r in a]), Subspace(4, [dict(enumerate(r)) for r in b])
    assert (A + B).dim == A.dim + B.dim - A.intersection(B).dim


def test_subspace_examples():
    e1, e2 = Subspace(2, [{0: 1}]), Subspace(2, [{1: 1}])
    assert (e1 + e2).dim == 2
    assert Subspace(2, [{0: 1}]).intersection(Subspace(2, [{0: 1, 1: 1}])).dim == 0
    p1 = Subspace(3, [{0: 1, 1: 1}, {2: 1}])
    p2 = Subspace(3, [{0: 2, 1: 2, 2: 3}, {0: -1, 1: -1, 2: 1}])
    assert p1 == p2 and p1.reduced() == p2.reduced()
    with pytest.raises(AmbientMismatch):
        e1 + Subspace(3, [{0: 1}])


def test_realify_is_homomorphism():
    A = Matrix.from_rows([[Scalar(1, 2), Scalar(0, -1)], [Scalar(3), Scalar(1, 1)]])
    B = Matrix.from_rows([[Scalar(0, 1), Scalar(2)], [Scalar(-1, 1), Scalar(1)]])
    assert realify_block(A @ B) == realify_block(A) @ realify_block(B)
    J = realify_block(Matrix.identity(2, I))
    assert J @ J == Matrix.identity(4, -1)

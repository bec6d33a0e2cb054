from fractions import Fraction

import pytest

from holokit.exactmat import Scalar
from holokit.liecore import (center_basis, decompose_direct_product, derived_and_split,
                             invariant_summands, real_class)
from holokit.prolong import berger_test
from holokit.type2 import (BadEntry, DimensionTooSmall, MetadataOnly, P1Violated, P2Violated, Type2Spec,
                           complex_construction, irreducible_type2, parse_factor, real_construction)


def check_shape(h, summands, z_dim):
    assert h.is_closed()
    assert len(invariant_summands(h)) == summands
    assert len(decompose_direct_product(h, over_complex=False)) == 1
    assert len(center_basis(h)) == z_dim
    assert berger_test(h).first_criterion


def test_parse_factor():
    assert parse_factor("GL1R") == "GL1R"
    assert parse_factor("I-B:2a(p=2,q=1)") == ("I-B:2a", {"p": 2, "q": 1})


def test_complex_two_lines():
    h = complex_construction(Type2Spec(["I-A:1(m=1)", "I-A:1(m=1)"], lam=["1", "1"]))
    assert (h.n, h.dim) == (4, 2)
    check_shape(h, 2, 2)
    assert real_class(h).value == "TotallyComplex"


def test_complex_single_factor_is_sl():
    h = complex_construction(Type2Spec(["I-A:1(m=2)"], lam=["1"]))
    assert (h.n, h.dim) == (4, 6)
    assert len(center_basis(h)) == 0


def test_P1_and_bad_entries():
    with pytest.raises(P1Violated):
        complex_construction(Type2Spec(["I-A:1(m=1)", "I-A:1(m=1)"], lam=["1", "0"]))
    with pytest.raises(BadEntry):
        complex_construction(Type2Spec(["I-B:1a(n=2)"], lam=["1"]))
    with pytest.raises(MetadataOnly):
        complex_construction(Type2Spec(["I-A:7"], lam=["1"]))


def test_real_examples():
    h = real_construction(Type2Spec(real_factors=["GL1R", "GL1R"], mu=["1", "1"]))
    assert (h.n, h.dim) == (2, 1)
    check_shape(h, 2, 1)
    h = real_construction(Type2Spec(["I-A:1(m=1)"], lam=["i"]))
    assert (h.n, h.dim) == (2, 1)
    assert real_class(h).value == "RealComplex"
    with pytest.raises(DimensionTooSmall):
        real_construction(Type2Spec(real_factors=["GL1R"], mu=["1"]))
    with pytest.raises(P2Violated):
        real_construction(Type2Spec(real_factors=["GL1R", "GL1R"], mu=["1", "0"]))


def test_real_class_by_shape():
    h = real_construction(Type2Spec(["I-A:1(m=1)", "I-A:1(m=1)"], lam=["1", "i"]))
    assert real_class(h).value == "RealComplex"
    h = real_construction(Type2Spec(real_factors=["I-B:1a(n=2)", "GL1R"], mu=["1", "-1"]))
    assert real_class(h).value == "TotallyReal"


def test_mixed_three_summands():
    h = real_construction(Type2Spec(["I-A:1(m=1)"], ["GL1R", "I-B:1a(n=2)"], lam=["3/5+4/5i"], mu=["1", "-1"]))
    check_shape(h, 3, 2 + 2 - 1)


def test_common_rescaling_gives_same_algebra():
    a = complex_construction(Type2Spec(["I-A:1(m=1)", "I-A:1(m=2)"], lam=["1", "i"]))
    b = complex_construction(Type2Spec(["I-A:1(m=1)", "I-A:1(m=2)"], lam=["2+i", "-1+2i"]))
    assert a.span == b.span
    c = real_construction(Type2Spec(["I-A:1(m=1)"], ["GL1R"], lam=["1+i"], mu=["1"]))
    d = real_construction(Type2Spec(["I-A:1(m=1)"], ["GL1R"], lam=["-3-3i"], mu=["-3"]))
    assert c.span == d.span


def test_semisimple_part_is_product():
    h = complex_construction(Type2Spec(["I-A:1(m=2)", "I-A:1(m=2)"], lam=["1", "-1"]))
    assert derived_and_split(h).semisimple.dim == 12


def test_irreducible_families():
    h = irreducible_type2("II-B", "I-B:1a", {"n": 2})
    assert (h.n, h.dim) == (2, 3)
    h = irreducible_type2("II-A", "I-A:1", {"m": 2})
    assert (h.n, h.dim) == (4, 6)
    h = irreducible_type2("II-C", "I-A:1", {"m": 1}, (Fraction(3, 5), Fraction(4, 5)))
    assert (h.n, h.dim) == (2, 1)
    assert len(invariant_summands(h)) == 1
    h0 = irreducible_type2("II-C", "I-A:1", {"m": 1}, (Fraction(1), Fraction(0)))
    assert len(invariant_summands(h0)) == 2

import pytest

from holokit.exactmat import Matrix, block_diag
from holokit.liecore import (
    LinRep, NotReductive, NotTotallyReducible, center, commutant, complexify_alg,
    decompose_direct_product, derived_and_split, direct_product, invariant_summands,
    inverse, lie_closure, property_S_partial, random_conjugator, real_class,
)
from holokit.repkit import construct_entry, make_classical

U = Matrix.unit


def so3():
    return LinRep(3, [U(3, 0, 1) - U(3, 1, 0), U(3, 0, 2) - U(3, 2, 0), U(3, 1, 2) - U(3, 2, 1)])


def anti_diag():
    return LinRep(2, [Matrix.from_rows([[1, 0], [0, -1]])])


def u1():
    return LinRep(2, [Matrix.from_rows([[0, -1], [1, 0]])])


def gl1C():
    return LinRep(2, [Matrix.identity(2), Matrix.from_rows([[0, -1], [1, 0]])])


def conj(h, seed):
    P = random_conjugator(h.n, seed)
    Pi = inverse(P)
    return LinRep(h.n, [P @ g @ Pi for g in h.gens])


def test_lie_closure():
    assert lie_closure([U(2, 0, 1)]).dim == 1
    assert lie_closure([U(2, 0, 1), U(2, 1, 0)]).dim == 3
    assert lie_closure(so3().gens).dim == 3


def test_closure_of_every_small_catalog_model():
    for lid, p in [("I-B:2a", {"p": 2, "q": 1}), ("IV-A:4", {}), ("V-B:1b", {}), ("III-C:2b", {"m": 2, "theta": (0, 1)})]:
        assert construct_entry(lid, p).is_closed()


def test_center_examples():
    assert center(make_classical("gl_R", m=2)).dim == 1
    assert center(make_classical("sl_R", m=2)).dim == 0
    assert center(anti_diag()).dim == 1


def test_derived_and_split():
    s = derived_and_split(make_classical("gl_R", m=2))
    assert (s.center.dim, s.semisimple.dim) == (1, 3)
    s = derived_and_split(make_classical("sl_R", m=2))
    assert (s.center.dim, s.semisimple.dim) == (0, 3)
    with pytest.raises(NotReductive):
        derived_and_split(LinRep(2, [U(2, 0, 1)]))


def test_commutant_examples():
    assert commutant(LinRep(2, [])).dim == 4
    assert commutant(make_classical("sl_R", m=2)).dim == 1
    assert commutant(make_classical("sl_H", m=1)).dim == 4


def test_commutant_conjugation_invariant():
    h = construct_entry("I-B:4b", {"m": 2})
    assert commutant(conj(h, 3)).dim == commutant(h).dim


def test_invariant_summands():
    gl23 = direct_product(make_classical("gl_R", m=2), make_classical("gl_R", m=3))
    assert sorted(s.dim for s in invariant_summands(gl23)) == [2, 3]
    with pytest.raises(NotTotallyReducible):
        invariant_summands(LinRep(2, [U(2, 0, 1)]))
    assert [s.dim for s in invariant_summands(anti_diag())] == [1, 1]


def test_decompose_direct_product():
    gl23 = direct_product(make_classical("gl_R", m=2), make_classical("gl_R", m=3))
    assert len(decompose_direct_product(gl23)) == 2
    assert len(decompose_direct_product(anti_diag())) == 1
    parts = decompose_direct_product(LinRep(2, []))
    assert [(p.n, p.dim) for p in parts] == [(1, 0), (1, 0)]


def test_real_class_examples():
    assert real_class(gl1C()).value == "TotallyComplex"
    assert real_class(u1()).value == "RealComplex"
    assert real_class(make_classical("gl_R", m=2)).value == "TotallyReal"


def test_real_class_conjugation_invariant():
    for h in (gl1C(), u1(), construct_entry("III-C:2b", {"m": 2, "theta": (0, 1)})):
        assert real_class(conj(h, 5)) == real_class(h)


def test_complexification_splitting():
    assert len(decompose_direct_product(complexify_alg(make_classical("sl_R", m=2)))) == 1
    assert len(decompose_direct_product(complexify_alg(gl1C()))) == 2
    assert len(decompose_direct_product(complexify_alg(u1()))) == 1


def test_property_S_partial():
    r = property_S_partial(construct_entry("III-A:1", {"m": 2}))
    assert r.clause_i
    r = property_S_partial(construct_entry("III-C:4b", {"p": 3, "q": 0}))
    assert r.clause_ii
    r = property_S_partial(make_classical("gl_R", m=2))
    assert not r.clause_i and not r.clause_ii


def test_J_must_commute():
    J = Matrix.from_rows([[0, -1], [1, 0]])
    with pytest.raises(ValueError):
        LinRep(2, [Matrix.from_rows([[1, 0], [0, -1]])], complex_structure=J)
    assert block_diag(J, J) @ block_diag(J, J) == Matrix.identity(4, -1)

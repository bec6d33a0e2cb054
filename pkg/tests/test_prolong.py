import pytest

from holokit.exactmat import Matrix
from holokit.liecore import LinRep, inverse, random_conjugator
from holokit.prolong import berger_test, dense_dims, first_prolongation, pair_index, property_C_check, triple_index
from holokit.repkit import construct_entry, make_classical

U = Matrix.unit


def so3():
    return LinRep(3, [U(3, 0, 1) - U(3, 1, 0), U(3, 0, 2) - U(3, 2, 0), U(3, 1, 2) - U(3, 2, 1)])


def gl1():
    return LinRep(1, [Matrix.identity(1)])


def conj(h, seed):
    P = random_conjugator(h.n, seed)
    Pi = inverse(P)
    return LinRep(h.n, [P @ g @ Pi for g in h.gens])


def test_packed_orderings():
    assert pair_index(3) == {(0, 1): 0, (0, 2): 1, (1, 2): 2}
    t = triple_index(4)
    assert t[(0, 1, 2)] == 0 and t[(1, 2, 3)] == 3 and len(t) == 4


@pytest.mark.parametrize("h, d", [(make_classical("gl_R", m=2), 6), (make_classical("sl_R", m=2), 4), (so3(), 0)])
def test_first_prolongation_dims(h, d):
    assert first_prolongation(h).dim_h1 == d


def test_prolongation_basis_is_symmetric_and_lands_in_h():
    h = make_classical("sl_R", m=2)
    r = first_prolongation(h)
    n = h.n
    for B in r.basis:
        for i in range(n):
            # B(e_i, .) as a matrix: column j holds B(e_i, e_j)
            M = Matrix.from_dict(n, n, {(k, j): B.get((min(i, j), max(i, j), k), 0)
                                        for j in range(n) for k in range(n)})
            assert h.contains(M)


def test_property_C_examples():
    assert property_C_check(construct_entry("I-B:2a", {"p": 2, "q": 1}))
    assert not property_C_check(so3())
    assert property_C_check(gl1())
    assert not property_C_check(make_classical("sl_R", m=2))


def test_berger_examples():
    b = berger_test(gl1())
    assert b.dim_K == 0 and b.first_criterion is False
    assert berger_test(LinRep(1, [])).first_criterion is True
    b = berger_test(so3())
    assert b.dim_K == 6 and b.first_criterion and b.second_criterion


@pytest.mark.parametrize("h", [make_classical("gl_R", m=2), make_classical("sl_R", m=2), so3(), gl1(),
                               construct_entry("I-B:2a", {"p": 2, "q": 1}), construct_entry("I-A:1", {"m": 1})])
def test_dense_oracle_agrees(h):
    b = berger_test(h)
    assert dense_dims(h) == {"dim_h1": first_prolongation(h).dim_h1, "dim_K": b.dim_K, "dim_K1": b.dim_K1}


def test_conjugation_invariance():
    h = construct_entry("I-B:2a", {"p": 2, "q": 1})
    g = conj(h, 11)
    a, b = berger_test(h), berger_test(g)
    assert first_prolongation(h).dim_h1 == first_prolongation(g).dim_h1
    assert (a.dim_K, a.dim_hK, a.dim_K1) == (b.dim_K, b.dim_hK, b.dim_K1)


def test_curvature_monotone_on_nested_pairs():
    pairs = [(so3(), make_classical("gl_R", m=3)), (make_classical("sl_R", m=2), make_classical("gl_R", m=2))]
    for small, big in pairs:
        assert berger_test(small).dim_K <= berger_test(big).dim_K


def test_size_caps_skip_rather_than_guess():
    b = berger_test(make_classical("gl_R", m=3), k_cap=10, k1_cap=10)
    assert b.dim_K is None and b.first_criterion is None and b.skipped


def test_fixed_center_weight_rows_pass_berger():
    # R + sl(2,R) on can + Sym^2(can): center weight 1/2 on Sym^2 kills K(h), weight 2 does not
    from fractions import Fraction
    from holokit.repkit.catalog import _build
    from holokit.repkit.classical import can, center_R, classical_factor
    from holokit.repkit.factors import scaled, sym_power, tensor

    def model(w):
        c, f = center_R(), classical_factor("sl_R", m=2)
        return _build([c, f], [tensor((0, can(c)), (1, can(f))), tensor((0, scaled(can(c), w)), (1, sym_power(can(f), 2)))])

    literal = model(Fraction(1, 2))
    assert dense_dims(literal, with_k1=False)["dim_K"] == 0
    assert berger_test(literal).first_criterion is False
    h = construct_entry("III-B:10a", {"m": 2})
    assert h.span == model(Fraction(2)).span
    assert berger_test(h).first_criterion
    assert berger_test(construct_entry("III-B:8a", {"p": 2, "q": 2})).first_criterion

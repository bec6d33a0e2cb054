from math import comb

import pytest

from holokit.liecore import commutant, invariant_summands, real_class
from holokit.repkit import (
    CATALOG, ConditionViolated, InvalidParameters, MetadataOnly, apply_functor, construct_entry,
    enumerate_catalog, make_classical, make_g2, manifest, space_dim_of,
)
from holokit.repkit.classical import classical_factor
from holokit.repkit.spin import spin_rep, half_spin_rep


@pytest.mark.parametrize("family, params, n, dim", [
    ("so_pq", {"p": 2, "q": 1}, 3, 3),
    ("sp_R", {"m": 2}, 4, 10),
    ("sl_H", {"m": 1}, 4, 3),
    ("gl_C", {"m": 2}, 4, 8),
    ("su_pq", {"p": 2, "q": 1}, 6, 8),
    ("sp_pq", {"p": 1, "q": 1}, 8, 10),
    ("so_H", {"m": 2}, 8, 6),
])
def test_classical_dims(family, params, n, dim):
    h = make_classical(family, **params)
    assert (h.n, h.dim) == (n, dim)
    assert h.is_closed()


def test_classical_rejects_bad_params():
    with pytest.raises(InvalidParameters):
        make_classical("so_pq", p=1, q=2)


def test_sl1H_commutant():
    assert commutant(make_classical("sl_H", m=1)).dim == 4


@pytest.mark.parametrize("m, k", [(3, 2), (4, 2), (3, 3), (4, 3)])
def test_sym_ext_dims(m, k):
    s = apply_functor("gl_R", "sym", k=k, m=m)
    e = apply_functor("gl_R", "ext", k=k, m=m)
    assert s.n == comb(m + k - 1, k)
    assert e.n == comb(m, k)
    if k == 2:
        assert s.n + e.n == m * m


def test_quaternionic_form_functors():
    assert apply_functor("gl_H", "antiherm", m=2).n == 10
    assert apply_functor("gl_H", "herm", m=2).n == 6
    with pytest.raises(InvalidParameters):
        apply_functor("gl_R", "herm", m=2)


def test_ext3_0_of_sp3():
    h = apply_functor("sp_C", "ext3_0", m=3)
    assert h.n == 2 * 14
    assert len(invariant_summands(h)) == 1


def test_spin_dims():
    assert spin_rep(classical_factor("so_pq", p=7, q=0)).dim == 8
    assert half_spin_rep(classical_factor("so_C", m=10)).dim == 16
    assert half_spin_rep(classical_factor("so_C", m=12)).dim == 32
    h = apply_functor("so_pq", "spin", p=7, q=0)
    assert h.is_closed() and h.dim == 21


def test_g2_models():
    c = make_g2("compact")
    assert (c.n, c.dim) == (7, 14)
    assert commutant(c).dim == 1 and c.is_closed()
    s = make_g2("split")
    assert (s.n, s.dim) == (7, 14) and s.is_closed()
    assert len(invariant_summands(s)) == 1


def test_construct_entry_examples():
    h = construct_entry("I-A:1", {"m": 2})
    assert (h.n, h.dim) == (4, 8)
    assert construct_entry("IV-A:4", {}).n == 28
    with pytest.raises(MetadataOnly):
        construct_entry("I-A:7", {})
    with pytest.raises(ConditionViolated):
        construct_entry("I-A:3", {"p": 2, "q": 2})
    h = construct_entry("I-B:2a", {"p": 3, "q": 0})
    assert (h.n, h.dim) == (3, 4)
    assert construct_entry("V-B:1b", {}).n == 7


def test_lambda_convention_warns():
    from holokit.exactmat import Scalar
    with pytest.warns(UserWarning):
        construct_entry("III-A:2", {"m": 2, "lam": Scalar(2)})


def test_enumeration_bounds():
    ids = lambda d: {e.list_id for e, _ in enumerate_catalog(d)}
    # dimensions are counted after realification
    assert "V-A:3" in ids(8) and "V-A:3" not in ids(7)
    assert "I-B:2a" not in ids(2) and "I-B:2a" in ids(3)
    assert "I-A:6" not in ids(31) and "I-A:6" in ids(32)


def test_dim_column_and_list_part_small():
    for e, p in enumerate_catalog(8, include_type2=False):
        h = construct_entry(e.list_id, p)
        assert h.n == space_dim_of(e.list_id, p), (e.list_id, p)
        assert real_class(h).value == e.real_class, (e.list_id, p)
        assert h.is_closed()


def test_manifest_covers_metadata_rows():
    man = {r["id"]: r for r in manifest()}
    assert man["I-A:7"]["metadata_only"]
    assert not man["V-B:1b"]["metadata_only"]
    assert len(man) == len(CATALOG)
    assert man["III-C:2b"]["flags"].get("asserted_without_proof")

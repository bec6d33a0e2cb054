from fractions import Fraction

import pytest

from holokit.classify import (ALIASES, SO_PQ_NOTE, Overall, canonical_label, classify, expected_label,
                              fingerprint, verify_entry, verify_tables)
from holokit.exactmat import Matrix, Scalar
from holokit.liecore import LinRep, direct_product, inverse, random_conjugator
from holokit.repkit import construct_entry, make_classical, make_g2
from holokit.type2 import Type2Spec, real_construction


def anti_diag():
    return LinRep(2, [Matrix.from_rows([[1, 0], [0, -1]])])


def conj(h, seed):
    P = random_conjugator(h.n, seed)
    Pi = inverse(P)
    return LinRep(h.n, [P @ g @ Pi for g in h.gens])


def test_fingerprints():
    fp = fingerprint(make_classical("gl_R", m=2))
    assert (fp.space_dim, fp.alg_dim, fp.center_dim, fp.commutant_dim, fp.real_class, fp.dim_h1) == \
        (2, 4, 1, 1, "TotallyReal", 6)
    fp = fingerprint(make_g2("compact"))
    assert (fp.space_dim, fp.alg_dim, fp.center_dim, fp.commutant_dim, fp.real_class) == (7, 14, 0, 1, "TotallyReal")
    fp = fingerprint(LinRep(1, []))
    assert (fp.space_dim, fp.alg_dim) == (1, 0)


def test_fingerprint_conjugation_invariant():
    h = construct_entry("III-C:2b", {"m": 2, "theta": (Fraction(3, 5), Fraction(4, 5))})
    assert fingerprint(h).key() == fingerprint(conj(h, 2)).key()


def test_classify_catalog_row():
    v = classify(construct_entry("V-B:1b", {}))
    assert v.overall == Overall.CONSISTENT
    assert [f.label for f in v.factors] == ["V-B:1b"]
    assert "consistent with list row" in v.factors[0].notes


def test_classify_product():
    v = classify(direct_product(anti_diag(), make_classical("gl_R", m=2)))
    assert v.overall == Overall.CONSISTENT
    kinds = sorted((f.kind, f.label) for f in v.factors)
    assert kinds == [("catalog", "I-B:1a(n=2)"), ("type2", "type2")]


def test_gl1_exception():
    v = classify(LinRep(1, [Matrix.identity(1)]))
    assert v.overall == Overall.CONSISTENT and v.not_a_holonomy
    assert v.factors[0].kind == "gl1R-exception"


def test_not_totally_reducible_verdict():
    v = classify(LinRep(2, [Matrix.unit(2, 0, 1)]))
    assert v.overall == Overall.NOT_TOTALLY_REDUCIBLE and not v.factors


def test_continuous_parameters_are_canonicalised():
    v = classify(construct_entry("III-A:2", {"m": 2, "lam": Scalar(0, 1)}))
    assert v.factors[0].label == "III-A:2(lam=1i, m=2)"
    with pytest.warns(UserWarning):
        h = construct_entry("III-B:2a", {"m": 2, "mu": Fraction(2)})
    assert classify(h).factors[0].label == "III-B:2a(m=2, mu=1/2)"


def test_alias_table():
    src, dst = ALIASES[0]
    assert canonical_label(src) == canonical_label(dst)
    v = classify(construct_entry("IV-B:2b", {"m": 2}))
    assert canonical_label(v.factors[0].label) == canonical_label("IV-B:2b(m=2)")


def test_so_pq_reads_as_type2():
    v = classify(make_classical("so_pq", p=3, q=0))
    assert v.factors[0].kind == "type2" and SO_PQ_NOTE in v.factors[0].notes


def test_three_summands_only_from_type2():
    h = real_construction(Type2Spec(["I-A:1(m=1)"], ["GL1R", "I-B:1a(n=2)"], lam=["3/5+4/5i"], mu=["1", "-1"]))
    f = classify(h).factors
    assert len(f) == 1 and f[0].kind == "type2" and f[0].witness["construction"] == "real"


def test_complexification_cross_check():
    for lid, p in [("I-A:1", {"m": 2}), ("III-C:2b", {"m": 2, "theta": (0, 1)}), ("I-B:2a", {"p": 2, "q": 1})]:
        v = classify(construct_entry(lid, p))
        assert all(f.complexification_consistent for f in v.factors)
        assert canonical_label(v.factors[0].label) == expected_label(lid, p)


def test_verify_entry_examples():
    r = verify_entry("I-B:4b", {"m": 2})
    assert set(r["checks"].values()) == {"pass"}
    r = verify_entry("I-A:3", {"p": 2, "q": 2})
    assert "ConditionViolated" in r["skip_reason"]
    r = verify_entry("V-A:4", {})
    assert r["checks"]["dim_column"] == "pass"


def test_verify_tables_small_is_sorted_and_clean():
    rep = verify_tables(4, seed=1)
    labels = [e["label"] for e in rep["entries"]]
    assert rep["aggregate"]["failed"] == 0
    assert len(labels) == len(set(labels))
    assert rep == verify_tables(4, seed=1)

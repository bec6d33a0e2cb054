"""Acceptance suite: one check per criterion, each at its stated size and time budget.

Every check records a PASS/FAIL line in ``RESULTS``; the conftest hook prints
them at the end of a pytest run. ``python3 tests/test_acceptance.py`` runs the
suite as a script and prints the same lines.
"""
from __future__ import annotations

import io
import itertools
import time
from contextlib import redirect_stdout
from fractions import Fraction

import pytest

from holokit.classify import DEGENERATE_IIC, canonical_label, classify, expected_label
from holokit.exactmat import Matrix
from holokit.liecore import (LinRep, center_basis, complexify_alg, decompose_direct_product,
                             invariant_summands, real_class)
from holokit.prolong import berger_test, dense_dims, first_prolongation
from holokit.repkit import construct_entry, enumerate_catalog, make_classical
from holokit.type2 import Type2Spec, complex_construction, irreducible_type2, real_construction

pytestmark = pytest.mark.slow

RESULTS: dict[int, str] = {}
_MODELS: dict[int, list] = {}


def record(num: int, title: str, ok: bool, detail: str, seconds: float, budget: float | None):
    timing = f"{seconds:.1f}s" + (f" / {budget:.0f}s" if budget else "")
    within = budget is None or seconds <= budget
    verdict = "PASS" if ok and within else "FAIL"
    RESULTS[num] = f"criterion {num} {verdict}: {title} ({detail}; {timing})"
    assert ok, RESULTS[num]
    assert within, RESULTS[num]


def models(max_dim: int) -> list:
    """(entry, params, model) for every modeled catalog instance up to max_dim."""
    if max_dim not in _MODELS:
        _MODELS[max_dim] = [(e, p, construct_entry(e.list_id, p)) for e, p in enumerate_catalog(max_dim)]
    return _MODELS[max_dim]


def so3():
    U = Matrix.unit
    return LinRep(3, [U(3, 0, 1) - U(3, 1, 0), U(3, 0, 2) - U(3, 2, 0), U(3, 1, 2) - U(3, 2, 1)])


def gl1():
    return LinRep(1, [Matrix.identity(1)])


def test_criterion_1_dim_column():
    t = time.perf_counter()
    rows = models(32)
    bad = [f"{e.list_id}{p}" for e, p, h in rows if h.space_dim != e.space_dim(p)]
    dt = time.perf_counter() - t
    record(1, "dim column matches every model with space_dim <= 32", not bad and len(rows) >= 60,
           f"{len(rows)} instances, {len(bad)} mismatches", dt, 300)


def test_criterion_2_real_class_by_list():
    rows = models(32)
    t = time.perf_counter()
    bad = [f"{e.list_id}{p}" for e, p, h in rows if real_class(h).value != e.real_class]
    dt = time.perf_counter() - t
    record(2, "A lists TotallyComplex, B lists TotallyReal, C lists RealComplex", not bad,
           f"{len(rows)} models from criterion 1, {len(bad)} wrong", dt, 300)


def test_criterion_3_property_C():
    t = time.perf_counter()
    bad, count = [], 0
    for e, p in enumerate_catalog(16, include_type2=False):
        if e.typ != "I":
            continue
        h = construct_entry(e.list_id, p)
        r = first_prolongation(h)
        count += 1
        if not (r.dim_h1 > 0 and r.dim_c == h.dim and len(center_basis(h)) > 0):
            bad.append(f"{e.list_id}{p}")
    controls = [so3(), make_classical("sl_R", m=2)]
    ctl_ok = all(not first_prolongation(h).property_C for h in controls)
    dt = time.perf_counter() - t
    record(3, "property C on List I up to space_dim 16, fails on so(3) and sl(2,R)",
           not bad and ctl_ok and count > 0, f"{count} instances, {len(bad)} failures, controls ok={ctl_ok}",
           dt, 600)


def test_criterion_4_gl1R():
    t = time.perf_counter()
    h = gl1()
    pc = first_prolongation(h).property_C
    b1 = berger_test(h).first_criterion
    v = classify(h)
    flagged = v.factors[0].not_a_holonomy and v.factors[0].kind == "gl1R-exception"
    dt = time.perf_counter() - t
    record(4, "gl(1,R): property C, fails Berger's first criterion, flagged",
           pc is True and b1 is False and flagged, f"C={pc}, berger_first={b1}, flagged={flagged}", dt, 1)


def test_criterion_5_complexification():
    t = time.perf_counter()
    bad, count = [], 0
    for e, p in enumerate_catalog(12):
        h = construct_entry(e.list_id, p)
        split = len(decompose_direct_product(complexify_alg(h))) > 1
        count += 1
        if split != (e.real_class == "TotallyComplex"):
            bad.append(f"{e.list_id}{p}")
    dt = time.perf_counter() - t
    record(5, "complexification decomposes exactly for TotallyComplex rows up to space_dim 12", not bad,
           f"{count} instances, {len(bad)} failures", dt, None)


# factor pools: gl(1,C), gl(2,C) | GL1R, gl(2,R), R + so(2,1)
COMPLEX_POOL = [("I-A:1(m=1)", 2), ("I-A:1(m=2)", 4)]
REAL_POOL = [("GL1R", 1), ("I-B:1a(n=2)", 2), ("I-B:2a(p=2,q=1)", 3)]
LAMBDAS = ["1", "i", "-1", "3/5+4/5i", "-i"]
MUS = ["1", "-1"]


def type2_cases():
    """(construction, spec, expected summands, expected center dim) for the suite."""
    cases = []
    k = 0
    for p in range(1, 5):
        for cf in itertools.combinations_with_replacement(COMPLEX_POOL, p):
            if sum(n for _, n in cf) > 12:
                continue
            lam = [LAMBDAS[(k + j) % 5] for j in range(p)]
            k += 1
            spec = Type2Spec([f for f, _ in cf], [], lam, [])
            cases.append(("complex", spec, p, 2 * (p - 1)))
    for p in range(0, 5):
        for q in range(0, 5 - p):
            if p + q == 0:
                continue
            for cf in itertools.combinations_with_replacement(COMPLEX_POOL, p):
                for rf in itertools.combinations_with_replacement(REAL_POOL, q):
                    n = sum(x for _, x in cf) + sum(x for _, x in rf)
                    if n > 12 or n < 2:
                        continue
                    lam = [LAMBDAS[(k + j) % 5] for j in range(p)]
                    mu = [MUS[(k + j) % 2] for j in range(q)]
                    k += 1
                    spec = Type2Spec([f for f, _ in cf], [f for f, _ in rf], lam, mu)
                    summ = p + q
                    # gl(1,C) alone with real lambda leaves only R Id on R^2
                    if (p, q) == (1, 0) and cf[0][0] == "I-A:1(m=1)" and not Type2Spec(
                            [cf[0][0]], [], lam, []).lam[0].im:
                        summ = 2
                    cases.append(("real", spec, summ, 2 * p + q - 1))
    return cases


def test_criterion_6_type2_suite():
    t = time.perf_counter()
    bad, count = [], 0
    for kind, spec, summ, zdim in type2_cases():
        h = (complex_construction if kind == "complex" else real_construction)(spec)
        if h.dim == 0:
            continue
        count += 1
        got = (h.is_closed(), len(invariant_summands(h)), len(decompose_direct_product(h, over_complex=False)),
               len(center_basis(h)), berger_test(h).first_criterion)
        if got != (True, summ, 1, zdim, True):
            bad.append(f"{kind} {spec.to_dict()} -> {got}")
    dt = time.perf_counter() - t
    record(6, "Type-II constructions closed, totally reducible, indecomposable, right shape, pass Berger",
           not bad and count >= 40, f"{count} cases, {len(bad)} failures", dt, 600)


def oracle_algebras():
    U = Matrix.unit
    return [
        ("so(3)", so3()),
        ("gl(1,R)", gl1()),
        ("gl(2,R)", make_classical("gl_R", m=2)),
        ("sl(2,R)", make_classical("sl_R", m=2)),
        ("gl(3,R)", make_classical("gl_R", m=3)),
        ("sl(3,R)", make_classical("sl_R", m=3)),
        ("so(2,1)", make_classical("so_pq", p=2, q=1)),
        ("so(4)", make_classical("so_pq", p=4, q=0)),
        ("sp(2,R)", make_classical("sp_R", m=2)),
        ("sl(1,H)", make_classical("sl_H", m=1)),
        ("gl(2,C)", make_classical("gl_C", m=2)),
        ("su(2)", make_classical("su_pq", p=2, q=0)),
        ("R + so(2,1)", construct_entry("I-B:2a", {"p": 2, "q": 1})),
        ("C + so(3,C)", construct_entry("I-A:2", {"m": 3})),
        ("gl(1,H)", make_classical("gl_H", m=1)),
        ("II-C circle", irreducible_type2("II-C", "I-A:1", {"m": 1}, (Fraction(3, 5), Fraction(4, 5)))),
        ("diagonal R^2", LinRep(2, [U(2, 0, 0), U(2, 1, 1)])),
        ("upper triangular", LinRep(2, [U(2, 0, 0), U(2, 0, 1), U(2, 1, 1)])),
        ("nilpotent", LinRep(3, [U(3, 0, 1), U(3, 1, 2), U(3, 0, 2)])),
    ]


def test_criterion_7_dense_oracle():
    t = time.perf_counter()
    bad, count = [], 0
    for name, h in oracle_algebras():
        assert h.n <= 8
        b = berger_test(h)
        fast = {"dim_h1": first_prolongation(h).dim_h1, "dim_K": b.dim_K, "dim_K1": b.dim_K1}
        count += 1
        if dense_dims(h) != fast:
            bad.append(name)
    dt = time.perf_counter() - t
    record(7, "dense oracle agrees on (dim_h1, dim_K, dim_K1) for n <= 8", not bad,
           f"{count} algebras, {len(bad)} disagreements", dt, None)


def _round_trip_ok(e, p, h) -> bool:
    v = classify(h, berger=False)
    if len(v.factors) != 1:
        return False
    f = v.factors[0]
    want = expected_label(e.list_id, p)
    if f.label is not None and canonical_label(f.label) == want:
        return True
    return want == DEGENERATE_IIC and f.kind == "type2" and want in f.candidates


def test_criterion_8_classifier_round_trip():
    t = time.perf_counter()
    rows = [(e, p, h) for e, p, h in models(32) if h.space_dim <= 16] if 32 in _MODELS else models(16)
    bad = [f"{e.list_id}{p}" for e, p, h in rows if not _round_trip_ok(e, p, h)]
    dt = time.perf_counter() - t
    record(8, "classify recovers every modeled row up to space_dim 16 (aliases allowed)", not bad,
           f"{len(rows) - len(bad)}/{len(rows)} recovered", dt, None)


def test_criterion_9_verify_tables_reproducible(tmp_path):
    from holokit.cli import main
    t = time.perf_counter()
    outs = []
    for k in range(2):
        f = tmp_path / f"run{k}.json"
        with redirect_stdout(io.StringIO()):
            code = main(["verify-tables", "--max-dim", "12", "--seed", "7", "--report", str(f)])
        outs.append((code, f.read_bytes()))
    same = outs[0][1] == outs[1][1]
    dt = time.perf_counter() - t
    record(9, "two verify-tables runs (max-dim 12, seed 7) are byte-identical", same,
           f"exit codes {outs[0][0]}, {outs[1][0]}; {len(outs[0][1])} bytes", dt, None)


if __name__ == "__main__":
    import tempfile
    from pathlib import Path
    checks = [test_criterion_1_dim_column, test_criterion_2_real_class_by_list, test_criterion_3_property_C,
              test_criterion_4_gl1R, test_criterion_5_complexification, test_criterion_6_type2_suite,
              test_criterion_7_dense_oracle, test_criterion_8_classifier_round_trip]
    for fn in checks:
        try:
            fn()
        except AssertionError:
            pass
    with tempfile.TemporaryDirectory() as d:
        try:
            test_criterion_9_verify_tables_reproducible(Path(d))
        except AssertionError:
            pass
    for num in sorted(RESULTS):
        print(RESULTS[num])

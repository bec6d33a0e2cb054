"""Decision procedure: split into indecomposable factors and match each one
against the catalog, the Type-II shape, or the gl(1,R) exception."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .exactmat import Matrix, Subspace, linalg, polyops
from .exactmat.linalg import integer_row
from .liecore import (LinRep, NotTotallyReducible, RealClass, Undetermined, center_basis,
                      complexify_alg, decompose_direct_product, derived_and_split,
                      irreducible_summands, real_class, restrict, signature, trace_gram)
from .liecore.modules import module_commutant
from .prolong import berger_test, first_prolongation
from .repkit.realforms import rational_sqrt
from .repkit.catalog import (CATALOG, TYPE2_BASES, construct_entry, enumerate_catalog, format_param,
                             instances)

__all__ = ["Fingerprint", "Verdict", "Overall", "FactorMatch", "fingerprint", "classify",
           "match_key", "ALIASES", "canonical_label"]


@dataclass(frozen=True)
class Fingerprint:
    space_dim: int
    alg_dim: int
    center_dim: int
    commutant_dim: int
    real_class: str
    summand_dims: tuple
    summand_kinds: tuple
    ss_signature: tuple
    inv_sym_forms: int
    inv_alt_forms: int
    dim_h1: int | None = None
    berger_first: bool | None = None
    berger_second: bool | None = None

    def key(self) -> tuple:
        return (self.space_dim, self.alg_dim, self.center_dim, self.commutant_dim, self.real_class,
                self.summand_dims, self.summand_kinds, self.ss_signature, self.inv_sym_forms,
                self.inv_alt_forms, self.dim_h1)

    def to_dict(self) -> dict:
        return {
            "space_dim": self.space_dim, "alg_dim": self.alg_dim, "center_dim": self.center_dim,
            "commutant_dim": self.commutant_dim, "real_class": self.real_class,
            "summand_dims": list(self.summand_dims),
            "summand_kinds": [list(x) for x in self.summand_kinds],
            "ss_signature": list(self.ss_signature),
            "invariant_symmetric_forms": self.inv_sym_forms,
            "invariant_alternating_forms": self.inv_alt_forms,
            "dim_h1": self.dim_h1, "berger_first": self.berger_first, "berger_second": self.berger_second,
        }


def _form_basis(n: int, symmetric: bool) -> list[Matrix]:
    out = []
    for i in range(n):
        for j in range(i, n):
            if i == j:
                if symmetric:
                    out.append(Matrix.unit(n, i, i))
                continue
            sgn = 1 if symmetric else -1
            out.append(Matrix.from_dict(n, n, {(i, j): 1, (j, i): sgn}))
    return out


def invariant_forms(gens, n: int, symmetric: bool) -> int:
    """dim {B : g^T B + B g = 0 for all g}, B symmetric or alternating."""
    cur = _form_basis(n, symmetric)
    for g in sorted(gens, key=lambda m: m.nnz()):
        if not cur:
            break
        gt = g.transpose()
        imgs = [gt @ B + B @ g for B in cur]
        if all(m.is_zero() for m in imgs):
            continue
        eqs: dict[int, dict[int, Fraction]] = {}
        for k, m in enumerate(imgs):
            for pos, v in m.vec().items():
                eqs.setdefault(pos, {})[k] = v
        ker = linalg.nullspace(list(eqs.values()), len(cur))
        nxt = []
        for v in ker:
            acc = Matrix.zeros(n)
            for k, c in v.items():
                acc = acc + cur[k].scale(c)
            nxt.append(acc)
        cur = nxt
    return len(cur)


def fingerprint(h: LinRep, seed: int = 0, berger: bool = False, prolongation: bool = True) -> Fingerprint:
    n = h.n
    gens = list(h.gens)
    if not gens:
        summ_dims = tuple([1] * n)
        return Fingerprint(n, 0, 0, n * n, RealClass.TOTALLY_REAL.value if n % 2 else
                           RealClass.TOTALLY_COMPLEX.value, summ_dims, tuple((1, "R") for _ in range(n)),
                           (0, 0, 0), n * (n + 1) // 2, n * (n - 1) // 2, 0 if prolongation else None,
                           *((True, n >= 2) if berger else (None, None)))
    summ = irreducible_summands(h, seed)
    split = derived_and_split(h)
    ss = split.semisimple_algebra()
    sig = signature(trace_gram(list(ss.gens))) if ss.dim else (0, 0, 0)
    comm = len(module_commutant(gens, n))
    rc = real_class(h, seed).value
    h1 = first_prolongation(h).dim_h1 if prolongation else None
    bf = bs = None
    if berger:
        b = berger_test(h)
        bf, bs = b.first_criterion, b.second_criterion
    return Fingerprint(
        n, h.dim, split.center.dim, comm, rc,
        tuple(sorted(s.dim for s in summ)), tuple(sorted((s.dim, s.kind) for s in summ)), tuple(sig),
        invariant_forms(gens, n, True), invariant_forms(gens, n, False), h1, bf, bs)


# -- catalog index ---------------------------------------------------------------

# Isomorphic duplicates among instantiated catalog rows (low-dimensional
# coincidences of classical algebras); each class is reported by its first label.
ALIASES: list[tuple[str, ...]] = [
    # su(2)+su(2)+sl(2,R) on the real form of C^2 (x) C^2 (x) C^2
    ("IV-B:2a(p=4, q=0)", "IV-B:2b(m=2)"),
]


DEGENERATE_IIC = "II-C(base=I-A:1, m=1, theta=0)"


def canonical_label(label: str) -> str:
    for cls in ALIASES:
        if label in cls:
            return cls[0]
    return label


def label_of(list_id: str, params: dict) -> str:
    if not params:
        return list_id
    return list_id + "(" + ", ".join(f"{k}={format_param(k, v)}" for k, v in sorted(params.items())) + ")"


@lru_cache(maxsize=None)
def _instances_of_dim(n: int) -> tuple:
    out = []
    for e, p in enumerate_catalog(n, include_type2=False):
        if e.space_dim(p) == n:
            out.append((e.list_id, tuple(sorted(p.items()))))
    return tuple(out)


@lru_cache(maxsize=None)
def _model(list_id: str, items: tuple) -> LinRep:
    return construct_entry(list_id, dict(items))


@lru_cache(maxsize=None)
def _catalog_fp(list_id: str, items: tuple) -> Fingerprint:
    return fingerprint(_model(list_id, items))


def match_key(fp: Fingerprint) -> tuple:
    return fp.key()


def catalog_candidates(fp: Fingerprint, parts=("I", "III", "IV", "V")) -> list[tuple[str, dict]]:
    out = []
    for lid, items in _instances_of_dim(fp.space_dim):
        if CATALOG[lid].typ not in parts:
            continue
        if _model(lid, items).dim != fp.alg_dim:
            continue
        if _catalog_fp(lid, items).key() == fp.key():
            out.append((lid, dict(items)))
    return out


# -- continuous parameters ------------------------------------------------------

CONTINUOUS = {"III-A:2": "lam", "III-B:2a": "mu", "III-C:2b": "theta", "III-C:2c": "theta"}


def _adapted(summ, n):
    cols = [v for s in summ for v in s.basis]
    P = Matrix.from_dict(n, n, {(i, j): x for j, v in enumerate(cols) for i, x in v.items()})
    from .liecore import inverse
    return P, inverse(P)


def _blocks(h: LinRep, summ, mats):
    """Restrictions of ``mats`` (assumed to preserve every summand) to each summand."""
    return [restrict(mats, s.subspace(h.n)) for s in summ]


def _trace(M: Matrix) -> Fraction:
    return M.trace().re


def _complex_split(U: Matrix):
    """U = x I + J' with J'^2 = -y2 I, y2 > 0; returns (x, J', y2) or None."""
    d = U.rows
    x = _trace(U) / d
    Jp = U - Matrix.identity(d, x)
    sq = Jp @ Jp
    y2 = -sq[0, 0].re
    if y2 <= 0 or sq != Matrix.identity(d, -y2):
        return None
    return x, Jp, y2


def _in_field(W: Matrix, Jp: Matrix, y2: Fraction):
    """W = a I + b J' -> (a, b) or None."""
    d = W.rows
    a = _trace(W) / d
    b = -_trace(W @ Jp) / (d * y2)
    if W != Matrix.identity(d, a) + Jp.scale(b):
        return None
    return a, b


def canonical_lambda(lam):
    from .exactmat import Scalar
    lam = Scalar.coerce(lam)
    if lam.norm2() > 1:
        lam = Scalar(1) / lam
    if lam.im < 0:
        lam = lam.conjugate()
    return lam


def canonical_mu(mu):
    mu = Fraction(mu)
    return 1 / mu if abs(mu) > 1 else mu


def _theta_of(a: Fraction, b2: Fraction):
    """Circle point (c, s) with c : s = |a| : sqrt(b2), when rational."""
    r = rational_sqrt(a * a + b2)
    b = rational_sqrt(b2)
    if r is None or b is None or r == 0:
        return None
    return (abs(a) / r, b / r)


def recover_parameter(list_id: str, h: LinRep, summ) -> dict | None:
    from .exactmat import Scalar
    name = CONTINUOUS.get(list_id) or ("theta" if list_id == "II-C" else None)
    if name is None:
        return {}
    z = center_basis(h)
    if name == "mu":
        if len(z) != 1 or len(summ) != 2:
            return None
        blocks = [b[0] for b in _blocks(h, summ, z)]
        a = [B[0, 0].re for B in blocks]
        if any(B != Matrix.identity(B.rows, x) for B, x in zip(blocks, a)) or not a[0] or not a[1]:
            return None
        return {"mu": canonical_mu(a[1] / a[0])}
    if name == "lam":
        if len(z) != 2 or len(summ) != 2:
            return None
        from .liecore import inverse
        (Z1a, Z2a), (Z1b, Z2b) = _blocks(h, summ, z)
        sp = _complex_split(Z2a @ inverse(Z1a))
        if sp is None:
            return None
        x, Ja, y2 = sp
        Jb = Z2b @ inverse(Z1b) - Matrix.identity(Z1b.rows, x)
        wa, wb = _in_field(Z1a, Ja, y2), _in_field(Z1b, Jb, y2)
        y = rational_sqrt(y2)
        if wa is None or wb is None or y is None:
            return None
        w1 = Scalar(wa[0], wa[1] * y)
        w2 = Scalar(wb[0], wb[1] * y)
        return {"lam": canonical_lambda(w2 / w1)}
    # theta: one central element acting by a + b J
    if len(z) != 1:
        return None
    Z = z[0]
    d = h.n
    a = _trace(Z) / d
    D = Z - Matrix.identity(d, a)
    sq = D @ D
    b2 = -sq[0, 0].re
    if sq != Matrix.identity(d, -b2) or b2 < 0:
        return None
    t = _theta_of(a, b2)
    return None if t is None else {"theta": t}


# -- Type-II recognition -------------------------------------------------------------

def _classify_base(gens, d, part) -> list[tuple[str, dict]]:
    base = LinRep.from_matrices(d, gens)
    fp = fingerprint(base)
    return [c for c in catalog_candidates(fp, parts=("I",)) if CATALOG[c[0]].part == part]


def recognize_type2(h: LinRep, summ, split) -> dict | None:
    """Witness of the Type-II shape, or None.

    h = z + s with s the product of its restrictions to the irreducible
    summands W_i, z acting on each W_i by scalars of its commutant field, and
    z a hyperplane (real construction) or complex hyperplane (complex
    construction) in the product of those scalar algebras.
    """
    n = h.n
    zs = [Matrix.from_vec(v, n) for v in split.center.vectors()]
    ss = [Matrix.from_vec(v, n) for v in split.semisimple.vectors()]
    P, Pinv = _adapted(summ, n)
    sizes = [s.dim for s in summ]
    offs = [sum(sizes[:i]) for i in range(len(sizes))]
    S = Subspace(n * n, [m.vec() for m in ss], field="R")
    sblocks = [[] for _ in summ]
    for g in ss:
        g2 = Pinv @ g @ P
        for i, (o, d) in enumerate(zip(offs, sizes)):
            blk = {(r - o, c - o): v for (r, c), v in g2.entries().items() if o <= r < o + d and o <= c < o + d}
            B = Matrix.from_dict(d, d, {k: v.re for k, v in blk.items()})
            pad = Matrix.from_dict(n, n, {(r + o, c + o): v.re for (r, c), v in blk.items()})
            if not S.contains((P @ pad @ Pinv).vec()):
                return None
            if not B.is_zero():
                sblocks[i].append(B)
    zblocks = _blocks(h, summ, zs)
    blocks = []
    for i, s in enumerate(summ):
        d = sizes[i]
        sg = LinRep.from_matrices(d, sblocks[i]).gens if sblocks[i] else ()
        if s.kind == "R":
            if any(Z != Matrix.identity(d, Z[0, 0].re) for Z in zblocks[i]):
                return None
            coords = [[Z[0, 0].re] for Z in zblocks[i]]
            if not sg:
                if d != 1:
                    return None
                base = [("GL1R", {})]
            else:
                base = _classify_base(list(sg) + [Matrix.identity(d)], d, "B")
            blocks.append(("R", d, None, coords, base))
        elif s.kind == "C":
            E = module_commutant(list(sg) + zblocks[i] if (sg or zblocks[i]) else [Matrix.zeros(d)], d)
            if len(E) != 2:
                return None
            Jp = next(M for M in E if M != Matrix.identity(d, M[0, 0]))
            sp = _complex_split(Jp)
            if sp is None:
                return None
            x, Jp, y2 = sp
            y = rational_sqrt(y2)
            if y is None:
                return None
            J = Jp.scale(1 / y)
            coords = []
            for Z in zblocks[i]:
                ab = _in_field(Z, J, Fraction(1))
                if ab is None:
                    return None
                coords.append(list(ab))
            if not sg:
                base = [("I-A:1", {"m": 1})] if d == 2 else []
            else:
                base = _classify_base(list(sg) + [Matrix.identity(d), J], d, "A")
            blocks.append(("C", d, J, coords, base))
        else:
            return None
        if not blocks[-1][4]:
            return None
    dim_a = sum(2 if b[0] == "C" else 1 for b in blocks)
    rows = []
    for k in range(len(zs)):
        row = []
        for b in blocks:
            row.extend(b[3][k])
        rows.append(row)
    ann = linalg.nullspace([{j: v for j, v in enumerate(r) if v} for r in rows], dim_a)
    cplx = [b for b in blocks if b[0] == "C"]
    real = [b for b in blocks if b[0] == "R"]
    ordered = cplx + real
    # reorder coefficients so complex blocks come first
    pos, idx = 0, []
    for b in blocks:
        w = 2 if b[0] == "C" else 1
        idx.append(list(range(pos, pos + w)))
        pos += w
    order = [i for i, b in enumerate(blocks) if b[0] == "C"] + [i for i, b in enumerate(blocks) if b[0] == "R"]

    def fn_part(f, i):
        return [f.get(j, Fraction(0)) for j in idx[i]]

    if len(zs) == dim_a - 1 and len(ann) == 1:
        f = ann[0]
        lam, mu = [], []
        for i in order:
            part = fn_part(f, i)
            if blocks[i][0] == "C":
                fx, fy = part
                if not fx and not fy:
                    return None
                from .exactmat import Scalar
                lam.append(Scalar(fy, fx))
            else:
                if not part[0]:
                    return None
                mu.append(part[0])
        construction = "real"
    elif not real and len(zs) == dim_a - 2 and len(ann) == 2:
        # complex hyperplane: z must be closed under some choice of signs of the J_i
        from itertools import product as iprod
        from .exactmat import Scalar
        found = None
        for signs in iprod((1, -1), repeat=len(cplx)):
            # J acting on coordinates (a, b) -> (-b, a) per block, with sign
            imgs = []
            for k in range(len(zs)):
                row = []
                for b, sg_ in zip(blocks, signs):
                    a_, b_ = b[3][k]
                    row.extend([-sg_ * b_, sg_ * a_])
                imgs.append(row)
            if all(sum(r[j] * f.get(j, 0) for j in range(dim_a)) == 0 for r in imgs for f in ann):
                found = signs
                break
        if found is None:
            return None
        # complex functional: sum lam_j w_j = 0 with w_j = a_j + i s_j b_j
        # annihilator of z in (a, b) coordinates spans Re and Im parts of it
        f = ann[0]
        lam = []
        for i, sg_ in zip(order, found):
            fx, fy = fn_part(f, i)
            lam.append(Scalar(fx, -sg_ * fy))
        if any(not l for l in lam):
            return None
        mu = []
        construction = "complex"
    else:
        return None
    bases = [blocks[i][4] for i in order]
    labels = [label_of(b[0][0], b[0][1]) if b[0][0] != "GL1R" else "GL1R" for b in bases]
    wit = {"construction": construction, "factors": labels, "lambda": [str(x) for x in lam],
           "mu": [format_param("mu", x) for x in mu]}
    if len(blocks) == 1:
        b0 = bases[0][0]
        if construction == "complex":
            kind, params = "II-A", {"base": b0[0], **b0[1]}
        elif cplx:
            l0 = lam[0]
            t = _theta_of(l0.re, l0.im * l0.im)
            kind, params = "II-C", {"base": b0[0], **b0[1]}
            if t is not None:
                params["theta"] = t
        else:
            kind, params = "II-B", {"base": b0[0], **b0[1]}
        wit["irreducible_family"] = kind
        wit["label"] = label_of(kind, params)
        wit["params"] = params
    return wit


# -- verdicts ---------------------------------------------------------------------

class Overall(str, Enum):
    CONSISTENT = "ConsistentWithTheorem"
    UNMATCHED = "ContainsUnmatched"
    NOT_TOTALLY_REDUCIBLE = "NotTotallyReducible"
    UNDETERMINED = "Undetermined"


SO_PQ_NOTE = ("so(p,q) with its canonical representation is read as the II-B family on List I-B (2a); "
              "the lists do not name it separately")


@dataclass
class FactorMatch:
    fingerprint: Fingerprint
    kind: str                       # "catalog", "type2", "gl1R-exception", "unmatched"
    label: str | None = None
    candidates: list = field(default_factory=list)
    witness: dict | None = None
    not_a_holonomy: bool = False
    complexification_consistent: bool | None = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"fingerprint": self.fingerprint.to_dict(), "match": self.kind, "label": self.label,
                "candidates": list(self.candidates), "witness": self.witness,
                "not_a_holonomy": self.not_a_holonomy, "complexification_consistent": self.complexification_consistent,
                "notes": list(self.notes)}


@dataclass
class Verdict:
    factors: list
    overall: Overall
    message: str = ""

    @property
    def not_a_holonomy(self) -> bool:
        return any(f.not_a_holonomy for f in self.factors)

    def to_dict(self) -> dict:
        return {"overall": self.overall.value, "not_a_holonomy": self.not_a_holonomy,
                "factors": [f.to_dict() for f in self.factors], "message": self.message}


def _param_label(lid: str, params: dict) -> str:
    return canonical_label(label_of(lid, params))


def _catalog_match(h: LinRep, fp: Fingerprint, summ) -> list[str]:
    """Ranked labels of catalog rows whose invariants agree with ``fp``."""
    seen = []
    for lid, params in catalog_candidates(fp):
        cont = CONTINUOUS.get(lid)
        if cont:
            rec = recover_parameter(lid, h, summ)
            if rec is None:
                # parameter not recoverable in closed form: keep the sample rows
                lab = _param_label(lid, params)
            else:
                lab = _param_label(lid, {**params, **rec})
        else:
            lab = _param_label(lid, params)
        if lab not in seen:
            seen.append(lab)
    return seen


def _complexification_agrees(h: LinRep, rc: str, seed: int) -> bool:
    hc = complexify_alg(h)
    split = len(decompose_direct_product(hc, seed)) > 1
    return split == (rc == RealClass.TOTALLY_COMPLEX.value)


def classify_factor(h: LinRep, seed: int = 0, berger: bool = True, cross_check: bool = True) -> FactorMatch:
    n = h.n
    if n == 1 and h.dim == 1:
        fp = fingerprint(h, seed, berger=berger)
        return FactorMatch(fp, "gl1R-exception", "gl(1,R)", witness={"note": "gl(1,R) = R in dimension 1"},
                           not_a_holonomy=True, complexification_consistent=True if cross_check else None,
                           notes=["the one-dimensional algebra R = gl(1,R) is not a holonomy"])
    fp = fingerprint(h, seed, berger=berger)
    fm = FactorMatch(fp, "unmatched")
    if berger and fp.berger_first is False:
        fm.not_a_holonomy = True
        fm.notes.append("fails Berger's first criterion")
    if h.dim == 0:
        fm.notes.append("zero algebra")
        return fm
    summ = irreducible_summands(h, seed)
    labels = _catalog_match(h, fp, summ)
    if labels:
        fm.kind, fm.label, fm.candidates = "catalog", labels[0], labels
        fm.notes.append("consistent with list row")
    else:
        wit = recognize_type2(h, summ, derived_and_split(h))
        if wit is not None:
            fm.kind, fm.witness = "type2", wit
            fm.label = wit.get("label", "type2")
            fm.candidates = [fm.label]
            if h.n == 2 and h.dim == 1 and h.contains(Matrix.identity(2)):
                # R Id on R^2 is also the degenerate II-C row on gl(1,C) at theta = 0
                fm.candidates.append(DEGENERATE_IIC)
            if wit.get("params", {}).get("base") == "I-B:2a":
                fm.notes.append(SO_PQ_NOTE)
    if cross_check:
        fm.complexification_consistent = _complexification_agrees(h, fp.real_class, seed)
    return fm


def classify(h: LinRep, seed: int = 0, berger: bool = True, cross_check: bool = True) -> Verdict:
    try:
        factors = decompose_direct_product(h, seed, over_complex=False)
        out = [classify_factor(f, seed, berger, cross_check) for f in factors]
    except NotTotallyReducible as exc:
        return Verdict([], Overall.NOT_TOTALLY_REDUCIBLE, str(exc))
    except Undetermined as exc:
        return Verdict([], Overall.UNDETERMINED, str(exc))
    overall = Overall.UNMATCHED if any(f.kind == "unmatched" for f in out) else Overall.CONSISTENT
    return Verdict(out, overall)


def expected_label(list_id: str, params: dict) -> str:
    """The label classify should report for a catalog instance."""
    e = CATALOG[list_id]
    if e.typ == "II":
        p = dict(params)
        return label_of(list_id, p)
    return canonical_label(label_of(list_id, params))


# -- table verification -------------------------------------------------------------

CHECKS = ("dim_column", "irreducibility", "real_class", "property_C", "complexification", "berger_first")


def _natural(label: str):
    import re
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", label)]


def verify_entry(list_id: str, params: dict, seed: int = 0, timings: bool = False) -> dict:
    """Run every applicable table check on one catalog instance."""
    import time
    from .repkit.catalog import ConditionViolated, MetadataOnly
    e = CATALOG[list_id]
    rec = {"id": list_id, "params": {k: format_param(k, v) for k, v in sorted(params.items())},
           "label": label_of(list_id, params)}
    checks = {}
    t0 = time.perf_counter()
    try:
        h = construct_entry(list_id, params)
    except (ConditionViolated, MetadataOnly) as exc:
        rec["checks"] = {c: "skip" for c in CHECKS}
        rec["skip_reason"] = f"{type(exc).__name__}: {exc}"
        return rec
    checks["dim_column"] = "pass" if h.space_dim == e.space_dim(params) else "fail"
    summ = irreducible_summands(h, seed)
    checks["irreducibility"] = "pass" if len(summ) == e.summands(**params) else "fail"
    rc = real_class(h, seed).value
    checks["real_class"] = "pass" if rc == e.real_class else "fail"
    if e.typ == "I":
        pr = first_prolongation(h)
        checks["property_C"] = "pass" if (pr.property_C and pr.dim_h1 > 0) else "fail"
    else:
        checks["property_C"] = "skip"
    checks["complexification"] = "pass" if _complexification_agrees(h, rc, seed) else "fail"
    b = berger_test(h)
    checks["berger_first"] = "skip" if b.first_criterion is None else ("pass" if b.first_criterion else "fail")
    rec["checks"] = checks
    if timings:
        rec["seconds"] = round(time.perf_counter() - t0, 3)
    return rec


def _verify_job(args):
    lid, items, seed, timings = args
    return verify_entry(lid, dict(items), seed, timings)


def verify_tables(max_space_dim: int = 12, seed: int = 0, timings: bool = False,
                  workers: int | None = None) -> dict:
    """Checks for every enumerable modeled entry with space_dim <= max_space_dim.

    Entries run in a process pool of ``workers`` (default: HOLONOMY_THREADS or 1);
    records are sorted by label, so the report does not depend on scheduling.
    """
    import os
    jobs = []
    skipped = []
    for e, p in enumerate_catalog(max_space_dim, include_metadata=True):
        if e.metadata_only:
            skipped.append({"id": e.list_id, "params": {}, "label": e.list_id,
                            "checks": {c: "skip" for c in CHECKS},
                            "skip_reason": f"MetadataOnly: {e.h} has no matrix model"})
            continue
        jobs.append((e.list_id, tuple(sorted(p.items())), seed, timings))
    if workers is None:
        workers = int(os.environ.get("HOLONOMY_THREADS", "1") or 1)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as ex:
            records = list(ex.map(_verify_job, jobs))
    else:
        records = [_verify_job(j) for j in jobs]
    records += skipped
    records.sort(key=lambda r: _natural(r["label"]))
    agg = {"passed": 0, "failed": 0, "skipped": 0}
    for r in records:
        vals = r["checks"].values()
        if any(v == "fail" for v in vals):
            r["status"] = "fail"
            agg["failed"] += 1
        elif all(v == "skip" for v in vals):
            r["status"] = "skip"
            agg["skipped"] += 1
        else:
            r["status"] = "pass"
            agg["passed"] += 1
    return {"max_space_dim": max_space_dim, "seed": seed, "entries": records, "aggregate": agg}

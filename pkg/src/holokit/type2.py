"""Type-II constructions: a generic hyperplane z in the product of the centers
of List I factors, plus the semisimple parts, acting block-diagonally.

Complex version: factors from List I-A, z = {w in C^p : sum lam_j w_j = 0}.
Real version: p factors from List I-A and q from List I-B (or gl(1,R)),
z = {sum Im(lam_j w_j) + sum mu_k u_k = 0} inside C^p x R^q.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactmat import I, Matrix, Scalar, block_diag, linalg, realify_block
from .liecore import LinRep
from .repkit.catalog import (CATALOG, ConditionViolated, MetadataOnly, construct_entry,
                             format_param, parse_param, semisimple_entry)

__all__ = [
    "Type2Spec", "P1Violated", "P2Violated", "BadEntry", "DimensionTooSmall", "MetadataOnly",
    "GL1R", "complex_construction", "real_construction", "irreducible_type2", "parse_factor",
]

GL1R = "GL1R"


class P1Violated(ValueError):
    pass


class P2Violated(ValueError):
    pass


class BadEntry(ValueError):
    pass


class DimensionTooSmall(ValueError):
    pass


def parse_factor(text: str):
    """``"I-A:1(m=2)"`` or ``"I-B:2a(p=2,q=1)"`` or ``"GL1R"`` -> (id, params)."""
    text = text.strip()
    if text == GL1R:
        return GL1R
    if "(" not in text:
        return (text, {})
    lid, rest = text.split("(", 1)
    body = rest.rstrip(")")
    params = {}
    for item in filter(None, (s.strip() for s in body.split(";") if s) if ";" in body else
                       (s.strip() for s in _split_commas(body))):
        k, v = item.split("=", 1)
        params[k.strip()] = parse_param(k.strip(), v)
    return (lid.strip(), params)


def _split_commas(body):
    # theta values contain a comma; they never occur in List I factors
    return body.split(",")


def _factor_text(f) -> str:
    if f == GL1R:
        return GL1R
    lid, params = f
    if not params:
        return lid
    return lid + "(" + ",".join(f"{k}={format_param(k, v)}" for k, v in sorted(params.items())) + ")"


@dataclass
class Type2Spec:
    complex_factors: list = field(default_factory=list)
    real_factors: list = field(default_factory=list)
    lam: list = field(default_factory=list)
    mu: list = field(default_factory=list)

    def __post_init__(self):
        self.complex_factors = [parse_factor(f) if isinstance(f, str) else f for f in self.complex_factors]
        self.real_factors = [parse_factor(f) if isinstance(f, str) else f for f in self.real_factors]
        self.lam = [Scalar.parse(x) if isinstance(x, str) else Scalar.coerce(x) for x in self.lam]
        self.mu = [parse_rational_any(x) for x in self.mu]
        if len(self.lam) != len(self.complex_factors) or len(self.mu) != len(self.real_factors):
            raise ValueError("one coefficient per factor is required")

    @property
    def p(self) -> int:
        return len(self.complex_factors)

    @property
    def q(self) -> int:
        return len(self.real_factors)

    def to_dict(self) -> dict:
        return {"complex_factors": [_factor_text(f) for f in self.complex_factors],
                "real_factors": [_factor_text(f) for f in self.real_factors],
                "lambda": [str(x) for x in self.lam], "mu": [format_param("mu", x) for x in self.mu]}


def parse_rational_any(x) -> Fraction:
    return parse_param("mu", x) if isinstance(x, str) else Fraction(x)


def _load(f, allowed: tuple[str, ...]):
    """Base algebra of a factor: (realified LinRep, semisimple part, complex?)."""
    if f == GL1R:
        if "B" not in allowed:
            raise BadEntry("gl(1,R) is only allowed as a real factor")
        h = LinRep(1, [Matrix.identity(1)])
        return h, LinRep(1, [], check=False), False
    lid, params = f
    e = CATALOG.get(lid)
    if e is None or e.typ != "I" or e.part not in allowed:
        want = " or ".join(f"List I-{a}" for a in allowed)
        raise BadEntry(f"{lid} is not an entry of {want}")
    if e.metadata_only:
        raise MetadataOnly(f"{lid} has no matrix model and cannot enter a construction")
    h = construct_entry(lid, params)
    return h, semisimple_entry(lid, params), e.part == "A"


def _assemble(blocks, z_actions, name, meta, J):
    """``blocks``: (n_i, semisimple gens); ``z_actions``: per z basis element the
    list of per-block diagonal matrices."""
    sizes = [n for n, _ in blocks]
    gens = []
    for acts in z_actions:
        gens.append(block_diag(*acts))
    for i, (n, sgens) in enumerate(blocks):
        for g in sgens:
            gens.append(block_diag(*[g if k == i else Matrix.zeros(sizes[k]) for k in range(len(sizes))]))
    N = sum(sizes)
    return LinRep.from_matrices(N, gens, complex_structure=J, meta=meta, name=name)


def _scalar_block(n: int, w: Scalar, J: Matrix | None) -> Matrix:
    """Real matrix of multiplication by w on a block (J gives i)."""
    w = Scalar.coerce(w)
    M = Matrix.identity(n, w.re)
    if w.im:
        M = M + J.scale(w.im)
    return M


def complex_construction(spec: Type2Spec) -> LinRep:
    if spec.q:
        raise BadEntry("the complex construction takes List I-A factors only")
    if spec.p < 1:
        raise BadEntry("at least one factor is required")
    if any(not x for x in spec.lam):
        raise P1Violated("every lambda_j must be nonzero")
    loaded = [_load(f, ("A",)) for f in spec.complex_factors]
    blocks = [(h.n, list(s.gens)) for h, s, _ in loaded]
    Js = [h.complex_structure for h, _, _ in loaded]
    lam = spec.lam
    # complex basis of z: w = e_j - (lam_j / lam_0) e_0, then times i for the real basis
    z_actions = []
    for j in range(1, spec.p):
        w = {0: -(lam[j] / lam[0]), j: Scalar(1)}
        for unit in (Scalar(1), I):
            z_actions.append([_scalar_block(n, w.get(k, Scalar(0)) * unit, Js[k])
                              for k, (n, _) in enumerate(blocks)])
    J = block_diag(*Js)
    meta = {"construction": "type2-complex", "spec": spec.to_dict()}
    return _assemble(blocks, z_actions, "type2-complex", meta, J)


def real_construction(spec: Type2Spec) -> LinRep:
    if spec.p + spec.q < 1:
        raise BadEntry("at least one factor is required")
    if any(not x for x in spec.lam) or any(not x for x in spec.mu):
        raise P2Violated("every lambda_j and mu_k must be nonzero")
    cx = [_load(f, ("A",)) for f in spec.complex_factors]
    rl = [_load(f, ("B",)) for f in spec.real_factors]
    loaded = cx + rl
    n = sum(h.n for h, _, _ in loaded)
    if n < 2:
        raise DimensionTooSmall(f"total real dimension {n} < 2")
    blocks = [(h.n, list(s.gens)) for h, s, _ in loaded]
    Js = [h.complex_structure for h, _, _ in cx]
    # coordinates (x_1, y_1, ..., x_p, y_p, u_1, ..., u_q) of a = C^p x R^q
    coeffs = {}
    for j, lam in enumerate(spec.lam):
        coeffs[2 * j] = lam.im          # Im(lam (x + iy)) = Im(lam) x + Re(lam) y
        coeffs[2 * j + 1] = lam.re
    for k, mu in enumerate(spec.mu):
        coeffs[2 * spec.p + k] = mu
    dim_a = 2 * spec.p + spec.q
    zbasis = linalg.nullspace([{c: v for c, v in coeffs.items() if v}], dim_a)
    z_actions = []
    for v in zbasis:
        acts = []
        for j in range(spec.p):
            acts.append(_scalar_block(blocks[j][0], Scalar(v.get(2 * j, 0), v.get(2 * j + 1, 0)), Js[j]))
        for k in range(spec.q):
            acts.append(Matrix.identity(blocks[spec.p + k][0], v.get(2 * spec.p + k, 0)))
        z_actions.append(acts)
    J = None
    if spec.q == 0:
        J = block_diag(*Js)
    meta = {"construction": "type2-real", "spec": spec.to_dict()}
    return _assemble(blocks, z_actions, "type2-real", meta, J)


def irreducible_type2(kind: str, base_id: str, params: dict | None = None, theta=None) -> LinRep:
    """II-A / II-B: the semisimple part of a List I row; II-C: R + s with sigma_theta."""
    params = {k: (parse_param(k, v) if isinstance(v, str) else v) for k, v in (params or {}).items()}
    f = (base_id, params)
    if kind == "II-A":
        return complex_construction(Type2Spec([f], [], [1], []))
    if kind == "II-B":
        return real_construction(Type2Spec([], [f], [], [1]))
    if kind == "II-C":
        if theta is None:
            raise ConditionViolated("II-C needs theta")
        if isinstance(theta, str):
            theta = parse_param("theta", theta)
        c, s = theta
        if c * c + s * s != 1 or c < 0 or s < 0:
            raise ConditionViolated("theta must be a rational point of the unit circle with 0 <= theta <= pi/2")
        # z = {w : Im(lam w) = 0} = R * conj(lam), so lam = c - s i gives t (c + s i)
        return real_construction(Type2Spec([f], [], [Scalar(c, -s)], []))
    raise ValueError(f"unknown Type-II kind {kind!r}")

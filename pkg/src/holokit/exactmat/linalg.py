"""Certified exact row reduction over Q.

Rows are sparse ``{column: rational}`` dicts. Elimination runs modulo a
61-bit prime on content-stripped integer rows; the reduced rows are lifted by
rational reconstruction (CRT over more primes if needed) and then verified
exactly against every input row. A verified lift is the true rational RREF:
its rows are independent by shape, span every input row, and their number is
the rank modulo p, which never exceeds the rank over Q.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "PRIMES",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "reduce_against",
    "integer_row",
    "ModularEchelon",
]

# largest primes below 2**61
PRIMES = (
    2305843009213693951,
    2305843009213693921,
    2305843009213693907,
    2305843009213693669,
    2305843009213693613,
    2305843009213693561,
    2305843009213693457,
    2305843009213693439,
)


def integer_row(row: dict) -> dict:
    """Scale a rational row to coprime integers (fraction-free content strip)."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            d = v.denominator
            den = den * d // gcd(den, d)
    out = {}
    g = 0
    for c, v in row.items():
        if v:
            iv = int(v * den) if den != 1 else int(v)
            out[c] = iv
            g = gcd(g, iv)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


class ModularEchelon:
    """Incremental echelon form modulo ``p`` with leftmost-column pivots."""

    def __init__(self, p: int = PRIMES[0]):
        self.p = p
        self.pivots: dict[int, dict[int, int]] = {}

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        p = self.p
        pivots = self.pivots
        r = {c: v % p for c, v in row.items() if v % p}
        heap = [c for c in r if c in pivots]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = r.get(c)
            if not a:
                continue
            for k, v in pivots[c].items():
                nv = (r.get(k, 0) - a * v) % p
                if nv:
                    if k not in r and k in pivots:
                        heapq.heappush(heap, k)
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def add(self, row: dict[int, int]) -> int | None:
        """Insert ``row``; return its new pivot column or None if dependent."""
        r = self.reduce(row)
        if not r:
            return None
        c = min(r)
        inv = pow(r[c], -1, self.p)
        if inv != 1:
            p = self.p
            r = {k: v * inv % p for k, v in r.items()}
        self.pivots[c] = r
        return c

    def rank(self) -> int:
        return len(self.pivots)

    def reduced(self) -> list[tuple[int, dict[int, int]]]:
        """Back-substitute to reduced echelon form; rows sorted by pivot."""
        p = self.p
        piv = self.pivots
        done: dict[int, dict[int, int]] = {}
        for c in sorted(piv, reverse=True):
            r = dict(piv[c])
            for k in sorted(k for k in r if k != c and k in done):
                a = r.get(k)
                if not a:
                    continue
                for kk, v in done[k].items():
                    nv = (r.get(kk, 0) - a * v) % p
                    if nv:
                        r[kk] = nv
                    else:
                        r.pop(kk, None)
            done[c] = r
        return [(c, done[c]) for c in sorted(done)]


def _ratrecon(a: int, m: int) -> Fraction | None:
    """Rational reconstruction of ``a mod m`` with |num|, den <= sqrt(m/2)."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _crt(a1: int, m1: int, a2: int, m2: int) -> int:
    t = (a2 - a1) * pow(m1, -1, m2) % m2
    return a1 + m1 * t


def _lift(residues: list[tuple[int, dict[int, int]]], modulus: int):
    out = []
    for c, r in residues:
        row = {}
        for k, v in r.items():
            q = _ratrecon(v, modulus)
            if q is None:
                return None
            if q:
                row[k] = q
        out.append((c, row))
    return out


def _verify(rows: list[dict], lifted: list[tuple[int, dict]]) -> bool:
    piv = dict(lifted)
    for row in rows:
        acc: dict[int, Fraction] = {}
        for k, v in row.items():
            if v:
                acc[k] = acc.get(k, 0) + v
        for c in [c for c in acc if c in piv]:
            a = acc.get(c, 0)
            if not a:
                continue
            for k, v in piv[c].items():
                nv = acc.get(k, 0) - a * v
                if nv:
                    acc[k] = nv
                else:
                    acc.pop(k, None)
        if any(acc.values()):
            return False
    return True


def rref(rows, ncols: int | None = None) -> list[tuple[int, dict[int, Fraction]]]:
    """Reduced row echelon form of the span of ``rows`` as ``[(pivot, row)]``.

    Every returned row has a 1 at its pivot and zeros at all other pivots.
    """
    rows = [r for r in (dict(r) for r in rows) if any(r.values())]
    if not rows:
        return []
    irows = [integer_row(r) for r in rows]
    irows.sort(key=lambda r: (min(r), len(r)))
    best = None  # (pattern, residues, modulus)
    for p in PRIMES:
        ech = ModularEchelon(p)
        for r in irows:
            ech.add(r)
        red = ech.reduced()
        pattern = tuple(c for c, _ in red)
        if best is None or len(pattern) > len(best[0]):
            best = (pattern, red, p)
        elif pattern == best[0]:
            pat, old, m = best
            merged = []
            for (c, a), (_, b) in zip(old, red):
                keys = set(a) | set(b)
                merged.append((c, {k: _crt(a.get(k, 0), m, b.get(k, 0), p) for k in keys}))
            best = (pat, merged, m * p)
        else:
            continue
        lifted = _lift(best[1], best[2])
        if lifted is not None and _verify(rows, lifted):
            return lifted
    raise ArithmeticError("modular RREF failed to certify; entries too large")


def rank(rows) -> int:
    return len(rref(rows))


def nullspace(rows, ncols: int) -> list[dict[int, Fraction]]:
    """Basis of ``{x : row . x = 0 for every row}`` in free-column form."""
    red = rref(rows, ncols)
    pivcols = {c for c, _ in red}
    basis = []
    for f in range(ncols):
        if f in pivcols:
            continue
        v = {f: Fraction(1)}
        for c, r in red:
            a = r.get(f)
            if a:
                v[c] = -a
        basis.append(v)
    return basis


def reduce_against(vec: dict, red: list[tuple[int, dict]]) -> dict:
    """Residue of ``vec`` modulo a reduced echelon basis (zero iff in span)."""
    piv = dict(red)
    acc = {k: v for k, v in vec.items() if v}
    for c in [c for c in list(acc) if c in piv]:
        a = acc.get(c, 0)
        if not a:
            continue
        for k, v in piv[c].items():
            nv = acc.get(k, 0) - a * v
            if nv:
                acc[k] = nv
            else:
                acc.pop(k, None)
    return acc


def solve(rows, rhs, ncols: int) -> dict[int, Fraction] | None:
    """One solution of ``A x = b`` (rows of A, entries of b) or None."""
    aug = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[ncols] = -Fraction(b)
        aug.append(row)
    ker = nullspace(aug, ncols + 1)
    for v in ker:
        t = v.get(ncols)
        if t:
            return {k: x / t for k, x in v.items() if k != ncols and x}
    return None

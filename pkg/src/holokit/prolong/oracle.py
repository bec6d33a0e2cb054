"""Dense brute-force reference solver for dim h^(1), dim K(h), dim K^1(h).

Unknowns are full coordinate tensors; membership in h is imposed through
the annihilator of h in gl(n)*, and ranks are taken by flint over Z.
No packing, no h-coordinates and no sparsity are used.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

import flint

from ..liecore import LinRep


def _int_rows(rows):
    out = []
    for r in rows:
        den = 1
        for x in r:
            if x:
                den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def _rank(rows, ncols) -> int:
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return flint.fmpz_mat(_int_rows(rows)).rank()


def _nullspace(rows, ncols):
    rows = [r for r in rows if any(r)]
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    M = flint.fmpq_mat(len(rows), ncols, [flint.fmpq(Fraction(x).numerator, Fraction(x).denominator)
                                          for r in rows for x in r])
    R, rk = M.rref()
    piv = []
    for i in range(rk):
        j = next(j for j in range(ncols) if R[i, j] != 0)
        piv.append(j)
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, j in enumerate(piv):
            q = R[i, f]
            v[j] = -Fraction(int(q.p), int(q.q))
        basis.append(v)
    return basis


def annihilator(h: LinRep):
    n = h.n
    gens = [[g[r, c].re for r in range(n) for c in range(n)] for g in h.gens]
    # functionals phi on gl(n) with phi(g) = 0: nullspace of the generator rows
    return _nullspace(gens, n * n)


def dense_dims(h: LinRep, with_k1: bool = True) -> dict:
    n = h.n
    ann = annihilator(h)
    # h^(1): B[i][j][k] = B(e_i, e_j)_k, index (i*n + j)*n + k
    N = n ** 3
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r = [0] * N
                r[(i * n + j) * n + k] += 1
                r[(j * n + i) * n + k] -= 1
                rows.append(r)
    for i in range(n):
        for phi in ann:
            r = [0] * N
            for k in range(n):
                for j in range(n):
                    # matrix (B(e_i, .))[k, j] = B[i][j][k]
                    r[(i * n + j) * n + k] = phi[k * n + j]
            rows.append(r)
    dim_h1 = N - _rank(rows, N)
    # K(h): unknown matrices R(e_i, e_j) for i < j, index (p*n + k)*n + l = R(e_i, e_j)[k, l]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    P = {pr: a for a, pr in enumerate(pairs)}
    M = len(pairs) * n * n

    def Rcol(i, j, k, l):
        if i < j:
            return 1, (P[(i, j)] * n + k) * n + l
        return -1, (P[(j, i)] * n + k) * n + l

    rows = []
    for p in range(len(pairs)):
        for phi in ann:
            r = [0] * M
            for k in range(n):
                for l in range(n):
                    r[(p * n + k) * n + l] = phi[k * n + l]
            rows.append(r)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) < 3:
                    continue
                for l in range(n):
                    r = [0] * M
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        s, col = Rcol(a, b, l, c)
                        r[col] += s
                    rows.append(r)
    Kb = _nullspace(rows, M) if M else []
    out = {"dim_h1": dim_h1, "dim_K": len(Kb)}
    if not with_k1:
        return out
    # K^1: S_x = sum_kappa s[x, kappa] K_kappa, cyclic identity in full coordinates
    m = len(Kb)
    U = n * m
    rows = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if len({x, y, z}) < 3:
                    continue
                for k in range(n):
                    for l in range(n):
                        r = [0] * U
                        for (a, b, c) in ((x, y, z), (y, z, x), (z, x, y)):
                            for kap in range(m):
                                s, col = Rcol(b, c, k, l)
                                v = Kb[kap][col]
                                if v:
                                    r[a * m + kap] += s * v
                        rows.append(r)
    out["dim_K1"] = U - _rank(rows, U) if U else 0
    return out

"""Brute-force reference computations for small algebras.

Nothing here shares code with the cochain indexing, the coboundary
matrices or the elimination kernel. Cochains are full tables over all
ordered argument tuples and ranks come from a plain Fraction Gaussian
elimination. Intended for dimension <= 4.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .algebra import LieAlgebra, bracket


def _structure(g: LieAlgebra):
    n = g.dim
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return [[list(bracket(g, basis[i], basis[j])) for j in range(n)] for i in range(n)]


def naive_rank(rows) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c] / m[r][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _basis_cochains(n: int, p: int):
    """Alternating basis cochains as dicts over all ordered p-tuples."""
    out = []
    for t in itertools.combinations(range(n), p):
        for c in range(n):
            table = {}
            for perm in itertools.permutations(t):
                vec = [Fraction(0)] * n
                vec[c] = Fraction(_perm_sign(perm))
                table[perm] = vec
            out.append(table)
    return out


def _delta_full(struct, n: int, p: int, phi: dict) -> list[Fraction]:
    def ph(args):
        return phi.get(tuple(args), [Fraction(0)] * n)

    def br(x, v):
        # [e_x, v]
        out = [Fraction(0)] * n
        for j, a in enumerate(v):
            if a:
                for k in range(n):
                    out[k] += a * struct[x][j][k]
        return out

    flat = []
    for xs in itertools.product(range(n), repeat=p + 1):
        val = [Fraction(0)] * n
        if p == 0:
            val = br(xs[0], ph(()))
        else:
            for s in range(p + 1):
                rest = xs[:s] + xs[s + 1:]
                term = br(xs[s], ph(rest))
                sign = (-1) ** s
                val = [a + sign * b for a, b in zip(val, term)]
            for s in range(p + 1):
                for t in range(s + 1, p + 1):
                    rest = xs[:s] + xs[s + 1:t] + xs[t + 1:]
                    sign = (-1) ** (s + t)
                    for m, cm in enumerate(struct[xs[s]][xs[t]]):
                        if cm:
                            term = ph((m,) + rest)
                            val = [a + sign * cm * b for a, b in zip(val, term)]
        flat.extend(val)
    return flat


def delta_rank(g: LieAlgebra, p: int) -> int:
    n = g.dim
    if p < 0:
        return 0
    struct = _structure(g)
    if p == 0:
        cochains = [{(): [Fraction(int(i == c)) for i in range(n)]} for c in range(n)]
    else:
        cochains = _basis_cochains(n, p)
    return naive_rank([_delta_full(struct, n, p, phi) for phi in cochains])


def cohomology_dims(g: LieAlgebra, p: int) -> tuple[int, int, int, int]:
    """``(dim C^p, dim Z^p, dim B^p, dim H^p)`` by enumeration."""
    n = g.dim
    dim_c = n * len(list(itertools.combinations(range(n), p)))
    dim_z = dim_c - delta_rank(g, p)
    dim_b = delta_rank(g, p - 1) if p >= 1 else 0
    return dim_c, dim_z, dim_b, dim_z - dim_b


def derivation_dim(g: LieAlgebra) -> int:
    """``dim Der(g)`` from the residuals of the elementary matrices."""
    n = g.dim
    struct = _structure(g)
    rows = []
    for a in range(n):
        for b in range(n):
            # D = E_ab: D e_b = e_a
            res = []
            for i in range(n):
                for j in range(n):
                    lhs = [Fraction(0)] * n
                    # D[e_i, e_j]
                    lhs[a] += struct[i][j][b]
                    if i == b:
                        lhs = [x - y for x, y in zip(lhs, struct[a][j])]
                    if j == b:
                        lhs = [x - y for x, y in zip(lhs, struct[i][a])]
                    res.extend(lhs)
            rows.append(res)
    return n * n - naive_rank(rows)


def center_dim(g: LieAlgebra) -> int:
    n = g.dim
    struct = _structure(g)
    rows = [[struct[j][i][k] for i in range(n) for k in range(n)] for j in range(n)]
    return n - naive_rank(rows)


def inner_dim(g: LieAlgebra) -> int:
    n = g.dim
    struct = _structure(g)
    return naive_rank([[struct[x][j][k] for j in range(n) for k in range(n)] for x in range(n)])


# ----------------------------------------------------------------------
# random 3-dimensional Lie algebras

_SEEDS_3D = [
    {},
    {(0, 1): {2: 1}},
    {(0, 1): {1: 1}},
    {(0, 1): {1: 1}, (0, 2): {2: 1}},
    {(0, 1): {1: 1}, (0, 2): {2: -1}},
    {(0, 1): {1: 1}, (0, 2): {2: Fraction(1, 3)}},
    {(0, 1): {1: 1}, (0, 2): {1: 1, 2: 1}},
    {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
    {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}},
]


def _invert(m):
    n = len(m)
    a = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def random_algebra_3d(rng: random.Random) -> LieAlgebra:
    """A seed 3-dimensional algebra moved by a random integer change of basis."""
    seed = LieAlgebra(3, rng.choice(_SEEDS_3D))
    while True:
        p = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        if _det3(p):
            break
    pinv = _invert(p)
    cols = [[Fraction(p[r][c]) for r in range(3)] for c in range(3)]
    brackets = {}
    for i in range(3):
        for j in range(i + 1, 3):
            v = bracket(seed, cols[i], cols[j])
            new = [sum(pinv[r][s] * v[s] for s in range(3)) for r in range(3)]
            if any(new):
                brackets[(i, j)] = new
    return LieAlgebra(3, brackets, ["f1", "f2", "f3"])

"""Chevalley-Eilenberg cochains of a Lie algebra with adjoint coefficients.

A ``p``-cochain is stored on ascending basis tuples only. Flat coordinates
enumerate the tuples in lexicographic order with the target basis index
running fastest, so the coordinate of ``(T, c)`` is ``pos(T) * n + c``.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping

from .algebra import LieAlgebra
from .linalg import MatrixQ, VectorQ, rank, solve_affine


def cochain_dim(n: int, p: int) -> int:
    """``n * C(n, p)``; zero when ``p > n``."""
    if p < 0:
        raise ValueError("negative degree")
    return n * comb(n, p)


class CochainIndex:
    """Bijection between ``(ascending tuple, target)`` pairs and flat coordinates."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.tuples = tuple(itertools.combinations(range(n), p))
        self.position = {t: i for i, t in enumerate(self.tuples)}

    @property
    def size(self) -> int:
        return self.n * len(self.tuples)

    def flat(self, t: tuple[int, ...], c: int) -> int:
        return self.position[t] * self.n + c

    def unflat(self, idx: int) -> tuple[tuple[int, ...], int]:
        q, c = divmod(idx, self.n)
        return self.tuples[q], c


@lru_cache(maxsize=64)
def cochain_index(n: int, p: int) -> CochainIndex:
    return CochainIndex(n, p)


def _sort_with_sign(args) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    args = list(args)
    sign = 1
    for i in range(1, len(args)):
        j = i
        while j > 0 and args[j - 1] > args[j]:
            args[j - 1], args[j] = args[j], args[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(args, args[1:]):
        if a == b:
            return 0, tuple(args)
    return sign, tuple(args)


@dataclass(frozen=True, eq=False)
class Cochain:
    """Alternating ``degree``-linear map ``g^degree -> g``.

    ``coeffs`` maps ascending index tuples to the value on that tuple as a
    sparse ``{target: coefficient}`` dict. A 0-cochain has the single key
    ``()``.
    """

    degree: int
    algebra: LieAlgebra
    coeffs: Mapping[tuple[int, ...], Mapping[int, Fraction]] = field(default_factory=dict)

    def __post_init__(self):
        n = self.algebra.dim
        clean = {}
        for t, val in self.coeffs.items():
            t = tuple(t)
            if len(t) != self.degree or any(not 0 <= a < n for a in t):
                raise ValueError(f"bad argument tuple {t} for a degree-{self.degree} cochain")
            if any(a >= b for a, b in zip(t, t[1:])):
                raise ValueError(f"argument tuple {t} is not strictly ascending; use Cochain.from_values")
            v = {k: Fraction(c) for k, c in val.items() if c}
            if any(not 0 <= k < n for k in v):
                raise ValueError(f"target index out of range in {t}")
            if v:
                clean[t] = dict(sorted(v.items()))
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, g: LieAlgebra, p: int) -> Cochain:
        return cls(p, g, {})

    @classmethod
    def from_values(cls, g: LieAlgebra, p: int, values: Mapping) -> Cochain:
        """Build from values on arbitrary tuples, alternating into ascending form.

        A value on a tuple and on its permutation must agree up to sign;
        they are summed as given, so pass each unordered tuple once.
        """
        acc: dict[tuple[int, ...], dict[int, Fraction]] = {}
        for t, val in values.items():
            sign, st = _sort_with_sign(t)
            if sign == 0:
                continue
            d = acc.setdefault(st, {})
            for k, c in val.items():
                d[k] = d.get(k, 0) + sign * Fraction(c)
        return cls(p, g, acc)

    @classmethod
    def from_vector(cls, g: LieAlgebra, p: int, vec) -> Cochain:
        idx = cochain_index(g.dim, p)
        if len(vec) != idx.size:
            raise ValueError(f"vector of length {len(vec)} for C^{p} of dimension {idx.size}")
        acc: dict[tuple[int, ...], dict[int, Fraction]] = {}
        for i, v in enumerate(vec):
            if v:
                t, c = idx.unflat(i)
                acc.setdefault(t, {})[c] = v
        return cls(p, g, acc)

    @classmethod
    def constant(cls, g: LieAlgebra, v) -> Cochain:
        return cls(0, g, {(): {k: c for k, c in enumerate(v) if c}})

    @classmethod
    def from_linear_map(cls, g: LieAlgebra, m: MatrixQ) -> Cochain:
        """1-cochain ``e_j -> column j of m``."""
        if m.shape != (g.dim, g.dim):
            raise ValueError(f"expected a {g.dim}x{g.dim} matrix")
        acc: dict = {}
        for i, j, v in m.items():
            acc.setdefault((j,), {})[i] = v
        return cls(1, g, acc)

    def to_linear_map(self) -> MatrixQ:
        if self.degree != 1:
            raise ValueError("only 1-cochains are linear maps")
        n = self.algebra.dim
        return MatrixQ.from_entries(n, n, ((k, t[0], c) for t, val in self.coeffs.items() for k, c in val.items()))

    def value(self, args) -> dict[int, Fraction]:
        """Value on basis vectors ``e_{args[0]}, ...`` in any order."""
        sign, st = _sort_with_sign(args)
        if sign == 0:
            return {}
        val = self.coeffs.get(st, {})
        return {k: sign * c for k, c in val.items()} if sign < 0 else dict(val)

    def flat(self) -> dict[int, Fraction]:
        idx = cochain_index(self.algebra.dim, self.degree)
        return {idx.flat(t, k): c for t, val in self.coeffs.items() for k, c in val.items()}

    def to_vector(self) -> VectorQ:
        idx = cochain_index(self.algebra.dim, self.degree)
        out = [Fraction(0)] * idx.size
        for i, c in self.flat().items():
            out[i] = c
        return tuple(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, tuple((t, tuple(v.items())) for t, v in self.coeffs.items())))

    def __add__(self, other: Cochain) -> Cochain:
        self._compatible(other)
        acc = {t: dict(v) for t, v in self.coeffs.items()}
        for t, v in other.coeffs.items():
            d = acc.setdefault(t, {})
            for k, c in v.items():
                d[k] = d.get(k, 0) + c
        return Cochain(self.degree, self.algebra, acc)

    def __neg__(self) -> Cochain:
        return self.scale(-1)

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def scale(self, q) -> Cochain:
        q = Fraction(q)
        return Cochain(self.degree, self.algebra, {t: {k: q * c for k, c in v.items()} for t, v in self.coeffs.items()})

    def _compatible(self, other):
        if self.degree != other.degree or self.algebra != other.algebra:
            raise ValueError("cochains of different degree or algebra")


def delta_matrix(g: LieAlgebra, p: int) -> MatrixQ:
    """Matrix of the coboundary ``C^p -> C^{p+1}`` in flat coordinates."""
    return _delta_matrix(g, p)


@lru_cache(maxsize=32)
def _delta_matrix(g: LieAlgebra, p: int) -> MatrixQ:
    n = g.dim
    if p < 0:
        raise ValueError("negative degree")
    src = cochain_index(n, p)
    dst = cochain_index(n, p + 1)
    table = g.table
    entries = []
    add = entries.append
    if p == 0:
        # (delta v)(e_u) = [e_u, v]
        for u in range(n):
            for j, coeffs in table[u].items():
                for k, c in coeffs.items():
                    add((u * n + k, j, c))
        return MatrixQ.from_entries(dst.size, src.size, entries)
    spos = src.position
    for ui, U in enumerate(dst.tuples):
        base = ui * n
        for s in range(p + 1):
            sign = 1 if s % 2 == 0 else -1
            rest = U[:s] + U[s + 1:]
            col0 = spos[rest] * n
            for c, coeffs in table[U[s]].items():
                for k, v in coeffs.items():
                    add((base + k, col0 + c, sign * v))
        for s in range(p + 1):
            for t in range(s + 1, p + 1):
                coeffs = table[U[s]].get(U[t])
                if not coeffs:
                    continue
                sign = 1 if (s + t) % 2 == 0 else -1
                rest = U[:s] + U[s + 1:t] + U[t + 1:]
                for m, v in coeffs.items():
                    if m in rest:
                        continue
                    pos = bisect.bisect_left(rest, m)
                    sgn = sign if pos % 2 == 0 else -sign
                    col0 = spos[rest[:pos] + (m,) + rest[pos:]] * n
                    for c in range(n):
                        add((base + c, col0 + c, sgn * v))
    return MatrixQ.from_entries(dst.size, src.size, entries)


def apply_delta(c: Cochain) -> Cochain:
    """Coboundary of ``c`` evaluated directly from the defining formula."""
    g = c.algebra
    n = g.dim
    p = c.degree
    table = g.table
    out: dict[tuple[int, ...], dict[int, Fraction]] = {}
    if p == 0:
        v = c.value(())
        for u in range(n):
            acc: dict[int, Fraction] = {}
            for j, a in v.items():
                for k, x in table[u].get(j, {}).items():
                    acc[k] = acc.get(k, 0) + a * x
            out[(u,)] = acc
        return Cochain(1, g, out)
    for U in itertools.combinations(range(n), p + 1):
        acc = {}
        for s in range(p + 1):
            sign = 1 if s % 2 == 0 else -1
            inner = c.value(U[:s] + U[s + 1:])
            for j, a in inner.items():
                for k, x in table[U[s]].get(j, {}).items():
                    acc[k] = acc.get(k, 0) + sign * a * x
        for s in range(p + 1):
            for t in range(s + 1, p + 1):
                sign = 1 if (s + t) % 2 == 0 else -1
                rest = U[:s] + U[s + 1:t] + U[t + 1:]
                for m, x in table[U[s]].get(U[t], {}).items():
                    for k, a in c.value((m,) + rest).items():
                        acc[k] = acc.get(k, 0) + sign * x * a
        out[U] = acc
    return Cochain(p + 1, g, out)


def is_cocycle(c: Cochain) -> bool:
    return apply_delta(c).is_zero()


def is_coboundary(c: Cochain) -> Cochain | None:
    """A preimage under the coboundary, or ``None`` when ``c`` is not exact.

    Degree 0 has no coboundaries besides zero and raises ``ValueError``.
    """
    if c.degree == 0:
        raise ValueError("B^0 is zero; degree-0 cochains have no preimage")
    g = c.algebra
    sol = solve_affine(_delta_matrix(g, c.degree - 1), c.to_vector())
    if sol is None:
        return None
    return Cochain.from_vector(g, c.degree - 1, sol[0])


@lru_cache(maxsize=64)
def delta_rank(g: LieAlgebra, p: int) -> int:
    return rank(_delta_matrix(g, p))


@dataclass(frozen=True)
class CohomologyDims:
    p: int
    dim_C: int
    dim_Z: int
    dim_B: int
    dim_H: int

    def __post_init__(self):
        if self.dim_H != self.dim_Z - self.dim_B or self.dim_H < 0:
            raise ValueError(f"inconsistent cohomology dimensions {self}")


def cohomology_dims(g: LieAlgebra, p: int) -> CohomologyDims:
    """Exact dimensions of ``C^p``, ``Z^p``, ``B^p`` and ``H^p(g, g)``."""
    if p < 0:
        raise ValueError("negative degree")
    dim_c = cochain_dim(g.dim, p)
    dim_z = dim_c - delta_rank(g, p) if dim_c else 0
    dim_b = delta_rank(g, p - 1) if p >= 1 else 0
    return CohomologyDims(p, dim_c, dim_z, dim_b, dim_z - dim_b)


def independent_classes(cocycles: list[Cochain]) -> int:
    """Dimension of the span of ``cocycles`` in ``H^p``.

    All cochains must be cocycles of the same degree ``p >= 1`` on one
    algebra.
    """
    if not cocycles:
        return 0
    g = cocycles[0].algebra
    p = cocycles[0].degree
    for c in cocycles:
        c._compatible(cocycles[0])
    bmat = _delta_matrix(g, p - 1).transpose()
    rows = [dict(bmat.row(i)) for i in range(bmat.rows)]
    rows.extend(c.flat() for c in cocycles)
    stacked = MatrixQ(len(rows), bmat.cols, rows)
    return rank(stacked) - delta_rank(g, p - 1)

"""Lie algebras given by structure constants.

Basis indices are 0-based here; the text formats in :mod:`liecoho.io`
translate to the 1-based ``Y_1..Y_n`` convention at the boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .linalg import (
    MatrixQ,
    VectorQ,
    as_vector,
    nullspace_basis,
    power_rank_sequence,
    rank,
    rref,
    unit_vector,
)


class LieAlgebra:
    """Finite-dimensional Lie algebra over the rationals.

    ``brackets`` maps index pairs ``(i, j)`` to the expansion of
    ``[e_i, e_j]``, either as ``{k: coefficient}`` or as a dense sequence of
    length ``dim``. Pairs with ``i > j`` are stored negated; only ``i < j`` is
    kept. Construction does not check the Jacobi identity, see
    :func:`jacobi_check`.
    """

    def __init__(self, dim: int, brackets: Mapping | None = None, labels: Sequence[str] | None = None):
        if dim < 0:
            raise ValueError("negative dimension")
        self.dim = dim
        if labels is None:
            labels = [f"Y{i + 1}" for i in range(dim)]
        labels = tuple(str(s) for s in labels)
        if len(labels) != dim:
            raise ValueError(f"{len(labels)} labels for dimension {dim}")
        self.labels = labels
        constants: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), value in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"bracket index ({i}, {j}) out of range for dimension {dim}")
            if i == j:
                raise ValueError(f"bracket [e{i}, e{i}] must not be given")
            if isinstance(value, Mapping):
                items = value.items()
            else:
                if len(value) != dim:
                    raise ValueError(f"coefficient vector of length {len(value)} for dimension {dim}")
                items = enumerate(value)
            sign = 1 if i < j else -1
            key = (i, j) if i < j else (j, i)
            if key in constants:
                raise ValueError(f"bracket ({key[0]}, {key[1]}) given twice")
            coeffs = {}
            for k, c in items:
                if not 0 <= k < dim:
                    raise IndexError(f"coefficient index {k} out of range")
                c = Fraction(c)
                if c:
                    coeffs[k] = sign * c
            if coeffs:
                constants[key] = dict(sorted(coeffs.items()))
        self.constants = dict(sorted(constants.items()))

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.labels == other.labels and self.constants == other.constants

    @cached_property
    def _key(self):
        return (self.dim, self.labels, tuple((ij, tuple(c.items())) for ij, c in self.constants.items()))

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.constants)})"

    @cached_property
    def table(self) -> tuple[dict[int, dict[int, Fraction]], ...]:
        """``table[i][j]`` is ``[e_i, e_j]`` as a sparse dict, both orders present."""
        t = [{} for _ in range(self.dim)]
        for (i, j), coeffs in self.constants.items():
            t[i][j] = coeffs
            t[j][i] = {k: -c for k, c in coeffs.items()}
        return tuple(t)

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        return self.table[i].get(j, {})

    def basis(self, i: int) -> VectorQ:
        return unit_vector(self.dim, i)

    def is_abelian(self) -> bool:
        return not self.constants


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``Q^ambient_dim`` with a basis in reduced echelon form."""

    ambient_dim: int
    basis: tuple[VectorQ, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors) -> Subspace:
        vectors = [as_vector(v) for v in vectors if any(v)]
        if not vectors:
            return cls(ambient_dim, ())
        r, pivots = rref(MatrixQ.from_rows(vectors, ambient_dim))
        rows = r.to_lists()
        return cls(ambient_dim, tuple(tuple(rows[i]) for i in range(len(pivots))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        if not any(v):
            return True
        return rank(MatrixQ.from_rows(list(self.basis) + [as_vector(v)], self.ambient_dim)) == self.dim


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]
    residual: VectorQ


def _check_vector(g: LieAlgebra, x) -> VectorQ:
    if len(x) != g.dim:
        raise ValueError(f"vector of length {len(x)} for a {g.dim}-dimensional algebra")
    return as_vector(x)


def _sparse_bracket(g: LieAlgebra, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    table = g.table
    for i, a in x.items():
        row = table[i]
        for j, b in y.items():
            for k, c in row.get(j, {}).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def bracket(g: LieAlgebra, x, y) -> VectorQ:
    """Bilinear bracket ``[x, y]`` of two coordinate vectors."""
    x = _check_vector(g, x)
    y = _check_vector(g, y)
    s = _sparse_bracket(g, {i: v for i, v in enumerate(x) if v}, {j: v for j, v in enumerate(y) if v})
    return tuple(s.get(k, Fraction(0)) for k in range(g.dim))


def jacobi_check(g: LieAlgebra) -> list[JacobiViolation]:
    """All basis triples ``i < j < l`` whose Jacobiator is nonzero."""
    out = []
    for i, j, l in itertools.combinations(range(g.dim), 3):
        acc: dict[int, Fraction] = {}
        for a, b, c in ((i, j, l), (j, l, i), (l, i, j)):
            inner = g.basis_bracket(a, b)
            for k, v in _sparse_bracket(g, inner, {c: Fraction(1)}).items():
                acc[k] = acc.get(k, 0) + v
        if any(acc.values()):
            out.append(JacobiViolation((i, j, l), tuple(acc.get(k, Fraction(0)) for k in range(g.dim))))
    return out


def ad_matrix(g: LieAlgebra, y) -> MatrixQ:
    """Matrix of ``x -> [y, x]``; column ``j`` is ``[y, e_j]``."""
    y = _check_vector(g, y)
    ys = {i: v for i, v in enumerate(y) if v}
    entries = []
    for j in range(g.dim):
        for k, v in _sparse_bracket(g, ys, {j: Fraction(1)}).items():
            entries.append((k, j, v))
    return MatrixQ.from_entries(g.dim, g.dim, entries)


def center(g: LieAlgebra) -> Subspace:
    n = g.dim
    # row (i, k): coefficient of e_k in [x, e_i], linear in x
    entries = []
    for j in range(n):
        for i, coeffs in g.table[j].items():
            for k, c in coeffs.items():
                entries.append((i * n + k, j, c))
    m = MatrixQ.from_entries(n * n, n, entries)
    return Subspace.span(n, nullspace_basis(m))


def bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """The subspace ``[a, b]``."""
    vectors = []
    for x in a.basis:
        xs = {i: v for i, v in enumerate(x) if v}
        for y in b.basis:
            s = _sparse_bracket(g, xs, {j: v for j, v in enumerate(y) if v})
            if s:
                vectors.append(tuple(s.get(k, Fraction(0)) for k in range(g.dim)))
    return Subspace.span(g.dim, vectors)


def whole(g: LieAlgebra) -> Subspace:
    return Subspace(g.dim, tuple(unit_vector(g.dim, i) for i in range(g.dim)))


def derived_algebra(g: LieAlgebra) -> Subspace:
    """``C^1(g) = [g, g]``."""
    return Subspace.span(g.dim, [tuple(c.get(k, Fraction(0)) for k in range(g.dim)) for c in g.constants.values()])


def lower_central_series_dims(g: LieAlgebra) -> tuple[int, ...]:
    """Dimensions of ``C^0 = g, C^{i+1} = [g, C^i]``, stopping at 0 or when stable."""
    dims = [g.dim]
    term = whole(g)
    full = term
    while dims[-1] > 0:
        term = bracket_span(g, full, term)
        dims.append(term.dim)
        if dims[-1] == dims[-2]:
            break
    return tuple(dims)


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series_dims(g)[-1] == 0


def first_betti(g: LieAlgebra) -> int:
    return g.dim - derived_algebra(g).dim


def generator_indices(g: LieAlgebra) -> tuple[int, ...]:
    """Lowest-index basis vectors spanning a complement of ``C^1(g)``."""
    d = derived_algebra(g)
    chosen = []
    current = list(d.basis)
    r = len(current)
    for i in range(g.dim):
        trial = current + [unit_vector(g.dim, i)]
        if rank(MatrixQ.from_rows(trial, g.dim)) > r:
            current = trial
            r += 1
            chosen.append(i)
    return tuple(chosen)


@dataclass(frozen=True)
class CharacteristicSequence:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be non-increasing: {self.parts}")

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.parts == other
        if isinstance(other, CharacteristicSequence):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < CharacteristicSequence(tuple(other)).parts


def jordan_block_sizes(m: MatrixQ) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix, largest first."""
    n = m.rows
    ranks = (n,) + power_rank_sequence(m, n) if n else (0,)
    if ranks[-1] != 0:
        raise ValueError("matrix is not nilpotent")
    # blocks of size >= s: ranks[s-1] - ranks[s]
    at_least = [ranks[s - 1] - ranks[s] for s in range(1, n + 1)] + [0]
    parts = []
    for s in range(n, 0, -1):
        parts.extend([s] * (at_least[s - 1] - at_least[s]))
    return tuple(parts)


def characteristic_sequence_at(g: LieAlgebra, y) -> CharacteristicSequence:
    """Jordan block sizes of ``ad(y)`` for ``y`` outside ``C^1(g)``."""
    y = _check_vector(g, y)
    if derived_algebra(g).contains(y):
        raise ValueError("vector lies in the derived algebra C^1")
    try:
        return CharacteristicSequence(jordan_block_sizes(ad_matrix(g, y)))
    except ValueError:
        raise ValueError("ad(y) is not nilpotent") from None


def is_filiform(g: LieAlgebra) -> tuple[bool, VectorQ | None]:
    """Search for a vector with characteristic sequence ``(n-1, 1)``.

    Tries basis vectors outside ``C^1`` and then every combination of the
    generators with coefficients in ``{-1, 0, 1}``. ``(False, None)`` means
    no witness was found, which is conclusive only when ``b_1 > 2``.
    """
    n = g.dim
    if n < 2 or not is_nilpotent(g):
        return False, None
    target = (n - 1, 1)
    d = derived_algebra(g)
    gens = generator_indices(g)
    if n >= 3 and len(gens) > 2:
        # rank ad(y) = n - 2 would force dim C^1 >= n - 2
        return False, None
    candidates = [unit_vector(n, i) for i in range(n) if not d.contains(unit_vector(n, i))]
    for coeffs in itertools.product((1, 0, -1), repeat=len(gens)):
        if sum(1 for c in coeffs if c) < 2:
            continue
        v = [Fraction(0)] * n
        for c, i in zip(coeffs, gens):
            v[i] = Fraction(c)
        candidates.append(tuple(v))
    for y in candidates:
        if characteristic_sequence_at(g, y) == target:
            return True, y
    return False, None

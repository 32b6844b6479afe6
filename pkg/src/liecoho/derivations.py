"""Derivations, diagonal tori, weights and completeness."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieAlgebra, ad_matrix, center, generator_indices, is_filiform, is_nilpotent
from .linalg import MatrixQ, VectorQ, nullspace_basis, pivot_columns, rank, rref, unit_vector


@dataclass(frozen=True)
class DerivationSpace:
    ambient: LieAlgebra
    basis: tuple[MatrixQ, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class TorusBasis:
    """Diagonal derivations; ``weight_vectors[a][i]`` is the eigenvalue of ``e_i``."""

    ambient: LieAlgebra
    weight_vectors: tuple[VectorQ, ...]

    @property
    def dim(self) -> int:
        return len(self.weight_vectors)

    def matrices(self) -> tuple[MatrixQ, ...]:
        n = self.ambient.dim
        return tuple(MatrixQ.from_entries(n, n, ((i, i, d) for i, d in enumerate(w) if d)) for w in self.weight_vectors)


@dataclass(frozen=True)
class WeightSystem:
    torus_dim: int
    weights: tuple[VectorQ, ...]
    generators: tuple[int, ...]
    zero_weights: tuple[int, ...]


@dataclass(frozen=True)
class CompletenessVerdict:
    h0: int
    h1: int
    complete: bool
    derivation_witness: MatrixQ | None = None
    central_witness: VectorQ | None = None


def _flatten(m: MatrixQ) -> dict[int, Fraction]:
    # coordinate of D[a][b] is b * n + a: the 1-cochain ordering
    n = m.rows
    return {b * n + a: v for a, b, v in m.items()}


def _unflatten(vec, n: int) -> MatrixQ:
    return MatrixQ.from_entries(n, n, ((i % n, i // n, v) for i, v in enumerate(vec) if v))


def derivation_identity_holds(g: LieAlgebra, d: MatrixQ) -> bool:
    """``D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]`` for every basis pair."""
    n = g.dim
    cols = [d.column(j) for j in range(n)]
    table = g.table
    for i in range(n):
        for j in range(i + 1, n):
            lhs: dict[int, Fraction] = {}
            for k, c in table[i].get(j, {}).items():
                for a, v in enumerate(cols[k]):
                    if v:
                        lhs[a] = lhs.get(a, 0) + c * v
            for a, v in enumerate(cols[i]):
                if v:
                    for m, c in table[a].get(j, {}).items():
                        lhs[m] = lhs.get(m, 0) - v * c
            for b, v in enumerate(cols[j]):
                if v:
                    for m, c in table[i].get(b, {}).items():
                        lhs[m] = lhs.get(m, 0) - v * c
            if any(lhs.values()):
                return False
    return True


def derivation_system(g: LieAlgebra) -> MatrixQ:
    """Linear equations on ``D`` (unknown ``D[a][b]`` at ``b * n + a``) cutting out ``Der(g)``."""
    n = g.dim
    table = g.table
    entries = []
    row = 0
    for i in range(n):
        for j in range(i + 1, n):
            cij = table[i].get(j, {})
            # component m of D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j]
            for m in range(n):
                for k, c in cij.items():
                    entries.append((row + m, k * n + m, c))
            for a in range(n):
                for m, c in table[a].get(j, {}).items():
                    entries.append((row + m, i * n + a, -c))
                for m, c in table[i].get(a, {}).items():
                    entries.append((row + m, j * n + a, -c))
            row += n
    return MatrixQ.from_entries(row, n * n, entries)


def derivation_basis(g: LieAlgebra) -> DerivationSpace:
    n = g.dim
    return DerivationSpace(g, tuple(_unflatten(v, n) for v in nullspace_basis(derivation_system(g))))


def inner_basis(g: LieAlgebra) -> DerivationSpace:
    """Independent ``ad(e_i)``, lowest indices first."""
    n = g.dim
    ads = [ad_matrix(g, unit_vector(n, i)) for i in range(n)]
    if n == 0:
        return DerivationSpace(g, ())
    cols = MatrixQ.from_entries(n * n, n, ((k, i, v) for i, a in enumerate(ads) for k, v in _flatten(a).items()))
    return DerivationSpace(g, tuple(ads[i] for i in pivot_columns(cols)))


def diagonal_torus(g: LieAlgebra) -> TorusBasis:
    """Derivations diagonal in the given basis.

    The basis is normalised so that the weights on the generators (lowest
    index basis vectors outside ``C^1``) are in reduced echelon form: for
    ``L_n`` this gives ``Y_1 -> (1, 0)``, ``Y_2 -> (0, 1)``.
    """
    n = g.dim
    entries = []
    row = 0
    for (i, j), coeffs in g.constants.items():
        for k in coeffs:
            entries.append((row, k, 1))
            entries.append((row, i, -1))
            entries.append((row, j, -1))
            row += 1
    vectors = nullspace_basis(MatrixQ.from_entries(row, n, entries))
    if not vectors:
        return TorusBasis(g, ())
    gens = list(generator_indices(g))
    order = gens + [i for i in range(n) if i not in gens]
    w = MatrixQ.from_rows([[v[i] for i in order] for v in vectors], n)
    r, pivots = rref(w)
    rows = r.to_lists()
    out = []
    for a in range(len(pivots)):
        v = [Fraction(0)] * n
        for pos, i in enumerate(order):
            v[i] = rows[a][pos]
        out.append(tuple(v))
    return TorusBasis(g, tuple(out))


def torus_is_valid(g: LieAlgebra, t: TorusBasis) -> bool:
    """Each weight vector is a derivation and the set is independent."""
    for w in t.weight_vectors:
        if len(w) != g.dim:
            return False
        for (i, j), coeffs in g.constants.items():
            if any(w[k] != w[i] + w[j] for k in coeffs):
                return False
    if t.weight_vectors and rank(MatrixQ.from_rows(t.weight_vectors, g.dim)) != t.dim:
        return False
    return True


def weight_system(g: LieAlgebra, t: TorusBasis) -> WeightSystem:
    if not torus_is_valid(g, t):
        raise ValueError("torus is not a set of independent diagonal derivations of g")
    weights = tuple(tuple(w[i] for w in t.weight_vectors) for i in range(g.dim))
    zero = tuple(i for i, w in enumerate(weights) if not any(w))
    return WeightSystem(t.dim, weights, generator_indices(g), zero)


def is_complete(g: LieAlgebra) -> CompletenessVerdict:
    """Decide ``H^0(g, g) = H^1(g, g) = 0`` by direct computation.

    The derivation witness is the first basis derivation (free-column
    order of the derivation system) outside the span of the inner ones.
    """
    z = center(g)
    der = derivation_basis(g)
    inner = inner_basis(g)
    h0 = z.dim
    h1 = der.dim - inner.dim
    witness = None
    if h1 > 0:
        n2 = g.dim * g.dim
        rows = [_flatten(a) for a in inner.basis]
        r = len(rows)
        for d in der.basis:
            trial = rows + [_flatten(d)]
            if rank(MatrixQ(len(trial), n2, trial)) > r:
                witness = d
                break
    central = z.basis[0] if h0 else None
    return CompletenessVerdict(h0, h1, h0 == 0 and h1 == 0, witness, central)


def is_inner(g: LieAlgebra, d: MatrixQ) -> bool:
    inner = inner_basis(g)
    n2 = g.dim * g.dim
    rows = [_flatten(a) for a in inner.basis]
    return rank(MatrixQ(len(rows) + 1, n2, rows + [_flatten(d)])) == len(rows)


def rank_certificate(g: LieAlgebra) -> tuple[int, TorusBasis]:
    """Dimension of the diagonal torus, a lower bound for the rank.

    Requires ``g`` nilpotent; for a certified filiform ``g`` the bound
    ``<= 2`` is enforced.
    """
    if not is_nilpotent(g):
        raise ValueError("rank certificate needs a nilpotent algebra")
    t = diagonal_torus(g)
    if t.dim > 2 and is_filiform(g)[0]:
        raise ArithmeticError(f"filiform algebra with a {t.dim}-dimensional diagonal torus")
    return t.dim, t

"""Filiform families L_n, Q_n, A_n^k, B_n^k, C_n, torus extensions and r_h.

Family constructors use the 1-based labels ``Y1..Yn``; bracket tables are
written below in that numbering and shifted by one when stored.

Conventions that differ from a literal transcription of the usual printed
tables:

* ``Q_n`` uses ``[Y1, Yj] = Y(j+1)`` for ``j <= n-2`` only. The variant with
  ``[Y1, Y(n-1)] = Yn`` is isomorphic to it through ``Y1 -> Y1 + Y2``
  (``build_q(n, printed=True)`` builds it), but its basis does not
  diagonalise a 2-dimensional torus.
* ``B_n^k`` carries ``[Yi, Y(n-i+1)] = (-1)^(i+1) Yn`` for ``i = 2..n/2`` and
  ``[Yi, Yj] = a_ij Y(i+j+k-2)`` for targets up to ``Y(n-1)``.
* ``C_n`` uses the sign ``(-1)^(i-1)`` on ``Yn``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import JacobiViolation, LieAlgebra, jacobi_check
from .cohomology import Cochain
from .derivations import TorusBasis, diagonal_torus, torus_is_valid
from .linalg import MatrixQ, as_vector, solve_affine

TAGS = ("L", "Q", "A", "B", "C", "Semidirect", "Rh")


class FamilyError(ValueError):
    """Invalid family parameters."""


class JacobiError(ValueError):
    def __init__(self, message: str, violations: list[JacobiViolation]):
        super().__init__(message)
        self.violations = violations


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    n: int | None = None
    k: int | None = None
    h: int | None = None
    lam: tuple[Fraction, ...] = ()
    base: FamilySpec | None = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise FamilyError(f"unknown family tag {self.tag!r}")
        object.__setattr__(self, "lam", tuple(Fraction(x) for x in self.lam))

    def validate(self) -> None:
        tag, n, k, h, lam = self.tag, self.n, self.k, self.h, self.lam
        if tag == "Semidirect":
            if self.base is None:
                raise FamilyError("semidirect spec needs a base family")
            self.base.validate()
            return
        if tag == "Rh":
            if k is None or h is None:
                raise FamilyError("rh needs k and h")
            if k < 4 or k % 2:
                raise FamilyError(f"rh needs k even and >= 4, got k={k}")
            if not 3 <= h <= k + 3:
                raise FamilyError(f"rh needs 3 <= h <= k+3, got h={h}")
            if len(lam) != rh_lambda_count(h):
                raise FamilyError(f"rh with h={h} takes {rh_lambda_count(h)} lambda values, got {len(lam)}")
            if not lam[0]:
                raise FamilyError("rh needs lambda_1 != 0")
            return
        if n is None:
            raise FamilyError(f"{tag} needs n")
        if tag == "L":
            if n < 3:
                raise FamilyError("L needs n >= 3")
        elif tag == "Q":
            if n < 4 or n % 2:
                raise FamilyError(f"Q needs n even and >= 4, got n={n}")
        elif tag in ("A", "B"):
            if k is None:
                raise FamilyError(f"{tag} needs k")
            if tag == "B" and n % 2:
                raise FamilyError(f"B needs n even, got n={n}")
            if not 2 <= k <= n - 3:
                raise FamilyError(f"{tag} needs 2 <= k <= n-3, got n={n}, k={k}")
            t = (n - k + 1) // 2 if tag == "A" else (n - k) // 2
            if len(lam) != t - 1:
                raise FamilyError(f"{tag} with n={n}, k={k} takes {t - 1} lambda values, got {len(lam)}")
        elif tag == "C":
            if n < 6 or n % 2:
                raise FamilyError(f"C needs n = 2m+2 >= 6, got n={n}")
            m = (n - 2) // 2
            if len(lam) != m - 1:
                raise FamilyError(f"C with n={n} takes {m - 1} lambda values, got {len(lam)}")

    def __str__(self):
        if self.tag == "Semidirect":
            return f"semidirect {self.base}"
        parts = ["rh" if self.tag == "Rh" else self.tag]
        for key in ("n", "k", "h"):
            v = getattr(self, key)
            if v is not None:
                parts.append(f"{key}={v}")
        if self.lam:
            from .linalg import format_rational

            parts.append("lambda=" + ",".join(format_rational(x) for x in self.lam))
        return " ".join(parts)


def rh_lambda_count(h: int) -> int:
    return h // 2 + 1


# ----------------------------------------------------------------------
# small fixed algebras


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, [f"e{i + 1}" for i in range(n)])


def heisenberg() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): {2: 1}}, ["e1", "e2", "e3"])


def r2() -> LieAlgebra:
    """The non-abelian 2-dimensional algebra ``[X, Y] = Y``."""
    return LieAlgebra(2, {(0, 1): {1: 1}}, ["X", "Y"])


# ----------------------------------------------------------------------
# coefficient tables


@dataclass(frozen=True)
class CoefficientTable:
    """Constants ``a_ij`` (1-based, ``2 <= i < j``) and their lambda expansion.

    ``lambda_coeffs[(i, j, kappa)]`` is the integer with
    ``a_ij = sum_kappa lambda_coeffs[(i, j, kappa)] * lambda_kappa``.
    """

    n: int
    k: int
    top: int
    entries: dict = field(default_factory=dict)
    lambda_coeffs: dict = field(default_factory=dict)

    def target(self, i: int, j: int) -> int:
        return i + j + self.k - 2


def _table_pairs(k: int, top: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(2, top) for j in range(i + 1, top) if i + j + k - 2 <= top]


def _solve_table(k: int, top: int, lam: Sequence[Fraction]) -> dict[tuple[int, int], Fraction]:
    pairs = _table_pairs(k, top)
    col = {p: c for c, p in enumerate(pairs)}
    entries = []
    rhs = []
    row = 0
    for i, j in pairs:
        # Jacobi on (Y1, Yi, Yj): a_ij = a_(i+1)j + a_i(j+1)
        if i + j + k - 2 <= top - 1:
            entries.append((row, col[(i, j)], 1))
            if i + 1 < j and (i + 1, j) in col:
                entries.append((row, col[(i + 1, j)], -1))
            if (i, j + 1) in col:
                entries.append((row, col[(i, j + 1)], -1))
            rhs.append(Fraction(0))
            row += 1
    t = len(lam) + 1
    for i in range(2, t + 1):
        if (i, i + 1) not in col:
            raise FamilyError(f"lambda_{i - 1} pins a_({i},{i + 1}) outside the bracket range")
        entries.append((row, col[(i, i + 1)], 1))
        rhs.append(Fraction(lam[i - 2]))
        row += 1
    sol = solve_affine(MatrixQ.from_entries(row, len(pairs), entries), rhs)
    if sol is None:
        raise FamilyError(f"a_ij system inconsistent for k={k}, top index {top}, lambda={tuple(lam)}")
    particular, free = sol
    if free:
        raise FamilyError(f"a_ij system underdetermined for k={k}, top index {top}")
    return {p: particular[c] for p, c in col.items()}


def coefficient_table(n: int, k: int, lam: Sequence, top: int | None = None) -> CoefficientTable:
    """Solve for the ``a_ij`` of ``A_n^k(lam)``.

    ``top`` is the highest admissible target index: ``n`` for the A family
    and ``n - 1`` for the B family.
    """
    lam = as_vector(lam)
    top = n if top is None else top
    entries = _solve_table(k, top, lam)
    coeffs = {}
    for kappa in range(1, len(lam) + 1):
        unit = [Fraction(0)] * len(lam)
        unit[kappa - 1] = Fraction(1)
        for (i, j), v in _solve_table(k, top, unit).items():
            if v.denominator != 1:
                raise ArithmeticError("non-integral lambda coefficient")
            if v:
                coeffs[(i, j, kappa)] = int(v)
    return CoefficientTable(n, k, top, entries, coeffs)


# ----------------------------------------------------------------------
# builders


def _algebra(n: int, brackets: dict, check: bool = True) -> LieAlgebra:
    # brackets in 1-based numbering: {(i, j): {target: coeff}}
    g = LieAlgebra(n, {(i - 1, j - 1): {t - 1: c for t, c in v.items()} for (i, j), v in brackets.items()})
    if check:
        bad = jacobi_check(g)
        if bad:
            triple = tuple(x + 1 for x in bad[0].triple)
            raise JacobiError(f"Jacobi identity fails on triple {triple}", bad)
    return g


def _add(brackets: dict, i: int, j: int, target: int, c) -> None:
    c = Fraction(c)
    if not c:
        return
    if i > j:
        i, j, c = j, i, -c
    brackets.setdefault((i, j), {})
    d = brackets[(i, j)]
    d[target] = d.get(target, 0) + c


def build_l(n: int) -> LieAlgebra:
    FamilySpec("L", n=n).validate()
    b: dict = {}
    for j in range(2, n):
        _add(b, 1, j, j + 1, 1)
    return _algebra(n, b)


def build_q(n: int, printed: bool = False) -> LieAlgebra:
    FamilySpec("Q", n=n).validate()
    b: dict = {}
    last = n - 1 if printed else n - 2
    for j in range(2, last + 1):
        _add(b, 1, j, j + 1, 1)
    for i in range(2, n // 2 + 1):
        _add(b, i, n - i + 1, n, (-1) ** (i + 1))
    return _algebra(n, b)


def build_a(n: int, k: int, lam: Sequence) -> LieAlgebra:
    lam = as_vector(lam)
    FamilySpec("A", n=n, k=k, lam=lam).validate()
    b: dict = {}
    for i in range(2, n):
        _add(b, 1, i, i + 1, 1)
    table = coefficient_table(n, k, lam)
    for (i, j), a in table.entries.items():
        _add(b, i, j, table.target(i, j), a)
    return _algebra(n, b)


def build_b(n: int, k: int, lam: Sequence) -> LieAlgebra:
    lam = as_vector(lam)
    FamilySpec("B", n=n, k=k, lam=lam).validate()
    b: dict = {}
    for i in range(2, n - 1):
        _add(b, 1, i, i + 1, 1)
    for i in range(2, n // 2 + 1):
        _add(b, i, n - i + 1, n, (-1) ** (i + 1))
    table = coefficient_table(n, k, lam, top=n - 1)
    for (i, j), a in table.entries.items():
        _add(b, i, j, table.target(i, j), a)
    return _algebra(n, b)


def build_c(n: int, lam: Sequence) -> LieAlgebra:
    lam = as_vector(lam)
    FamilySpec("C", n=n, lam=lam).validate()
    m = (n - 2) // 2
    b: dict = {}
    for i in range(2, n - 1):
        _add(b, 1, i, i + 1, 1)
    for i in range(2, m + 2):
        _add(b, i, n - i + 1, n, (-1) ** (i - 1))
    for kappa in range(1, m):
        for i in range(2, n - 1 - 2 * kappa):
            j = n - i - 2 * kappa + 1
            if i < j:
                _add(b, i, j, n, (-1) ** (i + 1) * lam[kappa - 1])
    return _algebra(n, b)


def semidirect(n_alg: LieAlgebra, t: TorusBasis | Sequence) -> LieAlgebra:
    """``n_alg`` extended by a diagonal torus; torus elements come last."""
    weights = t.weight_vectors if isinstance(t, TorusBasis) else tuple(as_vector(w) for w in t)
    tb = TorusBasis(n_alg, tuple(weights))
    if not torus_is_valid(n_alg, tb):
        raise FamilyError("torus weights are not independent diagonal derivations")
    n = n_alg.dim
    r = len(weights)
    brackets = {key: dict(v) for key, v in n_alg.constants.items()}
    for a, w in enumerate(weights):
        for i, d in enumerate(w):
            if d:
                brackets[(n + a, i)] = {i: d}
    labels = list(n_alg.labels) + [f"t{a + 1}" for a in range(r)]
    return LieAlgebra(n + r, brackets, labels)


def build_r_h(k: int, h: int, lam: Sequence) -> LieAlgebra:
    """``A_{k+h+3}^k(lam)`` extended by its diagonal torus, dimension ``k + h + 4``."""
    lam = as_vector(lam)
    FamilySpec("Rh", k=k, h=h, lam=lam).validate()
    a = build_a(k + h + 3, k, lam)
    return semidirect(a, diagonal_torus(a))


def deformation_cocycle(k: int, h: int, which: int, lam: Sequence) -> Cochain:
    """The 2-cochain ``(Yi, Yj) -> alpha_ij^which Y(i+j+k-2)`` on ``r_h(lam)``."""
    lam = as_vector(lam)
    count = rh_lambda_count(h)
    if not 1 <= which <= count:
        raise FamilyError(f"deformation index {which} outside 1..{count}")
    g = build_r_h(k, h, lam)
    n = k + h + 3
    table = coefficient_table(n, k, lam)
    values = {}
    for (i, j, kappa), c in table.lambda_coeffs.items():
        if kappa == which:
            values[(i - 1, j - 1)] = {table.target(i, j) - 1: c}
    return Cochain(2, g, values)


def build_family(spec: FamilySpec) -> LieAlgebra:
    spec.validate()
    tag = spec.tag
    if tag == "L":
        return build_l(spec.n)
    if tag == "Q":
        return build_q(spec.n)
    if tag == "A":
        return build_a(spec.n, spec.k, spec.lam)
    if tag == "B":
        return build_b(spec.n, spec.k, spec.lam)
    if tag == "C":
        return build_c(spec.n, spec.lam)
    if tag == "Rh":
        return build_r_h(spec.k, spec.h, spec.lam)
    base = build_family(spec.base)
    return semidirect(base, diagonal_torus(base))

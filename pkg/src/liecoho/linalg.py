"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`. Matrices store their nonzero
entries row by row, which keeps the coboundary matrices of 17-dimensional
algebras (tens of thousands of rows) cheap to hold. Every elimination is
done on integer rows by the kernel in :mod:`liecoho._backend`, one
connected block at a time.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import _backend

Rational = Fraction
VectorQ = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

# Matrices with fewer cells than this skip the block decomposition.
_BLOCK_THRESHOLD = 256


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; floats and exponents are rejected."""
    m = _RATIONAL_RE.match(str(text))
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_vector(values: Iterable) -> VectorQ:
    return tuple(Fraction(v) for v in values)


def unit_vector(n: int, i: int) -> VectorQ:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def zero_vector(n: int) -> VectorQ:
    return (Fraction(0),) * n


class MatrixQ:
    """Immutable rational matrix.

    Construct with :meth:`from_rows` (dense nested sequences) or
    :meth:`from_entries` (``(row, col, value)`` triples, duplicates summed).
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[dict] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple({} for _ in range(rows))
        else:
            if len(data) != rows:
                raise ValueError("row count does not match data")
            clean = []
            for row in data:
                d = {}
                for c, v in row.items():
                    if not 0 <= c < cols:
                        raise IndexError(f"column {c} out of range for {cols} columns")
                    if v:
                        d[c] = Fraction(v)
                clean.append(d)
            self._data = tuple(clean)

    @classmethod
    def _trusted(cls, rows, cols, data):
        m = cls.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, tuple(data)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> MatrixQ:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [{j: v for j, v in enumerate(r) if v} for r in rows])

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple]) -> MatrixQ:
        data = [{} for _ in range(rows)]
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
            d = data[r]
            d[c] = d.get(c, 0) + Fraction(v)
        for d in data:
            for c in [c for c, v in d.items() if not v]:
                del d[c]
        return cls._trusted(rows, cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> MatrixQ:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_entries(
            rows, len(columns),
            ((i, j, v) for j, col in enumerate(columns) for i, v in enumerate(col) if v),
        )

    @classmethod
    def identity(cls, n: int) -> MatrixQ:
        return cls._trusted(n, n, [{i: Fraction(1)} for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> MatrixQ:
        return cls._trusted(rows, cols, [{} for _ in range(rows)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple:
        """Row-major dense entries."""
        out = []
        for d in self._data:
            out.extend(d.get(j, Fraction(0)) for j in range(self.cols))
        return tuple(out)

    @property
    def nnz(self) -> int:
        return sum(len(d) for d in self._data)

    def to_lists(self) -> list[list[Fraction]]:
        return [[d.get(j, Fraction(0)) for j in range(self.cols)] for d in self._data]

    def row(self, i: int) -> dict:
        return dict(self._data[i])

    def column(self, j: int) -> VectorQ:
        return tuple(d.get(j, Fraction(0)) for d in self._data)

    def items(self):
        """Iterate ``(row, col, value)`` over nonzero entries in row-major order."""
        for i, d in enumerate(self._data):
            for j in sorted(d):
                yield i, j, d[j]

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self._data[i].get(j, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(d.items())) for d in self._data)))

    def __repr__(self):
        return f"MatrixQ({self.rows}x{self.cols}, nnz={self.nnz})"

    def is_zero(self) -> bool:
        return not any(self._data)

    def transpose(self) -> MatrixQ:
        data = [{} for _ in range(self.cols)]
        for i, d in enumerate(self._data):
            for j, v in d.items():
                data[j][i] = v
        return MatrixQ._trusted(self.cols, self.rows, data)

    def _combine(self, other, sign):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        data = []
        for a, b in zip(self._data, other._data):
            d = dict(a)
            for j, v in b.items():
                s = d.get(j, 0) + sign * v
                if s:
                    d[j] = s
                else:
                    d.pop(j, None)
            data.append(d)
        return MatrixQ._trusted(self.rows, self.cols, data)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, q) -> MatrixQ:
        q = Fraction(q)
        if not q:
            return MatrixQ.zeros(self.rows, self.cols)
        return MatrixQ._trusted(self.rows, self.cols, [{j: q * v for j, v in d.items()} for d in self._data])

    def apply(self, vec: Sequence) -> VectorQ:
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != {self.cols} columns")
        return tuple(sum((v * vec[j] for j, v in d.items()), Fraction(0)) for d in self._data)

    def __matmul__(self, other):
        if isinstance(other, MatrixQ):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            odata = other._data
            data = []
            for d in self._data:
                acc = {}
                for k, a in d.items():
                    for j, b in odata[k].items():
                        acc[j] = acc.get(j, 0) + a * b
                data.append({j: v for j, v in acc.items() if v})
            return MatrixQ._trusted(self.rows, other.cols, data)
        return self.apply(other)

    def power(self, k: int) -> MatrixQ:
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = MatrixQ.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out


# ----------------------------------------------------------------------
# elimination


def _integer_rows(data: Sequence[dict]) -> list[dict]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for d in data:
        if not d:
            out.append({})
            continue
        s = lcm(*(v.denominator for v in d.values()))
        out.append({j: int(v * s) for j, v in d.items()})
    return out


def _blocks(int_rows: list[dict], ncols: int):
    """Split into independent (rows, cols) blocks of the bipartite row/column graph."""
    nrows = len(int_rows)
    live = [i for i, d in enumerate(int_rows) if d]
    if not live:
        return []
    if nrows * ncols <= _BLOCK_THRESHOLD:
        cols = sorted({j for i in live for j in int_rows[i]})
        return [(live, cols)]
    import numpy as np
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    ri, ci = [], []
    for i in live:
        for j in int_rows[i]:
            ri.append(i)
            ci.append(nrows + j)
    size = nrows + ncols
    graph = coo_matrix((np.ones(len(ri), dtype=np.int8), (ri, ci)), shape=(size, size))
    _, labels = connected_components(graph, directed=False)
    groups: dict[int, tuple[list, list]] = {}
    for i in live:
        groups.setdefault(labels[i], ([], []))[0].append(i)
    for j in range(ncols):
        lab = labels[nrows + j]
        if lab in groups:
            groups[lab][1].append(j)
    return sorted(groups.values(), key=lambda g: g[1][0])


def _eliminate(data: Sequence[dict], ncols: int, reduce: bool, backend=None):
    """Echelon rows as ``[(pivot_col, {col: int})]``, sorted by pivot column."""
    int_rows = _integer_rows(data)
    pivot_rows = []
    for rows, cols in _blocks(int_rows, ncols):
        local = {c: k for k, c in enumerate(cols)}
        dense = []
        for i in rows:
            line = [0] * len(cols)
            for j, v in int_rows[i].items():
                line[local[j]] = v
            dense.append(line)
        out, pivots = _backend.echelon(dense, len(cols), reduce=reduce, backend=backend)
        for r, pc in enumerate(pivots):
            pivot_rows.append((cols[pc], {cols[k]: v for k, v in enumerate(out[r]) if v}))
    pivot_rows.sort(key=lambda t: t[0])
    return pivot_rows


def rank(m: MatrixQ, backend=None) -> int:
    """Exact rank over the rationals."""
    # elimination cost scales with the smaller side
    if m.rows < m.cols and m.rows * m.cols > _BLOCK_THRESHOLD:
        m = m.transpose()
    return len(_eliminate(m._data, m.cols, reduce=False, backend=backend))


def rref(m: MatrixQ) -> tuple[MatrixQ, tuple[int, ...]]:
    """Reduced row echelon form with unit pivots, and the pivot columns."""
    pivot_rows = _eliminate(m._data, m.cols, reduce=True)
    data = []
    for pc, row in pivot_rows:
        p = row[pc]
        data.append({j: Fraction(v, p) for j, v in row.items()})
    data.extend({} for _ in range(m.rows - len(data)))
    return MatrixQ._trusted(m.rows, m.cols, data), tuple(pc for pc, _ in pivot_rows)


def pivot_columns(m: MatrixQ) -> tuple[int, ...]:
    """Indices of the lexicographically first set of independent columns."""
    return tuple(pc for pc, _ in _eliminate(m._data, m.cols, reduce=False))


def _kernel_from_pivots(pivot_rows, ncols: int) -> list[VectorQ]:
    pivot_set = {pc for pc, _ in pivot_rows}
    free = [j for j in range(ncols) if j not in pivot_set]
    vecs = {f: [Fraction(0)] * ncols for f in free}
    for f in free:
        vecs[f][f] = Fraction(1)
    for pc, row in pivot_rows:
        p = row[pc]
        for j, v in row.items():
            if j != pc and j in vecs:
                vecs[j][pc] = Fraction(-v, p)
    return [tuple(vecs[f]) for f in free]


def nullspace_basis(m: MatrixQ) -> list[VectorQ]:
    """Basis of ``{v : m v = 0}``, one vector per free column, in column order."""
    return _kernel_from_pivots(_eliminate(m._data, m.cols, reduce=True), m.cols)


def solve_affine(m: MatrixQ, b: Sequence) -> tuple[VectorQ, list[VectorQ]] | None:
    """Solve ``m v = b``.

    Returns ``None`` when the system is inconsistent, otherwise a particular
    solution and a basis of the homogeneous solutions.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    n = m.cols
    data = []
    for d, bv in zip(m._data, b):
        if bv:
            d = dict(d)
            d[n] = Fraction(bv)
        data.append(d)
    pivot_rows = _eliminate(data, n + 1, reduce=True)
    if pivot_rows and pivot_rows[-1][0] == n:
        return None
    particular = [Fraction(0)] * n
    for pc, row in pivot_rows:
        if n in row:
            particular[pc] = Fraction(row[n], row[pc])
    trimmed = [(pc, {j: v for j, v in row.items() if j != n}) for pc, row in pivot_rows]
    return tuple(particular), _kernel_from_pivots(trimmed, n)


def power_rank_sequence(m: MatrixQ, max_power: int) -> tuple[int, ...]:
    """``(rank m, rank m^2, ..., rank m^max_power)``."""
    if m.rows != m.cols:
        raise ValueError(f"power ranks need a square matrix, got {m.shape}")
    out = []
    p = m
    for k in range(max_power):
        r = rank(p)
        out.append(r)
        if r == 0:
            out.extend([0] * (max_power - k - 1))
            break
        if k + 1 < max_power:
            p = p @ m
    return tuple(out)


def span_rank(vectors: Sequence[Sequence]) -> int:
    """Dimension of the span of ``vectors``."""
    if not vectors:
        return 0
    return rank(MatrixQ.from_rows(vectors))


def in_span(vector: Sequence, vectors: Sequence[Sequence]) -> bool:
    if not any(vector):
        return True
    if not vectors:
        return False
    return span_rank(list(vectors) + [vector]) == span_rank(vectors)

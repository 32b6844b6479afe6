from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from liecoho.linalg import (
    MatrixQ,
    format_rational,
    in_span,
    nullspace_basis,
    parse_rational,
    pivot_columns,
    power_rank_sequence,
    rank,
    rref,
    solve_affine,
    span_rank,
)


def jordan_block(n):
    return MatrixQ.from_entries(n, n, ((i, i + 1, 1) for i in range(n - 1)))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.one_of(st.just(F(0)), rationals), min_size=c, max_size=c), min_size=r, max_size=r))
    return MatrixQ.from_rows(rows, c)


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


class TestRationals:
    def test_parse(self):
        assert parse_rational("3") == 3
        assert parse_rational("-2/6") == F(-1, 3)
        assert parse_rational(" 4/2 ") == 2

    @pytest.mark.parametrize("bad", ["", "1/0", "1.5", "a", "1//2", "2/-3", True])
    def test_parse_rejects(self, bad):
        with pytest.raises((ValueError, TypeError)):
            parse_rational(bad)

    @given(rationals)
    def test_format_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q


class TestMatrix:
    def test_from_entries_sums_duplicates(self):
        m = MatrixQ.from_entries(2, 2, [(0, 1, 1), (0, 1, F(1, 2)), (1, 0, 3), (1, 0, -3)])
        assert m.to_lists() == [[0, F(3, 2)], [0, 0]]
        assert m.nnz == 1

    def test_out_of_range_entry(self):
        with pytest.raises(IndexError):
            MatrixQ.from_entries(2, 2, [(2, 0, 1)])

    def test_ragged(self):
        with pytest.raises(ValueError):
            MatrixQ.from_rows([[1, 2], [3]])

    def test_product_and_transpose(self):
        a = MatrixQ.from_rows([[1, 2], [3, 4], [5, 6]])
        b = MatrixQ.from_rows([[1, 0, -1], [2, 1, 0]])
        assert (a @ b).to_lists() == [[5, 2, -1], [11, 4, -3], [17, 6, -5]]
        assert a.transpose().transpose() == a
        assert (a @ b).transpose() == b.transpose() @ a.transpose()

    def test_power(self):
        assert jordan_block(4).power(4).is_zero()
        assert not jordan_block(4).power(3).is_zero()


class TestRank:
    def test_identity(self):
        assert rank(MatrixQ.identity(3)) == 3

    def test_jordan_block(self):
        assert rank(jordan_block(4)) == 3

    def test_proportional_rows(self):
        assert rank(MatrixQ.from_rows([[1, 2, 3], [2, 4, 6]])) == 1

    def test_empty(self):
        assert rank(MatrixQ.zeros(0, 3)) == 0
        assert rank(MatrixQ.zeros(3, 0)) == 0

    @settings(max_examples=80, deadline=None)
    @given(matrices())
    def test_matches_sympy(self, m):
        assert rank(m) == to_sympy(m).rank()

    @settings(max_examples=40, deadline=None)
    @given(matrices())
    def test_transpose_invariant(self, m):
        assert rank(m) == rank(m.transpose())


class TestNullspace:
    def test_identity(self):
        assert nullspace_basis(MatrixQ.identity(3)) == []

    def test_zero(self):
        assert len(nullspace_basis(MatrixQ.zeros(2, 2))) == 2

    def test_single_constraint(self):
        (v,) = nullspace_basis(MatrixQ.from_rows([[1, 1]]))
        assert v[0] == -v[1] != 0

    @settings(max_examples=60, deadline=None)
    @given(matrices())
    def test_rank_nullity_and_kernel(self, m):
        basis = nullspace_basis(m)
        assert len(basis) == m.cols - rank(m)
        for v in basis:
            assert not any(m.apply(v))
        assert span_rank(basis) == len(basis)

    def test_rref_matches_sympy(self):
        m = MatrixQ.from_rows([[0, 2, 4, 1], [1, 1, 1, 1], [1, 3, 5, 2]])
        r, piv = rref(m)
        ref, ref_piv = to_sympy(m).rref()
        assert piv == tuple(ref_piv)
        assert to_sympy(r)[: len(piv), :] == ref[: len(piv), :]
        assert pivot_columns(m) == piv


class TestSolveAffine:
    def test_identity(self):
        part, hom = solve_affine(MatrixQ.identity(2), (3, 5))
        assert part == (3, 5) and hom == []

    def test_underdetermined(self):
        part, hom = solve_affine(MatrixQ.from_rows([[1, 1]]), (0,))
        assert part == (0, 0)
        assert len(hom) == 1 and hom[0][0] == -hom[0][1]

    def test_inconsistent(self):
        assert solve_affine(MatrixQ.from_rows([[1], [1]]), (0, 1)) is None

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            solve_affine(MatrixQ.identity(2), (1,))

    @settings(max_examples=50, deadline=None)
    @given(matrices(), st.data())
    def test_solution_solves(self, m, data):
        x = data.draw(st.lists(rationals, min_size=m.cols, max_size=m.cols))
        b = m.apply(x)
        part, hom = solve_affine(m, b)
        assert m.apply(part) == b
        assert len(hom) == m.cols - rank(m)


class TestPowerRanks:
    def test_jordan(self):
        assert power_rank_sequence(jordan_block(4), 4) == (3, 2, 1, 0)

    def test_zero(self):
        assert power_rank_sequence(MatrixQ.zeros(3, 3), 2) == (0, 0)

    def test_span_helpers(self):
        assert in_span((1, 2), [(2, 4)])
        assert not in_span((1, 0), [(2, 4)])

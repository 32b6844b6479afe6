from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecoho.algebra import (
    LieAlgebra,
    ad_matrix,
    bracket,
    center,
    characteristic_sequence_at,
    derived_algebra,
    first_betti,
    is_filiform,
    is_nilpotent,
    jacobi_check,
    jordan_block_sizes,
    lower_central_series_dims,
)
from liecoho.families import FamilySpec, abelian, build_family, build_l, build_q, heisenberg, r2
from liecoho.linalg import MatrixQ, power_rank_sequence, rank, unit_vector
from liecoho.oracle import center_dim


def e(n, i):
    return unit_vector(n, i - 1)


class TestConstruction:
    def test_antisymmetric_storage(self):
        g = LieAlgebra(3, {(1, 0): {2: 1}})
        assert g.constants == {(0, 1): {2: F(-1)}}

    def test_dense_values(self):
        assert LieAlgebra(3, {(0, 1): [0, 0, 1]}).constants == heisenberg().constants

    def test_rejects_diagonal_and_repeats(self):
        with pytest.raises(ValueError):
            LieAlgebra(2, {(0, 0): {1: 1}})
        with pytest.raises(ValueError):
            LieAlgebra(2, {(0, 1): {1: 1}, (1, 0): {1: 1}})

    def test_rejects_out_of_range(self):
        with pytest.raises(IndexError):
            LieAlgebra(2, {(0, 2): {1: 1}})
        with pytest.raises(IndexError):
            LieAlgebra(2, {(0, 1): {5: 1}})

    def test_hash_and_equality(self):
        assert hash(build_l(5)) == hash(build_l(5))
        assert build_l(5) != build_l(6)


class TestBracket:
    def test_heisenberg(self):
        assert bracket(heisenberg(), e(3, 1), e(3, 2)) == e(3, 3)

    @given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
    def test_self_bracket_vanishes(self, xs):
        assert not any(bracket(build_l(6), xs, xs))

    def test_reversed_order(self):
        assert bracket(build_l(6), e(6, 2), e(6, 1)) == tuple(-x for x in e(6, 3))

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            bracket(heisenberg(), (1, 0), (0, 1, 0))


class TestJacobi:
    def test_abelian(self):
        assert jacobi_check(abelian(4)) == []

    def test_l10(self):
        assert jacobi_check(build_l(10)) == []

    def test_non_algebra(self):
        g = LieAlgebra(4, {(0, 1): {2: 1}, (0, 2): {3: 1}, (1, 2): {1: 1}})
        bad = jacobi_check(g)
        assert any(v.triple == (0, 1, 2) for v in bad)
        (v,) = [v for v in bad if v.triple == (0, 1, 2)]
        # [[e2,e3],e1] = [e2,e1] = -e3; the other two terms vanish
        assert v.residual == (0, 0, -1, 0)


class TestCenterAndSeries:
    def test_abelian_center(self):
        assert center(abelian(2)).dim == 2

    def test_l4_center(self):
        z = center(build_l(4))
        assert z.dim == 1 and z.contains(e(4, 4))

    def test_r2_center(self):
        assert center(r2()).dim == 0

    @pytest.mark.parametrize("g", [heisenberg(), r2(), build_l(5), build_q(6)], ids=str)
    def test_center_matches_oracle(self, g):
        assert center(g).dim == center_dim(g)

    def test_series(self):
        assert lower_central_series_dims(abelian(3)) == (3, 0)
        assert lower_central_series_dims(build_l(5)) == (5, 3, 2, 1, 0)
        assert lower_central_series_dims(r2()) == (2, 1, 1)
        assert is_nilpotent(build_l(5)) and not is_nilpotent(r2())

    def test_l5_derived_algebra(self):
        d = derived_algebra(build_l(5))
        assert d.dim == 3 and all(d.contains(e(5, i)) for i in (3, 4, 5))

    def test_betti(self):
        assert first_betti(abelian(4)) == 4
        assert first_betti(build_q(6)) == 2

    @pytest.mark.parametrize("spec", [FamilySpec("L", n=7), FamilySpec("Q", n=8),
                                      FamilySpec("A", n=10, k=4, lam=(1, F(2, 3)))], ids=str)
    def test_filiform_betti(self, spec):
        assert first_betti(build_family(spec)) == 2


class TestAd:
    def test_center_element(self):
        assert ad_matrix(build_l(4), e(4, 4)).is_zero()

    def test_l4_y1(self):
        a = ad_matrix(build_l(4), e(4, 1))
        assert a.column(1) == e(4, 3) and a.column(2) == e(4, 4)
        assert not any(a.column(0)) and not any(a.column(3))

    def test_heisenberg_rank(self):
        assert rank(ad_matrix(heisenberg(), e(3, 1))) == 1

    def test_l5_power_ranks(self):
        assert power_rank_sequence(ad_matrix(build_l(5), e(5, 1)), 5) == (3, 2, 1, 0, 0)


class TestCharacteristicSequence:
    @pytest.mark.parametrize("n", range(3, 11))
    def test_l_n(self, n):
        assert characteristic_sequence_at(build_l(n), e(n, 1)) == (n - 1, 1)

    def test_abelian(self):
        assert characteristic_sequence_at(abelian(3), e(3, 1)) == (1, 1, 1)

    def test_l5_at_y2(self):
        assert characteristic_sequence_at(build_l(5), e(5, 2)) == (2, 1, 1, 1)

    def test_rejects_derived_vector(self):
        with pytest.raises(ValueError):
            characteristic_sequence_at(build_l(5), e(5, 3))

    def test_rejects_non_nilpotent(self):
        with pytest.raises(ValueError):
            characteristic_sequence_at(r2(), e(2, 1))

    def test_jordan_sizes(self):
        m = MatrixQ.from_entries(5, 5, [(0, 1, 1), (1, 2, 1), (3, 4, 1)])
        assert jordan_block_sizes(m) == (3, 2)

    def test_jordan_rejects_non_nilpotent(self):
        with pytest.raises(ValueError):
            jordan_block_sizes(MatrixQ.identity(2))

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(-2, 2), min_size=2, max_size=2).filter(lambda v: v[0] != 0))
    def test_generic_vectors_of_l6(self, head):
        y = tuple(head) + (1, 0, 0, 0)
        assert characteristic_sequence_at(build_l(6), y) == (5, 1)


class TestFiliform:
    def test_l7(self):
        ok, w = is_filiform(build_l(7))
        assert ok and w == e(7, 1)

    def test_abelian(self):
        assert is_filiform(abelian(4)) == (False, None)

    def test_heisenberg(self):
        ok, w = is_filiform(heisenberg())
        assert ok and characteristic_sequence_at(heisenberg(), w) == (2, 1)

    def test_non_nilpotent(self):
        assert is_filiform(r2()) == (False, None)

    def test_q_needs_combination(self):
        g = build_q(8)
        assert characteristic_sequence_at(g, e(8, 1)) == (6, 1, 1)
        ok, w = is_filiform(g)
        assert ok and characteristic_sequence_at(g, w) == (7, 1)

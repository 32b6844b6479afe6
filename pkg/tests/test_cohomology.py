import random
from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecoho import oracle
from liecoho.algebra import ad_matrix
from liecoho.cohomology import (
    Cochain,
    CohomologyDims,
    apply_delta,
    cochain_dim,
    cochain_index,
    cohomology_dims,
    delta_matrix,
    independent_classes,
    is_coboundary,
    is_cocycle,
)
from liecoho.families import FamilySpec, abelian, build_family, build_l, heisenberg, r2
from liecoho.linalg import unit_vector

SMALL = [heisenberg(), r2(), build_l(4), build_l(5), build_family(FamilySpec("Q", n=6))]


@st.composite
def cochains(draw, g, p):
    size = cochain_dim(g.dim, p)
    vec = draw(st.lists(st.integers(-3, 3), min_size=size, max_size=size))
    return Cochain.from_vector(g, p, vec)


class TestIndexing:
    @pytest.mark.parametrize("n,p,expected", [(3, 0, 3), (4, 2, 24), (11, 2, 605)])
    def test_dimension(self, n, p, expected):
        assert cochain_dim(n, p) == expected

    def test_degree_above_dim(self):
        assert cochain_dim(3, 4) == 0

    @pytest.mark.parametrize("n,p", [(4, 0), (4, 1), (5, 2), (5, 3)])
    def test_flat_round_trip(self, n, p):
        idx = cochain_index(n, p)
        assert idx.size == n * comb(n, p)
        for i in range(idx.size):
            t, c = idx.unflat(i)
            assert idx.flat(t, c) == i
            assert list(t) == sorted(set(t))


class TestCochain:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Cochain(2, heisenberg(), {(1, 0): {2: 1}})

    def test_from_values_alternates(self):
        g = heisenberg()
        c = Cochain.from_values(g, 2, {(1, 0): {2: 1}})
        assert c.coeffs == {(0, 1): {2: F(-1)}}
        assert c.value((1, 0)) == {2: 1}
        assert c.value((0, 0)) == {}

    def test_vector_round_trip(self):
        g = build_l(4)
        c = Cochain.from_values(g, 2, {(0, 3): {1: F(1, 2)}, (2, 1): {0: 3}})
        assert Cochain.from_vector(g, 2, c.to_vector()) == c

    def test_linear_map_round_trip(self):
        m = ad_matrix(build_l(5), unit_vector(5, 0))
        assert Cochain.from_linear_map(build_l(5), m).to_linear_map() == m

    def test_arithmetic(self):
        g = heisenberg()
        a = Cochain.from_values(g, 1, {(0,): {1: 1}})
        b = Cochain.from_values(g, 1, {(0,): {1: 2}, (2,): {0: 1}})
        assert (a + a) == a.scale(2)
        assert (b - b).is_zero()
        with pytest.raises(ValueError):
            a + Cochain.zero(g, 2)


class TestDelta:
    def test_zero_cochain(self):
        assert apply_delta(Cochain.zero(build_l(5), 2)).is_zero()

    def test_abelian_degree_one(self):
        assert delta_matrix(abelian(3), 1).is_zero()

    @pytest.mark.parametrize("g", SMALL, ids=str)
    @pytest.mark.parametrize("p", [0, 1, 2])
    def test_square_is_zero(self, g, p):
        assert (delta_matrix(g, p + 1) @ delta_matrix(g, p)).is_zero()

    @pytest.mark.parametrize("g", SMALL, ids=str)
    @pytest.mark.parametrize("p", [0, 1, 2])
    def test_matrix_matches_direct_formula(self, g, p):
        d = delta_matrix(g, p)
        rng = random.Random(p * 31 + g.dim)
        for _ in range(5):
            vec = [rng.randint(-2, 2) for _ in range(cochain_dim(g.dim, p))]
            c = Cochain.from_vector(g, p, vec)
            assert apply_delta(c).to_vector() == d.apply(vec)

    @settings(max_examples=25, deadline=None)
    @given(cochains(build_l(5), 1))
    def test_delta_delta_on_random_cochains(self, c):
        assert apply_delta(apply_delta(c)).is_zero()

    def test_inner_derivation_is_coboundary(self):
        g = build_l(6)
        c = Cochain.from_linear_map(g, ad_matrix(g, unit_vector(6, 0)))
        assert is_cocycle(c)
        pre = is_coboundary(c)
        assert pre is not None and pre.degree == 0
        assert apply_delta(pre) == c
        # (delta v)(X) = [X, v], so the constant -Y1 is a preimage of ad(Y1)
        assert apply_delta(Cochain.constant(g, unit_vector(6, 0))) == -c
        assert apply_delta(Cochain.constant(g, (-1, 0, 0, 0, 0, 0))) == c

    def test_identity_on_r2(self):
        g = r2()
        d = apply_delta(Cochain.from_values(g, 1, {(0,): {0: 1}, (1,): {1: 1}}))
        # [X, Y] + [X, Y] - [X, Y] = Y
        assert d.coeffs == {(0, 1): {1: F(1)}}

    @pytest.mark.parametrize("g", SMALL, ids=str)
    def test_inner_derivations_are_cocycles(self, g):
        for i in range(g.dim):
            assert is_cocycle(Cochain.from_linear_map(g, ad_matrix(g, unit_vector(g.dim, i))))

    def test_degree_zero_has_no_preimage(self):
        with pytest.raises(ValueError):
            is_coboundary(Cochain.constant(heisenberg(), (1, 0, 0)))

    def test_outer_derivation_not_coboundary(self):
        g = build_l(4)
        # scaling Y1 and its consequences: d = diag(1, 0, 1, 2)
        d = Cochain.from_values(g, 1, {(0,): {0: 1}, (2,): {2: 1}, (3,): {3: 2}})
        assert is_cocycle(d)
        assert is_coboundary(d) is None


class TestDims:
    def test_abelian_h0(self):
        assert cohomology_dims(abelian(2), 0).dim_H == 2

    def test_l4_h1(self):
        assert cohomology_dims(build_l(4), 1).dim_H == 4

    def test_r2(self):
        assert cohomology_dims(r2(), 0).dim_H == 0
        assert cohomology_dims(r2(), 1).dim_H == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            CohomologyDims(1, 4, 2, 1, 3)
        with pytest.raises(ValueError):
            cohomology_dims(heisenberg(), -1)

    @pytest.mark.parametrize("g", SMALL, ids=str)
    @pytest.mark.parametrize("p", [0, 1, 2])
    def test_oracle(self, g, p):
        d = cohomology_dims(g, p)
        assert (d.dim_C, d.dim_Z, d.dim_B, d.dim_H) == oracle.cohomology_dims(g, p)

    def test_euler_characteristic_vanishes(self):
        # sum (-1)^p dim H^p = sum (-1)^p dim C^p = n * (1 - 1)^n = 0
        g = build_l(4)
        assert sum((-1) ** p * cohomology_dims(g, p).dim_H for p in range(5)) == 0


class TestIndependentClasses:
    def test_coboundaries_count_zero(self):
        g = build_l(5)
        inner = [Cochain.from_linear_map(g, ad_matrix(g, unit_vector(5, i))) for i in range(5)]
        assert independent_classes(inner) == 0

    def test_repeats_and_multiples(self):
        g = build_l(4)
        d = Cochain.from_values(g, 1, {(0,): {0: 1}, (2,): {2: 1}, (3,): {3: 2}})
        assert independent_classes([d, d.scale(3)]) == 1

    def test_empty(self):
        assert independent_classes([]) == 0

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bentfn.errors import DimensionOutOfRange, NonPrimitivePolynomial
from bentfn.gf2m import (
    DEFAULT_PRIMITIVE_POLYS,
    FieldContext,
    coset_leader,
    coset_size,
    cyclotomic_cosets,
)

from helpers import gf_mul, gf_pow, gf_trace, is_reducible, multiplicative_order_of_x


class TestFieldConstruction:
    def test_default_polys_cover_range(self):
        assert sorted(DEFAULT_PRIMITIVE_POLYS) == list(range(2, 25))
        for m, poly in DEFAULT_PRIMITIVE_POLYS.items():
            assert poly.bit_length() == m + 1
            assert poly & 1

    @pytest.mark.parametrize("m", range(2, 17))
    def test_default_polys_are_primitive(self, m):
        # construction itself runs the exhaustive order check
        ctx = FieldContext(m)
        assert ctx.order == 1 << m
        # independent oracle
        assert not is_reducible(ctx.primitive_poly)
        assert multiplicative_order_of_x(ctx.primitive_poly) == (1 << m) - 1

    def test_explicit_primitive_poly(self):
        ctx = FieldContext(7, 0x83)  # x^7 + x + 1, primitive by exhaustive order check
        assert multiplicative_order_of_x(0x83) == 127
        assert ctx.trace(1) == 1  # m odd

    def test_reducible_poly_rejected(self):
        # x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert is_reducible(0b10101)
        with pytest.raises(NonPrimitivePolynomial):
            FieldContext(4, 0b10101)

    def test_irreducible_but_imprimitive_rejected(self):
        # x^4 + x^3 + x^2 + x + 1 divides x^5 + 1, so x has order 5 < 15
        poly = 0b11111
        assert not is_reducible(poly)
        assert multiplicative_order_of_x(poly) == 5
        with pytest.raises(NonPrimitivePolynomial):
            FieldContext(4, poly)

    def test_wrong_degree_rejected(self):
        with pytest.raises(NonPrimitivePolynomial):
            FieldContext(7, 0b1011)

    def test_dimension_bounds(self):
        with pytest.raises(DimensionOutOfRange):
            FieldContext(1)
        with pytest.raises(DimensionOutOfRange):
            FieldContext(25)

    def test_log_antilog_inverse(self, ctx7):
        for x in range(1, 128):
            assert ctx7.antilog_table[ctx7.log_table[x]] == x


class TestArithmetic:
    def test_mul_absorbing_and_identity(self, ctx7):
        for a in (0, 1, 5, 77, 127):
            assert ctx7.mul(a, 0) == 0
            assert ctx7.mul(0, a) == 0
            assert ctx7.mul(a, 1) == a

    def test_mul_alpha_cubed_by_hand(self):
        # with x^3 + x + 1: alpha * alpha^2 = alpha^3 = alpha + 1
        ctx = FieldContext(3, 0b1011)
        assert ctx.mul(2, 4) == 3

    def test_mul_matches_definition(self, ctx7):
        rng = np.random.default_rng(11)
        for a, b in rng.integers(0, 128, (200, 2)):
            assert ctx7.mul(int(a), int(b)) == gf_mul(int(a), int(b), ctx7.primitive_poly)

    def test_pow_basics(self, ctx7):
        assert ctx7.pow(5, 1) == 5
        assert ctx7.pow(2, 127) == 1  # group order
        assert ctx7.pow(0, 0) == 1
        assert ctx7.pow(0, 3) == 0
        with pytest.raises(ValueError):
            ctx7.pow(3, -1)

    def test_pow_matches_definition(self, ctx7):
        rng = np.random.default_rng(5)
        for a in rng.integers(0, 128, 40):
            for e in (0, 1, 2, 13, 126, 127, 254):
                assert ctx7.pow(int(a), e) == gf_pow(int(a), e, ctx7.primitive_poly)

    def test_kasami_welch_exponent_value(self):
        assert 4**2 - 2**2 + 1 == 13

    def test_power_table(self, ctx7):
        table = ctx7.power_table(13)
        for x in (0, 1, 2, 3, 99):
            assert table[x] == ctx7.pow(x, 13)
        assert ctx7.power_table(0)[0] == 1


class TestTrace:
    def test_trace_of_zero_and_one(self, ctx7):
        assert ctx7.trace(0) == 0
        assert ctx7.trace(1) == 1

    @pytest.mark.parametrize("m", [3, 7, 10])
    def test_trace_additive_exhaustive(self, m):
        ctx = FieldContext(m)
        tr = ctx.trace_table.astype(np.uint8)
        points = np.arange(ctx.order)
        for a in range(ctx.order):
            assert np.array_equal(tr[points ^ a], tr ^ tr[a])

    def test_trace_frobenius_invariant(self, ctx7):
        squares = ctx7.power_table(2)
        assert np.array_equal(ctx7.trace_table[squares], ctx7.trace_table)

    def test_trace_matches_definition(self, ctx7):
        for a in range(128):
            assert ctx7.trace(a) == gf_trace(a, ctx7.primitive_poly)

    def test_trace_balanced(self, ctx7):
        assert int(ctx7.trace_table.sum()) == 64

    def test_linear_forms_balanced(self, ctx7):
        for a in range(1, 128):
            assert int(ctx7.linear_form_table(a).sum()) == 64


class TestCosets:
    def test_m3_partition(self):
        cosets = cyclotomic_cosets(3)
        assert [(c.leader, c.members) for c in cosets] == [
            (0, (0,)),
            (1, (1, 2, 4)),
            (3, (3, 5, 6)),
        ]

    def test_coset_of_13_m7(self):
        coset = next(c for c in cyclotomic_cosets(7) if c.leader == 13)
        assert coset.members == (13, 26, 35, 52, 70, 81, 104)

    @pytest.mark.parametrize("m", [2, 3, 5, 7, 9, 11])
    def test_partition_sizes(self, m):
        cosets = cyclotomic_cosets(m)
        assert sum(c.size for c in cosets) == (1 << m) - 1
        assert all(m % c.size == 0 for c in cosets)
        assert cosets[0].leader == 0 and cosets[0].size == 1
        seen = set()
        for c in cosets:
            assert c.leader == min(c.members)
            seen.update(c.members)
        assert seen == set(range((1 << m) - 1))

    def test_leader_and_size_helpers(self):
        assert coset_leader(7, 104) == 13
        assert coset_leader(11, 241) == 143
        assert coset_size(7, 13) == 7
        assert coset_size(9, 73) == 3  # 73 * 8 = 584 = 73 mod 511

    @given(st.integers(min_value=0, max_value=126))
    @settings(max_examples=50, deadline=None)
    def test_leader_is_orbit_minimum(self, e):
        orbit = {e}
        x = (2 * e) % 127
        while x not in orbit:
            orbit.add(x)
            x = (2 * x) % 127
        assert coset_leader(7, e) == min(orbit)


class TestDualIndex:
    def test_zero_maps_to_zero(self, ctx7):
        assert ctx7.dual_index(0) == 0

    @pytest.mark.parametrize("m", [2, 3, 5, 7, 8])
    def test_pairing_exhaustive(self, m):
        ctx = FieldContext(m)
        for a in range(ctx.order):
            u = ctx.dual_index(a)
            for x in range(ctx.order):
                assert ((u & x).bit_count() & 1) == ctx.trace(ctx.mul(a, x))

    def test_bijection_and_linearity(self, ctx7):
        perm = ctx7.dual_perm()
        assert sorted(int(v) for v in perm) == list(range(128))
        rng = np.random.default_rng(2)
        for a, b in rng.integers(0, 128, (100, 2)):
            assert perm[a ^ b] == perm[a] ^ perm[b]

    def test_gram_matrix_symmetric(self, ctx7):
        assert np.array_equal(ctx7.gram_matrix, ctx7.gram_matrix.T)

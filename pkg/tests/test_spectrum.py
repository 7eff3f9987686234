import numpy as np
import pytest

from bentfn.boolfn import BooleanFunction, trace_function, trace_polynomial
from bentfn.errors import DimensionOutOfRange, NotBent, NotNearBent
from bentfn.spectrum import (
    Classification,
    check_nearbent_distribution,
    classify,
    dual,
    walsh,
    walsh_at_field_point,
)
from bentfn.tvr import join

from helpers import naive_walsh, naive_walsh_at_trace_point, random_function


class TestTransform:
    def test_constant_zero_delta(self):
        s = walsh(BooleanFunction.constant(3, 0))
        assert list(s.coeffs) == [8, 0, 0, 0, 0, 0, 0, 0]

    @pytest.mark.parametrize("m", range(2, 9))
    def test_matches_naive_small(self, m):
        rng = np.random.default_rng(m)
        for _ in range(8):
            f = random_function(rng, m)
            assert np.array_equal(walsh(f).coeffs, naive_walsh(f))

    @pytest.mark.parametrize("m", [10, 12])
    def test_matches_naive_larger(self, m):
        rng = np.random.default_rng(m)
        f = random_function(rng, m)
        assert np.array_equal(walsh(f).coeffs, naive_walsh(f))

    def test_parseval(self):
        rng = np.random.default_rng(0)
        for m in (2, 5, 8, 11):
            f = random_function(rng, m)
            coeffs = walsh(f).coeffs.astype(np.int64)
            assert int(np.sum(coeffs * coeffs)) == 1 << (2 * m)

    def test_coefficient_at_zero_is_weight_identity(self):
        rng = np.random.default_rng(9)
        for m in (3, 6, 9):
            f = random_function(rng, m)
            assert walsh(f).coeffs[0] == (1 << m) - 2 * f.weight()

    def test_weight_identity_at_every_point(self, ctx7):
        # coefficient at v equals 2^m - 2 * weight(f + linear form of v)
        f = trace_polynomial(ctx7, [13, 7])
        coeffs = walsh(f).coeffs
        points = np.arange(128, dtype=np.int64)
        for v in range(128):
            form = (np.bitwise_count(points & v) & 1).astype(np.uint8)
            w = int(np.sum(f.table ^ form))
            assert coeffs[v] == 128 - 2 * w

    def test_dimension_limit(self):
        f = BooleanFunction.constant(5, 0)
        f.m = 25  # force the guard; not a supported mutation elsewhere
        with pytest.raises(DimensionOutOfRange):
            walsh(f)


class TestClassification:
    def test_kasami_seed_near_bent(self, ctx7):
        assert classify(trace_polynomial(ctx7, [13])) is Classification.NEAR_BENT

    def test_quadratic_join_bent(self, ctx7):
        f0 = trace_polynomial(ctx7, [3, 9])
        F = join(f0, f0 + trace_function(ctx7))
        assert classify(F) is Classification.BENT
        assert F.weight() in (120, 136)  # 2^7 +- 2^3

    def test_constant_neither(self, ctx7):
        assert classify(BooleanFunction.constant(7, 0)) is Classification.NEITHER
        assert classify(BooleanFunction.constant(8, 0)) is Classification.NEITHER

    def test_affine_invariance(self, ctx7):
        rng = np.random.default_rng(17)
        f0 = trace_polynomial(ctx7, [13])
        base = classify(f0)
        for _ in range(100):
            a = int(rng.integers(0, 128))
            c = int(rng.integers(0, 2))
            assert classify(f0.add_linear_form(ctx7, a, c)) is base

    def test_histogram_is_exact(self, ctx7):
        s = walsh(trace_polynomial(ctx7, [13]))
        assert s.histogram == {-16: 28, 0: 64, 16: 36}


class TestNearBentDistribution:
    def test_kasami_seed_counts(self, ctx7):
        f = trace_polynomial(ctx7, [13])
        assert f[0] == 0
        assert check_nearbent_distribution(walsh(f), f[0])

    def test_complement_flips_counts(self, ctx7):
        f = trace_polynomial(ctx7, [13]) + 1
        s = walsh(f)
        assert s.histogram == {-16: 36, 0: 64, 16: 28}
        assert check_nearbent_distribution(s, f[0])

    def test_t3_counts(self, ctx5):
        f = trace_polynomial(ctx5, [3])
        s = walsh(f)
        assert s.histogram == {-8: 6, 0: 16, 8: 10}
        assert check_nearbent_distribution(s, f[0])

    def test_requires_near_bent(self, ctx7):
        with pytest.raises(NotNearBent):
            check_nearbent_distribution(walsh(BooleanFunction.constant(7, 0)), 0)


class TestFieldPointQueries:
    def test_at_zero(self, ctx7):
        f = trace_polynomial(ctx7, [13, 7])
        assert walsh_at_field_point(f, ctx7, 0) == 128 - 2 * f.weight()

    def test_trace_at_one(self, ctx7):
        assert walsh_at_field_point(trace_function(ctx7), ctx7, 1) == 128

    def test_matches_definition(self, ctx5):
        rng = np.random.default_rng(23)
        f = random_function(rng, 5)
        for a in range(32):
            assert walsh_at_field_point(f, ctx5, a) == naive_walsh_at_trace_point(
                f, ctx5.primitive_poly, a
            )


class TestDual:
    def test_requires_bent(self, ctx7):
        with pytest.raises(NotBent):
            dual(BooleanFunction.constant(8, 0), ctx7)

    def test_dimension_check(self, ctx5):
        from bentfn.errors import DimensionMismatch

        with pytest.raises(DimensionMismatch):
            dual(BooleanFunction.constant(8, 0), ctx5)

    def test_dual_is_bent_and_bidual(self, ctx7):
        f0 = trace_polynomial(ctx7, [3, 9])
        F = join(f0, f0 + trace_function(ctx7))
        D = dual(F, ctx7)
        assert classify(D) is Classification.BENT
        assert dual(D, ctx7) == F

    def test_bidual_many(self, ctx5):
        # every bent join of a qualifying seed is recovered by double dualization
        tr = trace_function(ctx5)
        for exps in ([3], [5], [3, 5]):
            f0 = trace_polynomial(ctx5, exps)
            F = join(f0, f0 + tr)
            assert dual(dual(F, ctx5), ctx5) == F

    def test_self_dual_example(self, ctx7):
        f0 = trace_polynomial(ctx7, [3, 5, 7, 11, 19, 21])
        F = join(f0, f0 + trace_function(ctx7))
        assert dual(F, ctx7) == F

    def test_derivatives_of_bent_balanced(self, ctx5):
        f0 = trace_polynomial(ctx5, [3])
        F = join(f0, f0 + trace_function(ctx5))
        for v in range(1, 64):
            assert F.derivative(v).is_balanced()

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from hallforge.errors import DivergentFactor, SeriesOverflow, WindowMismatch, WindowOverflow
from hallforge.families import enumerate_reduced_lh, enumerate_reduced_odd
from hallforge.partition import Partition
from hallforge.protocol import StatKind
from hallforge.series import (
    BiSeries,
    add,
    bounded_multiplicity_product,
    finite_factor,
    geometric_factor,
    gf_of_partitions,
    mul,
    one,
    q_analogue_product,
    reduced_degree,
    rhs_lhp,
    rhs_reduced_lhp,
    rhs_refined_lhp,
    rhs_refined_rlhp,
)
from hallforge.trapezoid import trapezoid_number


class TestArithmetic:
    def test_geometric_factor(self):
        assert geometric_factor(0, 1, 5).coeffs.tolist() == [[1, 1, 1, 1, 1, 1]]
        series = geometric_factor(1, 2, qmax=6, tmax=2)
        assert series.terms() == [(0, 0, 1), (1, 2, 1), (2, 4, 1)]

    def test_divergent_factor(self):
        with pytest.raises(DivergentFactor):
            geometric_factor(1, 0, 5)

    def test_finite_factor(self):
        assert finite_factor(0, 3, 5).terms() == [(0, 0, 1), (0, 3, -1)]

    def test_inverse_pair(self):
        assert mul(finite_factor(0, 1, 8), geometric_factor(0, 1, 8)) == one(8)
        assert finite_factor(1, 2, 8, 4) * geometric_factor(1, 2, 8, 4) == one(8, 4)

    def test_window_mismatch(self):
        with pytest.raises(WindowMismatch):
            one(3) + one(4)

    def test_overflow_is_checked(self):
        big = BiSeries.monomial(0, 0, qmax=0, coeff=2**62)
        with pytest.raises(SeriesOverflow):
            big * BiSeries.monomial(0, 0, qmax=0, coeff=4)

    def test_values_are_read_only(self):
        series = one(2)
        with pytest.raises(ValueError):
            series.coeffs[0, 1] = 5

    def test_first_difference(self):
        left = one(3)
        right = one(3) + BiSeries.monomial(0, 2, 3)
        assert left.first_difference(right) == (0, 2, 0, 1)
        assert left.first_difference(left) is None

    def test_str(self):
        assert str(rhs_refined_rlhp(3)) == "1 + tq + t^2q^2 + tq^3 + t^2q^4 + t^3q^5"
        assert str(finite_factor(0, 2, 3)) == "1 - q^2"
        assert str(BiSeries.zero(2)) == "0"


small_series = arrays(np.int64, (3, 6), elements=st.integers(-9, 9)).map(BiSeries)


class TestRing:
    def test_one_is_identity(self):
        series = rhs_refined_rlhp(3)
        qmax, tmax = series.window
        assert one(qmax, tmax) * series == series
        assert mul(series, one(qmax, tmax)) == series

    def test_difference_of_squares(self):
        tq = BiSeries.monomial(1, 1, qmax=4, tmax=4)
        left = add(one(4, 4), tq) * (one(4, 4) + -tq)
        assert left == one(4, 4) - BiSeries.monomial(2, 2, qmax=4, tmax=4)
        assert left.terms() == [(0, 0, 1), (2, 2, -1)]

    @settings(max_examples=100)
    @given(small_series, small_series)
    def test_mul_commutes(self, a, b):
        assert mul(a, b) == mul(b, a)

    @given(small_series)
    def test_negation(self, a):
        assert add(a, -a) == BiSeries.zero(5, 2)


class TestGeneratingFunctions:
    def test_reduced_three(self):
        series = gf_of_partitions(enumerate_reduced_lh(3), qmax=5)
        assert series.coeffs.tolist() == [[1, 1, 1, 1, 1, 1]]

    def test_refined_reduced_three(self):
        hall = gf_of_partitions(enumerate_reduced_lh(3), StatKind.ALT_SIZE, 5, 3)
        odd = gf_of_partitions(enumerate_reduced_odd(3), StatKind.LENGTH, 5, 3)
        assert hall == odd == rhs_refined_rlhp(3)

    def test_window_overflow(self):
        with pytest.raises(WindowOverflow):
            gf_of_partitions([Partition((4, 2))], qmax=5)

    def test_statistic_outside_window(self):
        with pytest.raises(WindowOverflow):
            gf_of_partitions([Partition((1, 1))], StatKind.LENGTH, qmax=5, tmax=1)


class TestProductSides:
    @pytest.mark.parametrize("N", range(1, 8))
    def test_reduced_product_sums_to_factorial(self, N):
        series = rhs_reduced_lhp(N)
        assert series.qmax == reduced_degree(N)
        assert series.total() == math.factorial(N)

    @pytest.mark.parametrize("N", range(1, 6))
    def test_reduced_product_is_a_polynomial(self, N):
        wide = rhs_reduced_lhp(N, qmax=reduced_degree(N) + 10)
        assert not wide.coeffs[:, reduced_degree(N) + 1:].any()

    @pytest.mark.parametrize("N", range(1, 7))
    def test_refined_specializes(self, N):
        assert rhs_refined_rlhp(N).at_t_equals_one() == rhs_reduced_lhp(N)
        assert rhs_refined_lhp(N, 20).at_t_equals_one() == rhs_lhp(N, 20)

    def test_width_one(self):
        assert rhs_reduced_lhp(1) == one(0)
        assert rhs_refined_lhp(1, 4, 4) == geometric_factor(1, 1, 4, 4)

    def test_lhp_grows_with_width(self):
        previous = rhs_lhp(1, 30).coeffs
        for N in range(2, 7):
            current = rhs_lhp(N, 30).coeffs
            assert np.all(current >= previous)
            previous = current

    @pytest.mark.parametrize("n", range(1, 8))
    def test_bounded_product_counts_reduced_odd(self, n):
        degree = reduced_degree(n)
        assert bounded_multiplicity_product(n, degree) == gf_of_partitions(
            enumerate_reduced_odd(n), qmax=degree
        )

    def test_q_analogue_exponents_at_five(self):
        bounded = bounded_multiplicity_product(5, 40)
        trapezoidal = [trapezoid_number(5, k) for k in range(1, 6)]
        assert trapezoidal == [5, 12, 15, 14, 9]
        assert q_analogue_product(trapezoidal, 5, 40) == bounded
        shifted = [math.comb(5, 2) - math.comb(k - 1, 2) for k in range(1, 6)]
        assert shifted == [10, 10, 9, 7, 4]
        assert q_analogue_product(shifted, 5, 40) != bounded

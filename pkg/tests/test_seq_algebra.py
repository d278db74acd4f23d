import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beurling.seq_algebra import (
    CirclePoint,
    FinSeq,
    circle_distance,
    convolve,
    delta,
    difference_seq,
    fourier_eval,
    fourier_grid,
    involution,
    vanishing_order,
    weighted_norm,
)
from beurling.weights import ExponentialWeight, PowerWeight

scalars = st.complex_numbers(
    min_magnitude=0.1, max_magnitude=4.0, allow_nan=False, allow_infinity=False
)
finseqs = st.dictionaries(st.integers(-6, 6), scalars, max_size=5).map(FinSeq)
nonzero_finseqs = finseqs.filter(bool)


class TestFinSeq:
    def test_zero_entries_dropped(self):
        assert len(FinSeq({0: 1, 3: 0})) == 1

    def test_support(self):
        assert FinSeq({-2: 1, 5: 1j}).support() == (-2, 5)
        with pytest.raises(ValueError):
            FinSeq().support()

    def test_arithmetic_prunes_cancellation(self):
        f = FinSeq({0: 1.0, 1: 1.0})
        g = FinSeq({1: 1.0 - 1e-16})
        out = f - g
        assert out.entries == {0: 1.0}  # 1e-16 residue pruned relative to 1.0

    def test_shift(self):
        assert delta(0).shift(3) == delta(3)


class TestConvolve:
    def test_identity(self):
        g = FinSeq({-1: 2, 3: 1j})
        assert convolve(delta(0), g) == g

    def test_delta_powers(self):
        assert convolve(delta(1), delta(1)) == delta(2)

    def test_small_example(self):
        f = FinSeq({0: 1, 1: 1})
        g = FinSeq({0: 1, -1: 1})
        assert convolve(f, g) == FinSeq({-1: 1, 0: 2, 1: 1})

    @given(finseqs, finseqs)
    def test_commutative(self, f, g):
        lhs, rhs = convolve(f, g), convolve(g, f)
        diff = lhs - rhs
        scale = max([abs(v) for _, v in lhs] + [1e-30])
        assert all(abs(v) <= 1e-12 * scale for _, v in diff)

    @settings(max_examples=50)
    @given(finseqs, finseqs, finseqs)
    def test_associative(self, f, g, h):
        lhs = convolve(convolve(f, g), h)
        rhs = convolve(f, convolve(g, h))
        diff = lhs - rhs
        scale = max([abs(v) for _, v in lhs] + [abs(v) for _, v in rhs] + [1e-30])
        assert all(abs(v) <= 1e-9 * scale for _, v in diff)

    @given(finseqs, finseqs, finseqs)
    def test_distributive(self, f, g, h):
        lhs = convolve(f, g + h)
        rhs = convolve(f, g) + convolve(f, h)
        diff = lhs - rhs
        scale = max([abs(v) for _, v in lhs] + [1e-30])
        assert all(abs(v) <= 1e-9 * scale for _, v in diff)


class TestInvolution:
    def test_worked_example(self):
        f = FinSeq({-1: 2, 1: -0.5})
        assert involution(f) == FinSeq({1: 2, -1: -0.5})

    def test_conjugates_at_origin(self):
        assert involution(FinSeq({0: 1j})) == FinSeq({0: -1j})

    def test_reflect_and_conjugate(self):
        assert involution(FinSeq({2: 1 + 1j})) == FinSeq({-2: 1 - 1j})

    @given(finseqs)
    def test_involutive(self, f):
        assert involution(involution(f)) == f

    @given(finseqs, finseqs)
    def test_multiplicative(self, f, g):
        lhs = involution(convolve(f, g))
        rhs = convolve(involution(f), involution(g))
        diff = lhs - rhs
        scale = max([abs(v) for _, v in lhs] + [1e-30])
        assert all(abs(v) <= 1e-9 * scale for _, v in diff)


class TestWeightedNorm:
    def test_worked_example(self):
        f = FinSeq({-1: 2, 1: -0.5})
        assert weighted_norm(f, ExponentialWeight(2)) == pytest.approx(6.25)

    def test_delta_gives_weight_at_zero(self):
        assert weighted_norm(delta(0), ExponentialWeight(2)) == pytest.approx(2.0)

    def test_power_weight(self):
        assert weighted_norm(FinSeq({1: 1}), PowerWeight(1)) == pytest.approx(2.0)

    @settings(max_examples=50)
    @given(finseqs, finseqs)
    def test_banach_inequality(self, f, g):
        w = PowerWeight(1)
        lhs = weighted_norm(convolve(f, g), w)
        rhs = weighted_norm(f, w) * weighted_norm(g, w)
        assert lhs <= rhs * (1 + 1e-9) + 1e-12


class TestFourier:
    def test_worked_example_at_zero(self):
        assert fourier_eval(FinSeq({-1: 2, 1: -0.5}), 0.0) == pytest.approx(1.5)

    def test_delta_has_constant_transform(self):
        for t in (0.0, 1.0, 3.0):
            assert fourier_eval(delta(0), t) == pytest.approx(1.0)

    def test_second_derivative(self):
        f = FinSeq({0: 1, 1: -2, 2: 1})  # transform (1 - e^{-it})^2
        assert fourier_eval(f, 0.0, 2) == pytest.approx(-2.0)

    def test_derivative_matches_finite_difference(self):
        f = FinSeq({-2: 1j, 0: 0.5, 3: -1})
        h = 1e-6
        for t in (0.3, 2.0):
            numeric = (fourier_eval(f, t + h) - fourier_eval(f, t - h)) / (2 * h)
            assert fourier_eval(f, t, 1) == pytest.approx(numeric, abs=1e-6)

    @given(nonzero_finseqs, nonzero_finseqs, st.floats(0, 2 * math.pi - 1e-9))
    def test_transform_multiplicative(self, f, g, t):
        lhs = fourier_eval(convolve(f, g), t)
        rhs = fourier_eval(f, t) * fourier_eval(g, t)
        scale = f.abs_sum() * g.abs_sum()
        assert abs(lhs - rhs) <= 1e-9 * scale

    @given(finseqs, st.floats(0, 2 * math.pi - 1e-9))
    def test_involution_conjugates_transform(self, f, t):
        lhs = fourier_eval(involution(f), t)
        rhs = fourier_eval(f, t).conjugate()
        assert abs(lhs - rhs) <= 1e-9 * max(f.abs_sum(), 1e-30)

    def test_grid_shape_and_values(self):
        f = FinSeq({-1: 2, 1: -0.5})
        ts, vals = fourier_grid(f, 8)
        assert len(ts) == len(vals) == 8
        assert vals[0] == pytest.approx(1.5)


class TestVanishingOrder:
    def test_double_zero(self):
        assert vanishing_order(FinSeq({0: 1, 1: -2, 2: 1}), 0.0) == 2

    def test_simple_zero(self):
        assert vanishing_order(delta(0) - delta(1), 0.0) == 1

    def test_nonvanishing(self):
        assert vanishing_order(delta(0), 0.0) == 0

    def test_scale_invariant(self):
        f = FinSeq({0: 1, 1: -2, 2: 1})
        assert vanishing_order(1e-20 * f, 0.0) == 2
        assert vanishing_order(1e20 * f, 0.0) == 2

    def test_zero_sequence_rejected(self):
        with pytest.raises(ValueError):
            vanishing_order(FinSeq(), 0.0)

    @given(nonzero_finseqs, st.integers(1, 3), st.integers(0, 2))
    def test_differences_raise_order(self, f, m, k):
        g = difference_seq(f, m, k + 1)
        if g:
            assert vanishing_order(g, 0.0) >= k + 1


class TestDifferenceSeq:
    def test_single_difference_of_delta(self):
        assert difference_seq(delta(0), 1, 1) == FinSeq({-1: 1, 0: -1})

    def test_squared_step_two(self):
        assert difference_seq(delta(0), 2, 2) == FinSeq({-4: 1, -2: -2, 0: 1})

    def test_transform_factor(self):
        f = FinSeq({0: 1, 2: 1j})
        g = difference_seq(f, 3, 2)
        for t in (0.4, 1.7):
            factor = (cmath.exp(1j * t * 3) - 1) ** 2
            assert fourier_eval(g, t) == pytest.approx(factor * fourier_eval(f, t))


class TestCirclePoint:
    def test_canonical_range(self):
        assert CirclePoint(2 * math.pi + 0.5).t == pytest.approx(0.5)
        assert CirclePoint(-0.5).t == pytest.approx(2 * math.pi - 0.5)

    def test_wraparound_to_zero(self):
        assert CirclePoint(2 * math.pi - 1e-12).t == 0.0

    def test_distance_wraps(self):
        assert circle_distance(0.1, 2 * math.pi - 0.1) == pytest.approx(0.2)

    def test_close_to(self):
        assert CirclePoint(1.0).close_to(CirclePoint(1.0 + 1e-10))
        assert not CirclePoint(1.0).close_to(CirclePoint(1.1))

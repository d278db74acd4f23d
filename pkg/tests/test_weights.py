import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beurling.errors import WindowError
from beurling.signals import ExpPoly, Geometric
from beurling.weights import (
    ExponentialWeight,
    PowerWeight,
    ProductWeight,
    SignalDerivedWeight,
    TableWeight,
    analyze_weight,
    check_beurling_domar,
    check_subquadratic,
    check_weight_axioms,
    classify_growth,
    eval_weight,
    log_eval_weight,
)


def linear_signal():
    return ExpPoly([(0.0, (0, 1))])


class TestEval:
    def test_exponential_worked_example(self):
        assert eval_weight(ExponentialWeight(2), 1) == pytest.approx(2.5)

    def test_power_identity(self):
        assert eval_weight(PowerWeight(1), 0) == pytest.approx(1.0)

    def test_signal_derived_linear(self):
        w = SignalDerivedWeight(linear_signal(), 100)
        assert eval_weight(w, 3) == pytest.approx(4.0)

    def test_symmetry(self):
        for w in (PowerWeight(1.5), ExponentialWeight(3),
                  SignalDerivedWeight(linear_signal(), 50)):
            for n in (1, 4, 9):
                assert eval_weight(w, n) == pytest.approx(eval_weight(w, -n))

    def test_table_window(self):
        w = TableWeight(2, [1.0, 2.0, 4.0])
        assert eval_weight(w, -2) == 4.0
        with pytest.raises(WindowError):
            eval_weight(w, 3)

    def test_product(self):
        w = ProductWeight(PowerWeight(1), ExponentialWeight(2))
        assert eval_weight(w, 1) == pytest.approx(2 * 2.5)

    def test_log_eval_avoids_overflow(self):
        lw = log_eval_weight(ExponentialWeight(2), 10_000)
        assert lw == pytest.approx(10_000 * math.log(2), rel=1e-12)

    def test_validation(self):
        with pytest.raises(ValueError):
            PowerWeight(-1)
        with pytest.raises(ValueError):
            ExponentialWeight(1.0)
        with pytest.raises(ValueError):
            TableWeight(1, [1.0])


class TestAxioms:
    def test_power_passes(self):
        assert check_weight_axioms(PowerWeight(2), 50).axioms_ok

    def test_exponential_passes(self):
        assert check_weight_axioms(ExponentialWeight(2), 50).axioms_ok

    def test_bad_table_fails_with_violations(self):
        report = check_weight_axioms(TableWeight(1, [1.0, 0.5]), 1)
        assert not report.axioms_ok
        assert any(n == 1 and m == 0 for n, m, _ in report.violations)

    def test_signal_derived_passes(self):
        w = SignalDerivedWeight(ExpPoly([(1.0, (0, 1))]), 30)
        assert check_weight_axioms(w, 10).axioms_ok

    @settings(max_examples=20, deadline=None)
    @given(st.floats(0.1, 3), st.floats(1.1, 3))
    def test_product_of_passing_weights_passes(self, a, base):
        w = ProductWeight(PowerWeight(a), ExponentialWeight(base))
        assert check_weight_axioms(w, 20).axioms_ok

    def test_signal_derived_triangle_property(self):
        # alpha(y) = w_phi(y) - 1 is subadditive and even
        w = SignalDerivedWeight(ExpPoly([(0.7, (1, 0.5))]), 40)
        alpha = {y: eval_weight(w, y) - 1.0 for y in range(-12, 13)}
        for y in range(0, 13):
            assert alpha[y] == pytest.approx(alpha[-y])
        for y1 in range(-6, 7):
            for y2 in range(-6, 7):
                assert alpha[y1 + y2] <= alpha[y1] + alpha[y2] + 1e-9


class TestBeurlingDomar:
    def test_quadratic_power_holds(self):
        assert check_beurling_domar(PowerWeight(2), 1, 10_000).verdict == "holds"

    def test_exponential_fails(self):
        assert check_beurling_domar(ExponentialWeight(2), 1, 10_000).verdict == "fails"

    def test_trivial_weight_holds_quickly(self):
        assert check_beurling_domar(PowerWeight(0), 1, 10).verdict == "holds"

    def test_trace_is_partial_sums(self):
        res = check_beurling_domar(PowerWeight(2), 1, 1000)
        ms = [m for m, _ in res.trace]
        sums = [s for _, s in res.trace]
        assert ms == sorted(ms) and ms[-1] == 1000
        assert all(b >= a for a, b in zip(sums, sums[1:]))  # terms positive

    def test_short_evidence_is_inconclusive(self):
        # at M = 10 the exponential's tail still decreases noticeably, so
        # an honest probe refuses to decide
        assert check_beurling_domar(ExponentialWeight(2), 1, 10).verdict == "inconclusive"

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            check_beurling_domar(PowerWeight(1), 0, 100)
        with pytest.raises(ValueError):
            check_beurling_domar(PowerWeight(1), 1, 5)


class TestGrowthClass:
    def test_linear_power(self):
        g = classify_growth(PowerWeight(1), 3, 1000)
        assert g is not None and g.N == 1 and g.alpha == pytest.approx(0.5)

    def test_bounded_weight(self):
        g = classify_growth(PowerWeight(0), 3, 1000)
        assert g is not None and g.N == 0

    def test_exponential_has_no_class(self):
        assert classify_growth(ExponentialWeight(2), 3, 1000) is None

    def test_quadratic(self):
        g = classify_growth(PowerWeight(2), 3, 1000)
        assert g is not None and g.N == 2

    def test_constants_bracket_the_weight(self):
        g = classify_growth(PowerWeight(1.3), 3, 500)
        assert g is not None
        for m in range(0, 501, 50):
            w = eval_weight(PowerWeight(1.3), m)
            assert g.c1 * (1 + m ** g.N) <= w * (1 + 1e-9)
            assert w <= g.c2 * (1 + m ** (g.N + g.alpha)) * (1 + 1e-9)


class TestSubquadratic:
    def test_signal_derived_holds(self):
        w = SignalDerivedWeight(linear_signal(), 100)
        assert check_subquadratic(w, 1, 1000).verdict == "holds"

    def test_linear_power_holds(self):
        assert check_subquadratic(PowerWeight(1), 1, 1000).verdict == "holds"

    def test_exponential_fails(self):
        assert check_subquadratic(ExponentialWeight(2), 1, 100).verdict == "fails"


class TestAnalyze:
    def test_full_report(self):
        report = analyze_weight(ExponentialWeight(2), window=20, terms=1000)
        assert report.axioms_ok
        assert report.beurling_domar.verdict == "fails"
        assert report.growth is None

    def test_geometric_signal_weight_matches_closed_form(self):
        # differences of 2^n grow like the signal itself
        w = SignalDerivedWeight(Geometric(2), 20)
        val = eval_weight(w, 1)
        # sup |2^{x+1} - 2^x| over |x| <= 20 is 2^20; both orientations add
        expected = 1 + 0.5 * (2.0 ** 20 + 2.0 ** 19)
        assert val == pytest.approx(expected)

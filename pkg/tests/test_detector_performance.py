import numpy as np
import pytest

from detector import (
    EXACT,
    MONTE_CARLO,
    detection_probability,
    empirical_threshold,
    false_alarm_rate,
    roc_curve,
    roc_profile,
    threshold_for_alpha,
)
from fdist import Method, cdf_h0_corollary2, cdf_h0_theorem1
from matrand import BatchSampler, ProblemDims
from specfun import DomainError, NotEvaluableError


def test_false_alarm_rate_square_case():
    result = false_alarm_rate(ProblemDims(2, 2, 2), 5.0)
    assert result.method is Method.COROLLARY2
    assert result.value == pytest.approx(1.0 - cdf_h0_corollary2(2, 5.0).value, abs=1e-14)


def test_false_alarm_rate_limits():
    dims = ProblemDims(2, 3, 3)
    assert false_alarm_rate(dims, 1.0 + 1e-7).value == pytest.approx(1.0, abs=1e-10)
    assert false_alarm_rate(dims, 1e8).value < 1e-4
    with pytest.raises(DomainError):
        false_alarm_rate(dims, 1.0)


@pytest.mark.parametrize("alpha_rate", [0.001, 0.01, 0.1, 0.5])
def test_threshold_inverse_consistency(alpha_rate):
    dims = ProblemDims(2, 3, 3)
    mu_th = threshold_for_alpha(dims, alpha_rate)
    assert mu_th > 1.0
    assert false_alarm_rate(dims, mu_th).value == pytest.approx(alpha_rate, abs=1e-6)


def test_threshold_recovers_forward_threshold():
    dims = ProblemDims(3, 4, 5)
    mu = 6.5
    alpha_rate = 1.0 - cdf_h0_theorem1(dims, mu).value
    assert threshold_for_alpha(dims, alpha_rate) == pytest.approx(mu, rel=1e-8)


def test_threshold_median_matches_simulation():
    dims = ProblemDims(2, 2, 2)
    median = threshold_for_alpha(dims, 0.5)
    scn_values = BatchSampler(dims, threads=2).scn(200_000, seed=21)
    below = np.count_nonzero(scn_values <= median) / scn_values.size
    assert below == pytest.approx(0.5, abs=4.0 * np.sqrt(0.25 / scn_values.size))


def test_threshold_rejects_bad_rates():
    for rate in [0.0, 1.0, 1.5, -0.1]:
        with pytest.raises(DomainError):
            threshold_for_alpha(ProblemDims(2, 2, 2), rate)


def test_detection_without_signal_is_false_alarm():
    dims = ProblemDims(2, 2, 2)
    assert detection_probability(dims, 0.0, 4.0).value == pytest.approx(false_alarm_rate(dims, 4.0).value)


def test_detection_probability_near_unit_threshold():
    assert detection_probability(ProblemDims(2, 2, 2), 3.0, 1.0 + 1e-6).value == pytest.approx(1.0, abs=1e-8)


def test_exact_detection_matches_monte_carlo():
    dims = ProblemDims(2, 2, 2)
    mu_th = threshold_for_alpha(dims, 0.1)
    exact = detection_probability(dims, 5.0, mu_th)
    simulated = detection_probability(dims, 5.0, mu_th, method=MONTE_CARLO, draws=200_000, seed=4, threads=2)
    assert exact.method is Method.THEOREM2
    assert abs(exact.value - simulated.value) < 4.0 * np.sqrt(exact.value * (1.0 - exact.value) / 200_000)


def test_exact_detection_needs_square_shape():
    with pytest.raises(DomainError):
        detection_probability(ProblemDims(2, 3, 3), 1.0, 3.0, method=EXACT)
    with pytest.raises(DomainError):
        detection_probability(ProblemDims(2, 2, 2), 1.0, 3.0, method="table")


def test_roc_without_signal_is_diagonal():
    points = roc_profile(ProblemDims(2, 2, 2), 0.0, [0.01, 0.1, 0.5])
    for point in points:
        assert point.p_d == pytest.approx(point.p_f, abs=1e-6)


def test_roc_profile_properties():
    points = roc_profile(ProblemDims(2, 2, 2), 2.0, [0.01, 0.05, 0.1, 0.3])
    assert [p.p_f for p in points] == sorted(p.p_f for p in points)
    assert all(p.p_d >= p.p_f for p in points)
    assert all(b.p_d >= a.p_d for a, b in zip(points, points[1:]))
    assert all(b.mu_th < a.mu_th for a, b in zip(points, points[1:]))


def test_roc_dominance_in_spike_strength():
    previous = None
    for gamma in [0.5, 1.0, 2.0, 5.0]:
        point = roc_profile(ProblemDims(2, 2, 2), gamma, [0.1])[0]
        if previous is not None:
            assert point.p_d >= previous
        previous = point.p_d


def test_more_sensors_do_not_raise_power():
    gamma = 2.0
    p_d = {}
    for m in [2, 3, 4]:
        dims = ProblemDims(m, m, m)
        point = roc_profile(dims, gamma, [0.1], method=MONTE_CARLO, draws=100_000, seed=31, threads=2)[0]
        p_d[m] = (point.p_d, point.p_d_err)
    for small, large in [(2, 3), (3, 4)]:
        slack = 3.0 * np.hypot(p_d[small][1], p_d[large][1])
        assert p_d[large][0] <= p_d[small][0] + slack


def test_monte_carlo_roc_shares_one_batch():
    dims = ProblemDims(2, 3, 3)
    points = roc_profile(dims, 1.0, [0.05, 0.2], method=MONTE_CARLO, draws=20_000, seed=2, threads=1)
    assert all(point.method is Method.MONTE_CARLO for point in points)
    assert points[1].p_d >= points[0].p_d


def test_roc_curve_parametric_sweep():
    points = roc_curve(ProblemDims(2, 2, 2), 1.0, [2.0, 5.0, 20.0, 100.0])
    assert [p.mu_th for p in points] == [100.0, 20.0, 5.0, 2.0]
    assert all(p.p_d >= p.p_f for p in points)


def test_roc_grid_validation():
    with pytest.raises(DomainError):
        roc_profile(ProblemDims(2, 2, 2), 1.0, [0.1, 0.05])
    with pytest.raises(DomainError):
        roc_profile(ProblemDims(2, 2, 2), 1.0, [])


def test_empirical_threshold_matches_strict_exceedance():
    values = np.arange(1.0, 4001.0)
    threshold = empirical_threshold(values, 0.1)
    assert np.count_nonzero(values > threshold) == 400


def test_threshold_falls_back_to_simulation_outside_closed_forms():
    dims = ProblemDims(2, 2, 8)
    with pytest.raises(NotEvaluableError):
        threshold_for_alpha(dims, 0.1)
    mu_th = threshold_for_alpha(dims, 0.1, allow_fallback=True, draws=20_000, seed=5, threads=1)
    scn_values = BatchSampler(dims, threads=1).scn(20_000, 5)
    assert np.count_nonzero(scn_values > mu_th) == 2000
    achieved = false_alarm_rate(dims, mu_th, draws=20_000, seed=5, threads=1)
    assert achieved.method is Method.MONTE_CARLO
    assert achieved.value == pytest.approx(0.1, abs=1e-9)


def test_roc_profile_reports_achieved_false_alarm_rate():
    dims = ProblemDims(2, 3, 3)
    for alpha_rate, point in zip([0.05, 0.2], roc_profile(dims, 1.0, [0.05, 0.2], method=MONTE_CARLO,
                                                          draws=5000, seed=2, threads=1)):
        assert point.p_f == false_alarm_rate(dims, point.mu_th).value
        assert point.p_f == pytest.approx(alpha_rate, abs=1e-6)

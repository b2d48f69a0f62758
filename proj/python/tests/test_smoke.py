import math

import numpy as np
import pytest

import sgbounds as sg


def test_closed_forms():
    assert sg.beta_nfd(4.0) == pytest.approx(3.0 * math.sqrt(3.0) / 2.0, rel=1e-14)
    assert sg.beta_fd(4.0) == pytest.approx(math.pi / 2.0, rel=1e-14)
    assert sg.optimal_xi(3.7) == pytest.approx(5.7 / 1.7)


def test_vectorized_cdf_bounds_are_ordered():
    q = np.logspace(-2, 3, 40)
    lb = sg.cdf_lb_nfd(q, 3.7)
    ub = sg.cdf_ub_nfd(q, 3.7)
    assert lb.shape == q.shape
    assert np.all(lb <= ub + 1e-12)
    exact = sg.fading_cdf_exact(q, 3.7)
    assert np.all(sg.fading_cdf_lb(q, 3.7) <= exact + 1e-9)
    assert np.all(exact <= sg.fading_cdf_ub(q, 3.7) + 1e-9)


def test_simulation_is_reproducible_and_thread_invariant():
    a = sg.simulate("nfd", 500, threads=1, mu=3.7, delta=0.01, seed=5)
    b = sg.simulate("nfd", 500, threads=2, mu=3.7, delta=0.01, seed=5)
    assert a.shape == (500,)
    assert np.array_equal(a, b)
    assert np.all(a > 0)


def test_rate_sits_between_bounds():
    q = sg.simulate("nfd", 4000, mu=3.7, seed=11)
    rate, se = sg.mean_shannon_rate(q, 10.0)
    assert sg.avg_rate_lb_nfd(10.0, 3.7) - 3 * se <= rate <= sg.avg_rate_ub_nfd(10.0, 3.7) + 3 * se
    lb, ub = sg.outage_bounds_nfd(10.0, 10.0, 3.7)
    assert lb <= ub


def test_laplace_transform_and_inversion():
    expected = 1.0 / (math.exp(-1.0) + math.sqrt(math.pi) * math.erf(1.0))
    assert sg.laplace_inv_q("nfd", 1.0, mu=4.0).real == pytest.approx(expected, rel=1e-10)
    out = sg.cdf_via_laplace("pfd", np.array([0.1, 1.0, 10.0]), mu=3.7, delta=0.01)
    assert out["failed"] == []
    assert np.all(np.diff(out["cdf"]) >= 0)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        sg.simulate("rician", 10)
    with pytest.raises(ValueError):
        sg.simulate("nfd", 10, mu=1.5)
    rough = sg.cdf_via_laplace("pfd", np.array([0.5, 1.0]), target=1e-18)
    assert rough["failed"] == [0, 1]
    assert np.all((rough["cdf"] >= 0) & (rough["cdf"] <= 1))
    assert issubclass(sg.NumericalError, RuntimeError)
    with pytest.raises(sg.NumericalError) as info:
        sg.simulate("nfd", 2, mu=2.5)
    assert info.value.error_estimate > 1e-2


def test_mmimo_limit_scales_with_antennas():
    a = sg.mmimo(8, 200, regime="asymptotic", seed=3)
    b = sg.mmimo(16, 200, regime="asymptotic", seed=3)
    assert np.array_equal(b, 2.0 * a)

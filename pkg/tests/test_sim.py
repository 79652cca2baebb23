import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorscan.errors import InvalidParamsError, StepTooLargeError
from mirrorscan.models import LinearModel, actuator, apply_correction, build_third_order
from mirrorscan.sim import (
    ExactPropagator,
    InputSignal,
    TimeSeries,
    friction_step_offset,
    friction_torque,
    integrate_friction,
    integrate_linear,
    propagate_lti,
    steady_amplitude,
)

INTEGRATOR = LinearModel([[0.0]], [1.0], [1.0])
DOUBLE = LinearModel([[0, 1], [0, 0]], [0, 1], [1, 0])
CHAIN = LinearModel([[-1, 0, 0], [1, -2, 0], [0, 1, -3]], [1, 0, 0], [0, 0, 1])


def test_integrator_propagation():
    assert propagate_lti(INTEGRATOR, [0.0], 2.0, 3.0)[0] == pytest.approx(6.0, abs=1e-12)
    assert ExactPropagator(INTEGRATOR).propagate([0.0], 2.0, 3.0)[0] == pytest.approx(6.0, abs=1e-12)


def test_double_integrator_propagation():
    for x in (propagate_lti(DOUBLE, [1.0, 0.0], 1.0, 2.0), ExactPropagator(DOUBLE).propagate([1.0, 0.0], 1.0, 2.0)):
        assert x == pytest.approx([3.0, 2.0], abs=1e-12)


def test_distinct_real_chain_closed_form():
    t = 0.7
    x1 = 1 - math.exp(-t)
    x2 = 0.5 - math.exp(-t) + 0.5 * math.exp(-2 * t)
    x3 = 1 / 6 - 0.5 * math.exp(-t) + 0.5 * math.exp(-2 * t) - math.exp(-3 * t) / 6
    for x in (propagate_lti(CHAIN, np.zeros(3), 1.0, t), ExactPropagator(CHAIN).propagate(np.zeros(3), 1.0, t)):
        assert x == pytest.approx([x1, x2, x3], abs=1e-12)


def test_zero_duration_is_identity():
    m = build_third_order(actuator("small"))
    x0 = np.array([0.1, -2.0, 0.3])
    assert np.array_equal(propagate_lti(m, x0, 5.0, 0.0), x0)
    with pytest.raises(ValueError):
        propagate_lti(m, x0, 1.0, -1.0)


@pytest.mark.parametrize("omega,T_RL,Tc,expected", [
    (0.0, 0.01, 0.02, (0.01, True)),
    (0.0, 0.05, 0.02, (0.02, False)),
    (0.0, -0.05, 0.02, (-0.02, False)),
    (1.0, 0.0, 0.02, (0.02, False)),
    (-1.0, 0.5, 0.02, (-0.02, False)),
])
def test_friction_torque_cases(omega, T_RL, Tc, expected):
    assert friction_torque(omega, T_RL, Tc) == expected


def test_friction_torque_rejects_negative_tc():
    with pytest.raises(InvalidParamsError):
        friction_torque(0.0, 0.0, -1.0)


def test_step_guard():
    m = build_third_order(actuator("small"))
    with pytest.raises(StepTooLargeError):
        integrate_linear(m, np.zeros(3), InputSignal.step(1.0), 1e-4, 0.01)
    with pytest.raises(InvalidParamsError):
        integrate_linear(m, np.zeros(3), InputSignal.step(1.0), 0.0, 0.01)


def test_zero_input_zero_state_stays_zero():
    p = actuator("large")
    m = build_third_order(p)
    s = integrate_linear(m, np.zeros(3), InputSignal.zero(), 5e-5, 0.05)
    f = integrate_friction(m, p, np.zeros(3), InputSignal.zero(), 1e-5, 0.05)
    assert np.all(s["phi"] == 0) and np.all(f["phi"] == 0)


@pytest.mark.parametrize("name", ["small", "large"])
def test_zero_friction_equals_linear(name):
    p = actuator(name)
    m = build_third_order(p)
    u = InputSignal.sinusoid(5.0, 20.0)
    lin = integrate_linear(m, np.zeros(3), u, 1e-5, 0.05)
    fr = integrate_friction(m, p, np.zeros(3), u, 1e-5, 0.05, Tc=0.0)
    assert np.max(np.abs(lin["phi"] - fr["phi"])) <= 1e-12


def test_rk4_agrees_with_exact_propagation():
    m = build_third_order(actuator("small"))
    s = integrate_linear(m, np.zeros(3), InputSignal.step(3.0), 1e-6, 0.01)
    x = ExactPropagator(m).propagate(np.zeros(3), 3.0, 0.01)
    assert s["phi"][-1] == pytest.approx(x[0], rel=1e-9, abs=1e-12)


def test_step_offset_and_stuck_below_breakaway():
    p = actuator("large")
    m = build_third_order(p)
    Tc = 0.04
    u = 0.9 * friction_step_offset(p, Tc)
    s = integrate_friction(m, p, np.zeros(3), InputSignal.step(u), 1e-5, 0.05, Tc=Tc)
    assert np.all(s["phi"] == 0) and np.all(s["stick"] == 1)


def test_timeseries_window_and_lookup():
    ts = TimeSeries(0.1, 0.0, {"phi": np.arange(11.0)})
    assert ts.value_at("phi", 0.5) == 5.0
    assert len(ts.window(0.3, 0.6)) == 4


def test_steady_amplitude_of_pure_sinusoid():
    t = np.arange(0, 1.0 + 1e-12, 1e-4)
    ts = TimeSeries(1e-4, 0.0, {"phi": 0.3 * np.sin(2 * math.pi * 5 * t + 0.4)})
    assert steady_amplitude(ts, 5.0) == pytest.approx(0.3, rel=1e-6)


@settings(max_examples=25, deadline=None)
@given(a=st.floats(-10, 10), b=st.floats(-10, 10), f=st.floats(1, 50))
def test_linear_superposition(a, b, f):
    m = build_third_order(actuator("small"))
    u1, u2 = InputSignal.sinusoid(1.0, f), InputSignal.step(1.0)
    s1 = integrate_linear(m, np.zeros(3), u1, 5e-5, 0.02)["phi"]
    s2 = integrate_linear(m, np.zeros(3), u2, 5e-5, 0.02)["phi"]
    x = integrate_linear(m, np.zeros(3), InputSignal.sinusoid(a, f, offset=b), 5e-5, 0.02)["phi"]
    scale = max(1.0, np.max(np.abs(x)))
    assert np.max(np.abs(x - (a * s1 + b * s2))) <= 1e-9 * scale


@settings(max_examples=25, deadline=None)
@given(x0=st.lists(st.floats(-1, 1), min_size=3, max_size=3), u=st.floats(-20, 20), tau=st.floats(0, 0.05))
def test_exact_propagators_agree(x0, u, tau):
    m = build_third_order(apply_correction(actuator("large"), "zero_pivot_stiffness"))
    a = propagate_lti(m, x0, u, tau)
    b = ExactPropagator(m).propagate(x0, u, tau)
    assert np.max(np.abs(a - b)) <= 1e-9 * max(1.0, np.max(np.abs(a)))

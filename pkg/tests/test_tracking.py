import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorscan.errors import InvalidParamsError, MismatchedGridsError
from mirrorscan.models import CALIBRATED_TC, actuator, apply_correction, build_simplified_second_order, build_third_order
from mirrorscan.scenarios import phase_setup
from mirrorscan.toc import BangBangSolution, ComplexEigenvalueWarning
from mirrorscan.tracking import (
    ControllerConfig,
    DemandSignal,
    FrictionPlantSpec,
    compare_runs,
    measure_phase_delay,
    run_tracking,
    shift_solution,
)

A_LM = math.radians(8.35)


@pytest.fixture(autouse=True)
def _quiet():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ComplexEigenvalueWarning)
        yield


def _damped_large():
    return apply_correction(actuator("large"), "damping_x10")


def _zero_small():
    return apply_correction(actuator("small"), "zero_pivot_stiffness")


@pytest.fixture(scope="module")
def small_run():
    m = build_third_order(_zero_small())
    return run_tracking(m, ControllerConfig(20.0, 1e-3), DemandSignal.sinusoid(math.radians(3.57), 20.0), 0.15,
                        record_every=1e-4)


def test_config_validation():
    with pytest.raises(InvalidParamsError):
        ControllerConfig(u0=0.0)
    with pytest.raises(InvalidParamsError):
        ControllerConfig(Ts_control=0.0)
    with pytest.raises(InvalidParamsError):
        ControllerConfig(Ts_control=1e-3, Ts_demand=2.5e-3)
    with pytest.raises(InvalidParamsError):
        ControllerConfig(Ts_control=1e-3, Ts_demand=0.5e-3)
    with pytest.raises(InvalidParamsError):
        ControllerConfig(target_mode="velocity")
    assert ControllerConfig(Ts_control=1e-3).Ts_demand == 1e-3
    assert ControllerConfig(Ts_control=1e-3, Ts_demand=4e-3).demand_ratio == 4


def test_demand_signals():
    sq = DemandSignal.square(2.0, 5.0)
    assert sq.value(0.0) == 2.0 and sq.value(0.1 - 1e-9) == 2.0 and sq.value(0.1 + 1e-9) == -2.0
    assert DemandSignal.constant(1.5).value(3.0) == 1.5
    s = DemandSignal.sinusoid(1.0, 1.0, waveform="-sin")
    assert s.value(0.25) == pytest.approx(-1.0) and s.rate(0.0) == pytest.approx(-2 * math.pi)
    assert DemandSignal.sinusoid(1.0, 1.0).value(0.0, shift=math.pi / 2) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(InvalidParamsError):
        DemandSignal("ramp", 1.0)
    with pytest.raises(InvalidParamsError):
        DemandSignal.sinusoid(1.0, 0.0)


def test_shift_solution():
    sol = BangBangSolution(1, (0.3, 0.2, 0.1), 0.6, (0.0,), True, 10.0)
    a = shift_solution(sol, 0.1)
    assert a.initial_sign == 1 and a.intervals == pytest.approx((0.2, 0.2, 0.1))
    b = shift_solution(sol, 0.4)
    assert b.initial_sign == -1 and b.intervals == pytest.approx((0.1, 0.1))
    assert shift_solution(sol, 0.7) is None and shift_solution(None, 0.1) is None
    assert not a.converged


def test_control_is_admissible(small_run):
    levels = small_run.samples["control_levels"]
    assert set(np.abs(levels)) == {20.0}
    u = small_run.series["u"]
    t = small_run.series.t
    # changes only at control sample instants
    k = np.nonzero(np.diff(u))[0]
    assert np.allclose(np.round(t[k] / 1e-3) * 1e-3, t[k], atol=1e-9)


def test_demand_channel_recorded(small_run):
    s = small_run.series
    assert s["phi_demand"][0] == pytest.approx(math.radians(3.57))
    assert small_run.samples["failures"] == 0


def test_deterministic(small_run):
    m = build_third_order(_zero_small())
    again = run_tracking(m, ControllerConfig(20.0, 1e-3), small_run.demand, 0.15, record_every=1e-4)
    assert np.array_equal(again.series["phi"], small_run.series["phi"])


def test_compare_runs(small_run):
    c = compare_runs(small_run, small_run)
    assert c.max_abs == 0.0 and c.steady_max_abs == 0.0
    m = build_third_order(_zero_small())
    short = run_tracking(m, ControllerConfig(20.0, 1e-3), small_run.demand, 0.05, record_every=1e-4)
    with pytest.raises(MismatchedGridsError):
        compare_runs(small_run, short)


@pytest.mark.parametrize("order", [2, 3])
def test_prediction_improves_accuracy(order):
    p = _damped_large()
    m = build_third_order(p) if order == 3 else build_simplified_second_order(p)
    acc = {}
    for pred in (True, False):
        r = run_tracking(m, ControllerConfig(10.0, 1e-3, prediction=pred), DemandSignal.constant(A_LM), 0.6,
                         record_every=1e-4)
        acc[pred] = r.accuracy_achieved
    assert acc[True] < 0.5 * acc[False]


def test_chatter_at_rest():
    p = actuator("small")
    spec = FrictionPlantSpec(build_third_order(p), p, CALIBRATED_TC)
    r = run_tracking(spec, ControllerConfig(20.0, 1e-3), DemandSignal.constant(0.0), 0.1, record_every=1e-4)
    assert set(r.samples["control_levels"]) == {20.0, -20.0}
    assert r.accuracy_achieved < math.radians(0.1)


def _reach_times(result, half=0.2, tol=math.radians(0.5)):
    s = result.series
    out = []
    for k in range(int(round(s.t[-1] / half))):
        w = (s.t >= k * half) & (s.t < (k + 1) * half)
        hit = np.nonzero(np.abs(s["phi"][w] - s["phi_demand"][w]) < tol)[0]
        out.append(s.t[w][hit[0]] - k * half if len(hit) else None)
    return out


def test_insufficient_authority_on_square_wave():
    p = _damped_large()
    spec = FrictionPlantSpec(build_third_order(p), p, CALIBRATED_TC)
    demand = DemandSignal.square(A_LM, 2.5)
    weak = _reach_times(run_tracking(spec, ControllerConfig(10.0, 1e-3), demand, 0.8, record_every=1e-4))
    strong = _reach_times(run_tracking(spec, ControllerConfig(20.0, 1e-3), demand, 0.8, record_every=1e-4))
    assert weak[2] is None and weak[3] is None
    assert all(t is not None and t < 0.12 for t in strong)


def test_low_frequency_phase_is_small():
    m = build_third_order(_zero_small())
    r = run_tracking(m, ControllerConfig(20.0, 1e-3), DemandSignal.sinusoid(math.radians(3.57), 2.0), 1.5,
                     record_every=1e-3)
    assert abs(math.degrees(measure_phase_delay(None, None, r.demand, result=r, periods=2))) < 2.0


def test_phase_delay_needs_sinusoid():
    with pytest.raises(InvalidParamsError):
        measure_phase_delay(None, ControllerConfig(), DemandSignal.constant(0.0), 1.0)


def test_small_mirror_transition_time():
    plant, cfg, demand = phase_setup("small", 0.0)
    r = run_tracking(plant, cfg, demand, 0.4, record_every=1e-4)
    assert 0.01 <= r.transition_time <= 0.06


@settings(max_examples=5, deadline=None)
@given(target=st.floats(0.0, 5.0))
def test_constant_demand_limit_cycle(target):
    p = _zero_small()
    m = build_third_order(p)
    cfg = ControllerConfig(20.0, 1e-3)
    up = run_tracking(m, cfg, DemandSignal.constant(math.radians(target)), 0.1, record_every=1e-4)
    down = run_tracking(m, cfg, DemandSignal.constant(-math.radians(target)), 0.1, record_every=1e-4)
    # sliding-mode cycle spans a few samples of full-authority travel a*Ts^2
    a = cfg.u0 * build_simplified_second_order(p).B[1]
    assert up.max_error < 5 * a * cfg.Ts_control ** 2
    assert set(np.abs(up.samples["control_levels"])) == {20.0}
    if target > 0:
        assert down.max_error == pytest.approx(up.max_error, rel=1e-9)

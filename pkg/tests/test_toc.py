import json
import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorscan.errors import InvalidParamsError
from mirrorscan.models import actuator, build_simplified_second_order
from mirrorscan.scenarios import TOC_SCENARIOS
from mirrorscan.sim import ExactPropagator, InputSignal, integrate_linear
from mirrorscan.toc import BangBangSolution, ComplexEigenvalueWarning, Solver, TocProblem, certify, solve


@pytest.fixture(scope="module")
def table8():
    sc = TOC_SCENARIOS["table8"]
    return sc.problem(), solve(sc.problem())


def _terminal(problem, sol):
    x = problem.x0
    prop = ExactPropagator(problem.model)
    for u, tau in zip(sol.control_values(), sol.intervals):
        x = prop.propagate(x, u, tau)
    return x


def test_degenerate_target():
    sc = TOC_SCENARIOS["table6"]
    p = TocProblem(sc.model(), np.zeros(3), np.zeros(3), 20.0)
    sol = solve(p)
    assert sol.converged and sol.intervals == () and sol.total_time == 0.0


def test_problem_validation():
    m = TOC_SCENARIOS["table6"].model()
    with pytest.raises(InvalidParamsError):
        TocProblem(m, np.zeros(3), np.ones(3), 0.0)
    with pytest.raises(InvalidParamsError):
        TocProblem(m, np.zeros(3), np.ones(3), 1.0, (1e-6, 1e-6))
    with pytest.raises(InvalidParamsError):
        TocProblem(m, np.zeros(3), np.ones(3), 1.0, (1e-6, 0.0, 1e-6))


def test_solution_alternates_and_meets_accuracy(table8):
    problem, sol = table8
    vals = sol.control_values()
    assert sol.converged and all(a == -b for a, b in zip(vals, vals[1:]))
    assert all(abs(v) == problem.u0 for v in vals)
    err = _terminal(problem, sol) - problem.xf
    assert np.all(np.abs(err) <= problem.accuracy)


def test_rk4_terminal_fidelity(table8):
    problem, sol = table8
    x = problem.x0
    for u, tau in zip(sol.control_values(), sol.intervals):
        n = max(1, int(round(tau / 1e-7)))
        s = integrate_linear(problem.model, x, InputSignal.step(u), tau / n, tau)
        x = np.array([s[c][-1] for c in ("phi", "omega", "i")])
    assert np.all(np.abs(x - problem.xf) <= 2 * np.asarray(problem.accuracy) + 1e-12)


def test_certificate_of_solution(table8):
    problem, sol = table8
    cert = certify(problem, sol)
    assert cert.sign_match and max(abs(r) for r in cert.switch_residuals) <= 1e-9


def test_certify_requires_converged(table8):
    problem, sol = table8
    bad = replace(sol, intervals=tuple(1.1 * t for t in sol.intervals), converged=False)
    with pytest.raises(InvalidParamsError):
        certify(problem, bad)


def test_json_round_trip(table8):
    problem, sol = table8
    back = BangBangSolution.from_dict(json.loads(sol.to_json()), u0=problem.u0)
    assert back == sol


def test_control_lookup(table8):
    _, sol = table8
    assert sol.control(0.0) == sol.initial_sign * sol.u0
    assert sol.control(sol.switch_times[0]) == -sol.initial_sign * sol.u0
    assert sol.control(sol.total_time + 1e-3) == 0.0 and sol.control(-1.0) == 0.0


def test_scaling_covariance():
    sc = TOC_SCENARIOS["table6"]
    base = solve(sc.problem())
    p = sc.problem()
    scaled = TocProblem(p.model, p.x0, 2 * p.xf, 2 * p.u0, tuple(2 * a for a in p.accuracy))
    sol = solve(scaled)
    assert sol.intervals == pytest.approx(base.intervals, abs=1e-6)


def test_more_authority_is_faster():
    slow = solve(TOC_SCENARIOS["table7"].problem())
    fast = solve(TOC_SCENARIOS["table8"].problem())
    assert fast.total_time < slow.total_time


def test_complex_eigenvalues_warn():
    m = build_simplified_second_order(actuator("large"))
    p = TocProblem(m, [0, 0], [math.radians(1.0), 0], 10.0, (1e-6, 1e-4))
    with pytest.warns(ComplexEigenvalueWarning):
        Solver(m).solve(p)


def test_solver_rejects_other_model():
    a = TOC_SCENARIOS["table7"]
    b = TOC_SCENARIOS["table5"]
    with pytest.raises(InvalidParamsError):
        Solver(a.model()).solve(b.problem())


def test_deterministic(table8):
    problem, sol = table8
    assert solve(problem).to_json() == sol.to_json()


@settings(max_examples=15, deadline=None)
@given(target=st.floats(0.2, 5.0), sign=st.sampled_from([-1, 1]))
def test_random_targets_converge_with_alternating_plan(target, sign):
    sc = TOC_SCENARIOS["table8"]
    xf = np.array([sign * math.radians(target), 0.0, 0.0])
    p = TocProblem(sc.model(), np.zeros(3), xf, 20.0, (math.radians(1e-6), math.radians(1e-4), 1e-6))
    sol = solve(p)
    assert sol.converged and sol.n_intervals <= 3
    assert sol.initial_sign == sign
    assert np.all(np.abs(_terminal(p, sol) - xf) <= p.accuracy)

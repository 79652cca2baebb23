"""Digital tracking loop built on repeated time-optimal solves.

Every control period the loop reads the full plant state, optionally
predicts it one period ahead with the linear model, solves the transfer to
the held demand and applies the first bang-bang level. The computation
occupies one period, so the level chosen at sample ``k`` acts on
``[t_{k+1}, t_{k+2})``; the prediction compensates exactly that delay.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .errors import InvalidParamsError, MismatchedGridsError, NotSteadyError
from .models import ActuatorParams, LinearModel
from .sim import FrictionPlant, LinearPlant, TimeSeries
from .toc import BangBangSolution, Solver, TocProblem, default_accuracy

__all__ = [
    "ControllerConfig",
    "DemandSignal",
    "FrictionPlantSpec",
    "TrackingResult",
    "Comparison",
    "run_tracking",
    "compare_runs",
    "measure_phase_delay",
    "shift_solution",
]

log = logging.getLogger(__name__)

TARGET_MODES = ("position_only", "position_velocity")


@dataclass(frozen=True)
class ControllerConfig:
    """Sampling, bound and prediction settings of the tracking controller."""

    u0: float = 20.0
    Ts_control: float = 1e-3
    Ts_demand: Optional[float] = None
    prediction: bool = True
    target_mode: str = "position_only"
    phase_shift: float = 0.0
    accuracy: tuple = ()
    idle_start: bool = False

    def __post_init__(self):
        if not self.u0 > 0:
            raise InvalidParamsError("u0 must be > 0")
        if not self.Ts_control > 0:
            raise InvalidParamsError("Ts_control must be > 0")
        if self.Ts_demand is None:
            object.__setattr__(self, "Ts_demand", self.Ts_control)
        ratio = self.Ts_demand / self.Ts_control
        if self.Ts_demand < self.Ts_control or abs(ratio - round(ratio)) > 1e-9:
            raise InvalidParamsError("Ts_demand must be an integer multiple of Ts_control")
        if self.target_mode not in TARGET_MODES:
            raise InvalidParamsError(f"target_mode must be one of {TARGET_MODES}")

    @property
    def demand_ratio(self) -> int:
        return int(round(self.Ts_demand / self.Ts_control))


@dataclass(frozen=True)
class DemandSignal:
    """Reference angle in radians: constant, square (50% duty, high first) or sinusoid."""

    kind: str
    amplitude: float
    frequency: float = 0.0
    phase: float = 0.0
    waveform: str = "cos"

    def __post_init__(self):
        if self.kind not in ("constant", "square", "sinusoid"):
            raise InvalidParamsError(f"unknown demand kind {self.kind!r}")
        if self.kind != "constant" and not self.frequency > 0:
            raise InvalidParamsError("periodic demands need frequency > 0")
        if self.waveform not in ("cos", "sin", "-sin"):
            raise InvalidParamsError("waveform must be 'cos', 'sin' or '-sin'")

    @classmethod
    def constant(cls, value):
        return cls("constant", value)

    @classmethod
    def sinusoid(cls, amplitude, frequency, phase=0.0, waveform="cos"):
        return cls("sinusoid", amplitude, frequency, phase, waveform)

    @classmethod
    def square(cls, amplitude, frequency, phase=0.0):
        return cls("square", amplitude, frequency, phase)

    def value(self, t, shift: float = 0.0):
        """Demand at ``t``; ``shift`` advances the phase (radians)."""
        if self.kind == "constant":
            return self.amplitude + 0.0 * np.asarray(t, dtype=float)
        arg = 2 * math.pi * self.frequency * np.asarray(t, dtype=float) + self.phase + shift
        if self.kind == "square":
            frac = np.mod(arg / (2 * math.pi), 1.0)
            return np.where(frac < 0.5, self.amplitude, -self.amplitude)
        if self.waveform == "cos":
            return self.amplitude * np.cos(arg)
        if self.waveform == "sin":
            return self.amplitude * np.sin(arg)
        return -self.amplitude * np.sin(arg)

    def rate(self, t, shift: float = 0.0):
        if self.kind != "sinusoid":
            return 0.0 * np.asarray(t, dtype=float)
        om = 2 * math.pi * self.frequency
        arg = om * np.asarray(t, dtype=float) + self.phase + shift
        if self.waveform == "cos":
            return -self.amplitude * om * np.sin(arg)
        if self.waveform == "sin":
            return self.amplitude * om * np.cos(arg)
        return -self.amplitude * om * np.cos(arg)


@dataclass(frozen=True)
class FrictionPlantSpec:
    """Third-order model plus the mechanical constants the friction plant needs."""

    model: LinearModel
    params: ActuatorParams
    Tc: Optional[float] = None
    dt: float = 1e-5


@dataclass(frozen=True)
class TrackingResult:
    """Closed-loop run.

    ``accuracy_achieved`` is the deviation of the steady output peaks from
    the demand amplitude for sinusoidal demands and the steady
    ``max |phi - phi_d|`` otherwise; ``max_error`` is always the latter.
    Both are in radians.
    """

    series: TimeSeries
    accuracy_achieved: float
    max_error: float
    transition_time: float
    steady_start: float
    samples: dict = field(default_factory=dict)
    demand: Optional[DemandSignal] = None
    config: Optional[ControllerConfig] = None


@dataclass(frozen=True)
class Comparison:
    t: np.ndarray
    difference: np.ndarray
    max_abs: float
    steady_max_abs: float


def shift_solution(sol: BangBangSolution, dt: float) -> Optional[BangBangSolution]:
    """Drop the first ``dt`` seconds of a bang-bang plan."""
    if sol is None or not sol.intervals:
        return None
    ints = list(sol.intervals)
    sign = sol.initial_sign
    rem = dt
    while ints and ints[0] <= rem:
        rem -= ints.pop(0)
        sign = -sign
    if not ints:
        return None
    ints[0] -= rem
    return BangBangSolution(sign, tuple(ints), float(sum(ints)), sol.terminal_error, False, sol.u0)


def _held_times(t, Ts_demand):
    """Start of the demand sample that covers ``t``."""
    return np.floor(np.asarray(t) / Ts_demand + 1e-9) * Ts_demand


def _steady_window(duration: float, demand: DemandSignal) -> float:
    start = 0.5 * duration
    if demand.kind != "constant":
        # align the window to whole periods counted back from the end
        P = 1.0 / demand.frequency
        n = max(1, int(math.floor((duration - start) / P + 1e-9)))
        start = duration - n * P
    return start


def run_tracking(plant: Union[LinearModel, FrictionPlantSpec], config: ControllerConfig,
                 demand: DemandSignal, duration: float, x0=None, J: float = 1.0,
                 record_every: Optional[float] = None, steady_threshold: Optional[float] = None) -> TrackingResult:
    """Simulate the sampled tracking loop for ``duration`` seconds.

    ``plant`` is either a linear model (advanced exactly over each held
    level) or a :class:`FrictionPlantSpec` (hybrid stick/slip integration).
    The embedded solver always uses the linear model. Samples where the
    solver fails hold the previous level and are counted in
    ``samples["failures"]``.
    """
    friction = isinstance(plant, FrictionPlantSpec)
    model = plant.model if friction else plant
    if model.order not in (2, 3):
        raise InvalidParamsError("plant order must be 2 or 3")
    n = model.order
    Ts = config.Ts_control
    N = int(round(duration / Ts))
    acc = tuple(config.accuracy) or default_accuracy(n)
    solver = Solver(model)
    prop = solver.prop
    x = np.zeros(n) if x0 is None else np.array(x0, dtype=float)

    if friction:
        fp = FrictionPlant(model, plant.params, plant.Tc)
        J = plant.params.J
        inner = max(1, int(round(Ts / plant.dt)))
        state = (*x, None)
    else:
        lp = LinearPlant(model, J)
        inner = max(1, int(round(Ts / (record_every or Ts / 10))))
        inner = max(inner, 10) if record_every is None else inner
    h = Ts / inner
    if record_every is not None:
        keep = max(1, int(round(record_every / h)))
    else:
        keep = 1

    A = np.array(model.A)
    rows_t, rows_x, rows_u, rows_extra = [], [], [], []
    n_fail = 0
    n_relay = 0
    d0 = float(demand.value(0.0, config.phase_shift))
    sign = 1 if d0 >= x[0] else -1
    u_now = 0.0 if config.idle_start else sign * config.u0
    warm = None
    ctrl_levels = np.empty(N)

    for k in range(N):
        tk = k * Ts
        xp = prop.propagate(x, u_now, Ts) if config.prediction else x.copy()
        phi_d = float(demand.value(_held_times(tk, config.Ts_demand), config.phase_shift))
        target = np.zeros(n)
        target[0] = phi_d
        if config.target_mode == "position_velocity":
            target[1] = float(demand.rate(_held_times(tk, config.Ts_demand), config.phase_shift))
        sol =solver.solve(TocProblem(model, xp, target, config.u0, acc), warm=warm, exhaustive=False)
        if sol.converged and sol.intervals:
            new_sign = sol.initial_sign
            warm = shift_solution(sol, Ts)
        elif sol.converged:
            # already at the target: relay on the velocity error
            verr = xp[1] - target[1]
            new_sign = -int(np.sign(verr)) if verr != 0 else (1 if u_now > 0 else -1)
            n_relay += 1
            warm = None
        else:
            new_sign = 1 if u_now > 0 else -1
            n_fail += 1
            warm = None

        # the level decided now acts over the next period
        if friction:
            xs_rows, state = fp.run(state[:3], lambda t, v=u_now: v, h, inner, t0=tk, stuck0=state[3])
            x = np.array(state[:3])
            xs = xs_rows[:, :3]
            extra = xs_rows[:, 4:8]
        else:
            xs = lp.run_constant(x, u_now, h, inner)
            x = xs[-1].copy()
            T_RL = J * (xs @ A[1])
            extra = np.column_stack([T_RL, np.zeros_like(T_RL), T_RL, np.zeros_like(T_RL)])
        start = 0 if k == 0 else 1
        idx = np.arange(start, inner + 1)
        idx = idx[(idx + k * inner) % keep == 0]
        rows_t.append(tk + idx * h)
        rows_x.append(xs[idx])
        rows_u.append(np.full(len(idx), u_now))
        rows_extra.append(extra[idx])
        ctrl_levels[k] = u_now
        u_now = new_sign * config.u0

    t = np.concatenate(rows_t)
    X = np.vstack(rows_x)
    E = np.vstack(rows_extra)
    cols = {"phi": X[:, 0], "omega": X[:, 1]}
    if n == 3:
        cols["i"] = X[:, 2]
    cols["u"] = np.concatenate(rows_u)
    cols.update(T_RL=E[:, 0], T_CF=E[:, 1], T_R=E[:, 2], stick=E[:, 3])
    phi_d = demand.value(_held_times(t, config.Ts_demand), config.phase_shift)
    cols["phi_demand"] = np.asarray(phi_d, dtype=float)
    dt_rec = float(t[1] - t[0]) if len(t) > 1 else Ts
    series = TimeSeries(dt_rec, 0.0, cols)

    steady = _steady_window(duration, demand)
    err = cols["phi"] - cols["phi_demand"]
    mask = t >= steady - 1e-12
    max_err = float(np.max(np.abs(err[mask]))) if mask.any() else math.nan
    if demand.kind == "sinusoid":
        accuracy = float(abs(np.max(np.abs(cols["phi"][mask])) - abs(demand.amplitude)))
    else:
        accuracy = max_err
    thr = steady_threshold if steady_threshold is not None else 1.05 * max_err
    above = np.nonzero(np.abs(err) > thr)[0]
    transition = float(t[above[-1]]) if len(above) else 0.0
    info = {"failures": n_fail, "relay": n_relay, "control_levels": ctrl_levels}
    return TrackingResult(series, accuracy, max_err, transition, steady, info, demand, config)


def compare_runs(a: TrackingResult, b: TrackingResult) -> Comparison:
    """Pointwise angle difference ``a - b`` on a shared grid."""
    ta, tb = a.series.t, b.series.t
    if len(ta) != len(tb) or abs(a.series.dt - b.series.dt) > 1e-12:
        raise MismatchedGridsError("runs differ in sampling or duration")
    d = a.series["phi"] - b.series["phi"]
    steady = max(a.steady_start, b.steady_start)
    m = ta >= steady - 1e-12
    return Comparison(ta, d, float(np.max(np.abs(d))), float(np.max(np.abs(d[m]))))


def _crossings(t, y):
    """Zero crossings of ``y`` by linear interpolation, with their direction (+1 rising)."""
    s = np.sign(y)
    k = np.nonzero((s[:-1] != s[1:]) & (s[:-1] != 0))[0]
    tc = t[k] - y[k] * (t[k + 1] - t[k]) / (y[k + 1] - y[k])
    return tc, np.sign(y[k + 1] - y[k])


def measure_phase_delay(plant, config: ControllerConfig, demand: DemandSignal,
                        duration: Optional[float] = None, result: Optional[TrackingResult] = None,
                        periods: int = 4, method: str = "zero_crossing") -> float:
    """Phase of the steady output relative to the unshifted demand [rad].

    Negative values mean the output lags. ``method="zero_crossing"`` averages
    the time shift between matching zero crossings of output and demand;
    ``"correlation"`` compares the fundamentals. The two differ when the
    output is not a pure sinusoid. Both use the last ``periods`` whole periods.
    """
    if demand.kind != "sinusoid":
        raise InvalidParamsError("phase delay needs a sinusoidal demand")
    if method not in ("zero_crossing", "correlation"):
        raise InvalidParamsError("method must be 'zero_crossing' or 'correlation'")
    if result is None:
        if duration is None:
            duration = (periods + 4) / demand.frequency
        result = run_tracking(plant, config, demand, duration)
    s = result.series
    P = 1.0 / demand.frequency
    om = 2 * math.pi * demand.frequency
    t_end = s.t[-1]
    if result.transition_time > t_end - periods * P:
        raise NotSteadyError("the run does not settle before the correlation window")
    m = s.t >= t_end - periods * P - 1e-12
    t = s.t[m][:-1]
    y = s["phi"][m][:-1]
    ref = demand.value(t)
    if method == "correlation":
        z_out = np.sum(y * np.exp(-1j * om * t))
        z_ref = np.sum(ref * np.exp(-1j * om * t))
        return float(np.angle(z_out / z_ref))
    ty, dy = _crossings(t, y)
    tr, dr = _crossings(t, ref)
    shifts = []
    for tc, d in zip(ty, dy):
        # nearest demand crossing in the same direction
        cand = tr[dr == d]
        if len(cand):
            shifts.append(tc - cand[np.argmin(np.abs(cand - tc))])
    if not shifts:
        raise NotSteadyError("no matching zero crossings in the window")
    return float(-om * np.mean(shifts))

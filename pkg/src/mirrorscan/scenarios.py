"""Named reference scenarios with their expected results and tolerances.

Shared by the command line ``reproduce`` targets, the acceptance suite and
the demos, so every consumer checks the same numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .models import CALIBRATED_TC, actuator, apply_correction, build_simplified_second_order, build_third_order
from .toc import TocProblem
from .tracking import ControllerConfig, DemandSignal, FrictionPlantSpec

__all__ = [
    "TocScenario",
    "TOC_SCENARIOS",
    "TrackingScenario",
    "SMALL_TRACKING",
    "LARGE_DIFFERENCES",
    "PHASE_SHIFTS_DEG",
    "PHASE_TOLERANCE_DEG",
    "SYNC_ROW",
    "scan_controllers",
    "phase_setup",
]


@dataclass(frozen=True)
class TocScenario:
    """Rest-to-rest positioning problem with its expected bang-bang plan."""

    name: str
    actuator: str
    correction: str
    order: int
    u0: float
    target_deg: float
    expected_intervals: tuple
    expected_total: float
    accuracy_deg: tuple  # (deg, deg/s[, A])
    tolerance: float = 2e-4

    def model(self):
        p = apply_correction(actuator(self.actuator), self.correction)
        return build_third_order(p) if self.order == 3 else build_simplified_second_order(p)

    def problem(self) -> TocProblem:
        acc = [math.radians(self.accuracy_deg[0]), math.radians(self.accuracy_deg[1])]
        if self.order == 3:
            acc.append(self.accuracy_deg[2])
        xf = np.zeros(self.order)
        xf[0] = math.radians(self.target_deg)
        return TocProblem(self.model(), np.zeros(self.order), xf, self.u0, tuple(acc))


TOC_SCENARIOS = {
    "table3": TocScenario("table3", "large", "damping_x10", 2, 10.0, 8.35,
                          (0.12713, 0.00652), 0.13365, (3.521e-5, 0.0012)),
    "table3_order3": TocScenario("table3_order3", "large", "damping_x10", 3, 10.0, 8.35,
                                 (0.12715, 0.00685, 0.00042), 0.13441, (7e-8, 2e-6, 2e-6)),
    "table4_order2": TocScenario("table4_order2", "large", "damping_x10", 2, 20.0, 8.35,
                                 (0.061457, 0.010919), 0.072377, (2e-8, 5e-6)),
    "table4": TocScenario("table4", "large", "damping_x10", 3, 20.0, 8.35,
                          (0.061453, 0.011276, 0.000417), 0.073145, (2e-8, 5e-6, 3e-6)),
    "table5": TocScenario("table5", "large", "zero_pivot_stiffness", 3, 10.0, 8.35,
                          (0.04967, 0.038238, 0.00041643), 0.088324, (1e-7, 2e-5, 1e-5)),
    "table6": TocScenario("table6", "large", "zero_pivot_stiffness", 3, 20.0, 8.35,
                          (0.033801, 0.028293, 0.00041642), 0.062511, (1e-6, 2e-4, 5e-5)),
    "table7": TocScenario("table7", "small", "zero_pivot_stiffness", 3, 10.0, 3.57,
                          (0.014428, 0.008131, 0.000420), 0.022978, (7e-10, 1.5e-6, 8.5e-8)),
    "table8": TocScenario("table8", "small", "zero_pivot_stiffness", 3, 20.0, 3.57,
                          (0.009388, 0.006449, 0.000420), 0.016257, (3.5e-10, 9e-7, 6.5e-8)),
}


def _zero_stiffness(name: str, Tc: float = CALIBRATED_TC):
    return replace(apply_correction(actuator(name), "zero_pivot_stiffness"), Tc=Tc)


def _demand(name: str, shift_deg: float = 0.0) -> DemandSignal:
    if name == "large":
        return DemandSignal.sinusoid(math.radians(8.35), 2.5)
    return DemandSignal.sinusoid(math.radians(3.57), 20.0, waveform="-sin")


@dataclass(frozen=True)
class TrackingScenario:
    """Zero-stiffness mirror tracking its scan sinusoid."""

    name: str
    mirror: str
    friction: bool
    config: ControllerConfig
    duration: float
    expected_deg: Optional[float] = None

    def plant(self):
        p = _zero_stiffness(self.mirror)
        m = build_third_order(p)
        return FrictionPlantSpec(m, p) if self.friction else m

    @property
    def J(self) -> float:
        return _zero_stiffness(self.mirror).J

    def demand(self) -> DemandSignal:
        return _demand(self.mirror)


# small mirror, 20 Hz, 3.57 deg, u0 = 20 V; expected steady accuracy in degrees
SMALL_TRACKING = {
    "linear_0.1ms": TrackingScenario("linear_0.1ms", "small", False, ControllerConfig(20.0, 1e-4), 0.3, 0.0217),
    "linear_1ms": TrackingScenario("linear_1ms", "small", False, ControllerConfig(20.0, 1e-3), 0.5, 0.1181),
    "friction_1ms": TrackingScenario("friction_1ms", "small", True, ControllerConfig(20.0, 1e-3), 0.5, 0.0775),
    "friction_4ms_1ms": TrackingScenario("friction_4ms_1ms", "small", True,
                                         ControllerConfig(20.0, 1e-3, 4e-3), 0.5, 0.1759),
    "linear_4ms": TrackingScenario("linear_4ms", "small", False, ControllerConfig(20.0, 4e-3), 0.5),
}


def _large(u0: float, Ts: float, Tsd: Optional[float] = None) -> TrackingScenario:
    name = f"large_u{int(u0)}_{Ts * 1e3:g}ms" + (f"_{Tsd * 1e3:g}ms" if Tsd else "")
    return TrackingScenario(name, "large", True, ControllerConfig(u0, Ts, Tsd), 1.2)


# (two-rate run, reference run, expected steady bound deg, expected max deg or None)
LARGE_DIFFERENCES = (
    (_large(10.0, 1e-3, 4e-3), _large(10.0, 1e-3), 0.46, None),
    (_large(20.0, 1e-3, 4e-3), _large(20.0, 1e-3), 0.35, None),
    (_large(20.0, 1e-3, 4e-3), _large(20.0, 4e-3), 0.42, 1.24),
)

PHASE_SHIFTS_DEG = {"large": 9.58, "small": 49.11}
PHASE_TOLERANCE_DEG = 1.5

# synchronized scan sample at t = 1.0 s: (phi_lm, phi_sm) in degrees
SYNC_ROW = (1.0, -8.152, 0.100)


def phase_setup(mirror: str, shift: bool = False):
    """Fast-sampled (0.1 ms) friction loop with the demand held every 4 ms."""
    p = _zero_stiffness(mirror)
    cfg = ControllerConfig(20.0, 1e-4, 4e-3, phase_shift=math.radians(PHASE_SHIFTS_DEG[mirror]) if shift else 0.0)
    return FrictionPlantSpec(build_third_order(p), p), cfg, _demand(mirror)


def scan_controllers(shift: bool = False):
    """Tracking loops used for the scan: large mirror at 4 ms, small mirror at 4 ms / 1 ms."""
    out = {}
    for mirror, cfg in (("large", ControllerConfig(20.0, 4e-3)), ("small", ControllerConfig(20.0, 1e-3, 4e-3))):
        if shift:
            cfg = replace(cfg, phase_shift=math.radians(PHASE_SHIFTS_DEG[mirror]))
        p = _zero_stiffness(mirror)
        out[mirror] = (FrictionPlantSpec(build_third_order(p), p), cfg, _demand(mirror))
    return out

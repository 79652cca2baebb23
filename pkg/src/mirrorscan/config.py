"""Flat ``key=value`` run configuration with dot-namespaced keys."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

from .errors import ConfigError, InvalidParamsError, UnsupportedCombinationError
from .models import CALIBRATED_TC, CORRECTIONS, actuator, apply_correction, build_simplified_second_order, build_third_order
from .scan import FITTED_SEPARATION, ScanConfig
from .tracking import ControllerConfig, DemandSignal, FrictionPlantSpec

__all__ = ["RunConfig", "load_config", "parse_config", "KEYS"]

PLANTS = ("linear2", "linear3", "friction3")

# mirror-specific demand used when the demand keys are left at "auto"
MIRROR_DEMAND = {
    "large": (8.35, 2.5, "cos"),
    "small": (3.57, 20.0, "-sin"),
}


@dataclass(frozen=True)
class RunConfig:
    """Everything a CLI scenario needs; angles in degrees, times in seconds."""

    actuator: str = "large"
    correction: str = "zero_pivot_stiffness"
    plant: str = "friction3"
    tc_nm: float = CALIBRATED_TC
    plant_dt_s: float = 1e-5
    u0_volts: float = 20.0
    ts_control_s: float = 1e-3
    ts_demand_s: Optional[float] = None
    prediction: bool = True
    target_mode: str = "position_only"
    phase_shift_deg: float = 0.0
    demand_kind: str = "sinusoid"
    demand_amplitude_deg: Optional[float] = None
    demand_frequency_hz: Optional[float] = None
    demand_waveform: Optional[str] = None
    duration_s: float = 0.4
    scan_range_m: float = 200.0
    scan_separation_m: float = FITTED_SEPARATION
    scan_sample_period_s: float = 0.004
    output_csv: Optional[str] = None
    output_dir: Optional[str] = None

    def __post_init__(self):
        if self.actuator not in ("large", "small"):
            raise InvalidParamsError("actuator must be 'large' or 'small'")
        if self.correction not in CORRECTIONS:
            raise InvalidParamsError(f"correction must be one of {CORRECTIONS}")
        if self.plant not in PLANTS:
            raise InvalidParamsError(f"plant must be one of {PLANTS}")
        if self.plant == "linear2" and self.correction == "zero_pivot_stiffness":
            raise UnsupportedCombinationError("the zero-stiffness model is third order only")
        if self.tc_nm < 0:
            raise InvalidParamsError("tc_nm must be >= 0")

    def params(self):
        return replace(apply_correction(actuator(self.actuator), self.correction), Tc=self.tc_nm)

    def model(self):
        p = self.params()
        return build_simplified_second_order(p) if self.plant == "linear2" else build_third_order(p)

    def plant_object(self):
        """Linear model or friction plant spec for :func:`run_tracking`."""
        if self.plant == "friction3":
            return FrictionPlantSpec(self.model(), self.params(), self.tc_nm, self.plant_dt_s)
        return self.model()

    def controller(self) -> ControllerConfig:
        return ControllerConfig(
            u0=self.u0_volts,
            Ts_control=self.ts_control_s,
            Ts_demand=self.ts_demand_s,
            prediction=self.prediction,
            target_mode=self.target_mode,
            phase_shift=math.radians(self.phase_shift_deg),
        )

    def demand(self) -> DemandSignal:
        amp, freq, wave = MIRROR_DEMAND[self.actuator]
        amp = amp if self.demand_amplitude_deg is None else self.demand_amplitude_deg
        freq = freq if self.demand_frequency_hz is None else self.demand_frequency_hz
        wave = wave if self.demand_waveform is None else self.demand_waveform
        if self.demand_kind == "constant":
            return DemandSignal.constant(math.radians(amp))
        if self.demand_kind == "square":
            return DemandSignal.square(math.radians(amp), freq)
        return DemandSignal.sinusoid(math.radians(amp), freq, waveform=wave)

    def scan(self) -> ScanConfig:
        return ScanConfig(range_m=self.scan_range_m, mirror_separation_m=self.scan_separation_m,
                          sample_period=self.scan_sample_period_s)


# file key -> RunConfig field
KEYS = {
    "actuator.name": "actuator",
    "actuator.correction": "correction",
    "actuator.tc_nm": "tc_nm",
    "plant.kind": "plant",
    "plant.dt_s": "plant_dt_s",
    "controller.u0_volts": "u0_volts",
    "controller.ts_control_s": "ts_control_s",
    "controller.ts_demand_s": "ts_demand_s",
    "controller.prediction": "prediction",
    "controller.target_mode": "target_mode",
    "controller.phase_shift_deg": "phase_shift_deg",
    "demand.kind": "demand_kind",
    "demand.amplitude_deg": "demand_amplitude_deg",
    "demand.frequency_hz": "demand_frequency_hz",
    "demand.waveform": "demand_waveform",
    "run.duration_s": "duration_s",
    "scan.range_m": "scan_range_m",
    "scan.separation_m": "scan_separation_m",
    "scan.sample_period_s": "scan_sample_period_s",
    "output.csv": "output_csv",
    "output.dir": "output_dir",
}

_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _convert(name: str, text: str):
    kind = _TYPES[name]
    if "Optional" in kind and text.lower() in ("", "auto", "none"):
        return None
    if "bool" in kind:
        low = text.lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"not a boolean: {text!r}")
    if "float" in kind:
        return float(text)
    return text


def parse_config(text: str, base: Optional[RunConfig] = None) -> RunConfig:
    """Apply ``key=value`` lines from ``text`` on top of ``base`` (defaults if omitted)."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected key=value, got {raw.strip()!r}", lineno)
        key, val = (part.strip() for part in line.split("=", 1))
        if key not in KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno)
        try:
            values[KEYS[key]] = _convert(KEYS[key], val)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key}: {exc}", lineno) from None
    try:
        return replace(base or RunConfig(), **values)
    except (InvalidParamsError, UnsupportedCombinationError) as exc:
        raise ConfigError(str(exc)) from None


def load_config(path) -> RunConfig:
    """Read a configuration file; missing keys keep their defaults."""
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {p}")
    return parse_config(p.read_text())

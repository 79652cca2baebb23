"""Two-mirror scan geometry: angles to plane coordinates, ideal patterns, passes.

The beam is deflected by the large (horizontal) mirror and then by the small
(vertical) mirror. Reflection doubles each mirror angle; the vertical
deflection acts over the slant path to the plane plus the separation between
the two mirror axes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import least_squares

from .errors import DegenerateFitError, InsufficientDataError, InvalidParamsError, OutOfRangeError

__all__ = [
    "ScanConfig",
    "ScanSample",
    "Pass",
    "FITTED_SEPARATION",
    "angles_to_plane",
    "calibrate_separation",
    "ideal_angles",
    "generate_scan",
    "samples_from_rows",
    "flatten",
]

# least-squares separation [m] against the embedded ideal scan table
FITTED_SEPARATION = 0.316264

PASS_DURATION = 0.2


@dataclass(frozen=True)
class ScanConfig:
    """Scan-plane geometry and the two mirror drive signals.

    Angles and amplitudes are in radians, distances in metres.
    """

    range_m: float = 200.0
    mirror_separation_m: float = FITTED_SEPARATION
    sample_period: float = 0.004
    amplitude_lm: float = math.radians(8.35)
    amplitude_sm: float = math.radians(3.57)
    frequency_lm: float = 2.5
    frequency_sm: float = 20.0

    def __post_init__(self):
        if not self.range_m > 0:
            raise InvalidParamsError("range_m must be > 0")
        if not self.mirror_separation_m >= 0:
            raise InvalidParamsError("mirror_separation_m must be >= 0")
        if not self.sample_period > 0:
            raise InvalidParamsError("sample_period must be > 0")
        if not (self.frequency_lm > 0 and self.frequency_sm > 0):
            raise InvalidParamsError("frequencies must be > 0")


@dataclass(frozen=True)
class ScanSample:
    """One scan row: time [s], mirror angles [deg], plane position [m]."""

    t: float
    phi_lm: float
    phi_sm: float
    x: float
    y: float

    def as_tuple(self) -> tuple:
        return (self.t, self.phi_lm, self.phi_sm, self.x, self.y)


@dataclass(frozen=True)
class Pass:
    """A half period of the large mirror; odd and even passes sweep in opposite directions."""

    index: int
    samples: tuple = field(default_factory=tuple)

    @property
    def parity(self) -> str:
        return "odd" if self.index % 2 else "even"


def angles_to_plane(phi_lm, phi_sm, config: ScanConfig = ScanConfig()):
    """Plane coordinates ``(x, y)`` in metres for mirror angles in radians.

    Accepts scalars or arrays. Raises :class:`OutOfRangeError` when a doubled
    angle reaches 90 degrees.
    """
    a = 2 * np.asarray(phi_lm, dtype=float)
    b = 2 * np.asarray(phi_sm, dtype=float)
    if np.any(np.abs(a) >= math.pi / 2) or np.any(np.abs(b) >= math.pi / 2):
        raise OutOfRangeError("doubled mirror angle must stay below 90 degrees")
    R, d = config.range_m, config.mirror_separation_m
    x = R * np.tan(a)
    y = (R / np.cos(a) + d) * np.tan(b)
    if x.ndim == 0:
        return float(x), float(y)
    return x, y


def calibrate_separation(samples: Sequence[ScanSample], range_m: float = 200.0):
    """Least-squares mirror separation from tabulated samples.

    Returns ``(d, rms)`` where ``rms`` is the vertical residual in metres.
    The model is linear in ``d``; the bounded fit keeps it non-negative.
    """
    if len(samples) < 10:
        raise InsufficientDataError("need at least 10 samples")
    arr = np.array([s.as_tuple() for s in samples], dtype=float)
    a = 2 * np.radians(arr[:, 1])
    tb = np.tan(2 * np.radians(arr[:, 2]))
    if np.all(np.abs(tb) < 1e-12):
        raise DegenerateFitError("small-mirror angles are all zero; separation is unobservable")
    base = range_m / np.cos(a) * tb
    resid = arr[:, 4] - base
    fit = least_squares(lambda d: tb * d[0] - resid, x0=[0.0], bounds=([0.0], [np.inf]), xtol=1e-15, ftol=1e-15)
    d = float(fit.x[0])
    rms = float(np.sqrt(np.mean((tb * d - resid) ** 2)))
    return d, rms


def ideal_angles(t, config: ScanConfig = ScanConfig()):
    """Mirror angles in radians: cosine on the large mirror, negative sine on the small one."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise InvalidParamsError("t must be >= 0")
    lm = config.amplitude_lm * np.cos(2 * math.pi * config.frequency_lm * t)
    sm = -config.amplitude_sm * np.sin(2 * math.pi * config.frequency_sm * t)
    if t.ndim == 0:
        return float(lm), float(sm)
    return lm, sm


def samples_from_rows(rows) -> list:
    """Convert ``(t, phi_lm_deg, phi_sm_deg, x, y)`` rows to :class:`ScanSample`."""
    return [ScanSample(*map(float, r)) for r in rows]


def _cut_passes(t, lm, sm, config: ScanConfig) -> list:
    x, y = angles_to_plane(lm, sm, config)
    samples = [ScanSample(float(a), math.degrees(b), math.degrees(c), float(d), float(e))
               for a, b, c, d, e in zip(t, lm, sm, x, y)]
    passes = []
    per = int(round(PASS_DURATION / config.sample_period))
    n_pass = int(math.ceil((len(samples) - 1) / per)) if len(samples) > 1 else 0
    for k in range(n_pass):
        # boundary samples belong to both neighbouring passes
        passes.append(Pass(k + 1, tuple(samples[k * per:(k + 1) * per + 1])))
    return passes


def generate_scan(config: ScanConfig = ScanConfig(), duration: float = 0.4, source: str = "ideal",
                  tracked: Optional[tuple] = None) -> list:
    """Scan samples every ``sample_period``, cut into 0.2 s passes.

    ``source`` is ``"ideal"`` or ``"tracked"``; the latter reads the angles
    from ``tracked = (large_result, small_result)`` tracking runs at the
    sample instants.
    """
    if duration < 0:
        raise InvalidParamsError("duration must be >= 0")
    n = int(math.floor(duration / config.sample_period + 1e-9))
    if n == 0:
        return []
    t = np.arange(n + 1) * config.sample_period
    if source == "ideal":
        lm, sm = ideal_angles(t, config)
    elif source == "tracked":
        if tracked is None:
            raise InsufficientDataError("tracked source needs (large, small) tracking results")
        large, small = tracked
        for res in (large, small):
            if res.series.t[-1] < t[-1] - 1e-9:
                raise InsufficientDataError("tracking run shorter than the scan duration")
        lm = np.array([large.series.value_at("phi", v) for v in t])
        sm = np.array([small.series.value_at("phi", v) for v in t])
    else:
        raise InvalidParamsError(f"unknown scan source {source!r}")
    return _cut_passes(t, lm, sm, config)


def flatten(passes: Sequence[Pass]) -> list:
    """All samples of consecutive passes without duplicated boundaries."""
    out = []
    for p in passes:
        out.extend(p.samples if not out else p.samples[1:])
    return out

"""Linear models of the limited angle torquer (LAT) mirror actuators.

State vector of the full model is ``(phi, omega, i)``: mirror angle [rad],
angular velocity [rad/s] and coil current [A]. The input is the coil
voltage [V]. The simplified model drops the electrical pole and keeps
``(phi, omega)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .errors import InvalidParamsError, SingularFrequencyError, UnsupportedCombinationError

__all__ = [
    "ActuatorParams",
    "LinearModel",
    "TransferFunction",
    "ModalAnalysis",
    "SMALL_MIRROR",
    "LARGE_MIRROR",
    "CORRECTIONS",
    "CALIBRATED_TC",
    "build_third_order",
    "build_simplified_second_order",
    "transfer_function",
    "modal_analysis",
    "bode_point",
    "apply_correction",
    "eigenvalues",
    "time_constant_ratio",
    "actuator",
]


@dataclass(frozen=True)
class ActuatorParams:
    """Physical constants of one LAT actuator.

    Attributes
    ----------
    c : pivot stiffness [N m/rad]
    h : viscous damping [N m s/rad]
    J : rotor plus mirror inertia [kg m^2]
    Rm : coil resistance [Ohm]
    Kt : torque sensitivity [N m/A]
    Kb : back-EMF constant [V s/rad]
    Lm : coil inductance [H]
    Tc : Coulomb friction torque [N m], 0 means frictionless
    """

    c: float
    h: float
    J: float
    Rm: float
    Kt: float
    Kb: float
    Lm: float
    Tc: float = 0.0

    def __post_init__(self):
        for name in ("J", "Rm", "Lm", "Kt"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise InvalidParamsError(f"{name} must be finite and > 0, got {v!r}")
        for name in ("c", "h", "Kb", "Tc"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise InvalidParamsError(f"{name} must be finite and >= 0, got {v!r}")

    @property
    def electrical_time_constant(self) -> float:
        return self.Lm / self.Rm

    @property
    def mechanical_time_constant(self) -> float:
        """sqrt(J/c); infinite when the pivot stiffness is zero."""
        return math.sqrt(self.J / self.c) if self.c > 0 else math.inf


SMALL_MIRROR = ActuatorParams(c=12.3, h=0.03, J=0.7e-3, Rm=7.5, Kt=0.283, Kb=0.283, Lm=4.5e-3)
LARGE_MIRROR = ActuatorParams(c=1.54, h=0.02, J=4.9e-3, Rm=7.5, Kt=0.283, Kb=0.283, Lm=4.5e-3)

CORRECTIONS = ("none", "damping_x10", "zero_pivot_stiffness")


# Coulomb torque [N m] at the lower edge of the range where the large-mirror
# step relation phi_inf = 2.2026 deg/V * u0 holds; see sim.calibrate_friction.
CALIBRATED_TC = 0.0428666


def actuator(name: str) -> ActuatorParams:
    """Look up a baseline parameter set by name (``"small"`` or ``"large"``)."""
    try:
        return {"small": SMALL_MIRROR, "large": LARGE_MIRROR}[name]
    except KeyError:
        raise InvalidParamsError(f"unknown actuator {name!r}; expected 'small' or 'large'") from None


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class LinearModel:
    """SISO state-space model ``dx/dt = A x + B u``, ``y = C x + D u``."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: float = 0.0
    state_labels: tuple = field(default=())

    def __post_init__(self):
        A = _frozen(self.A)
        n = A.shape[0]
        if A.shape != (n, n) or n not in (1, 2, 3):
            raise InvalidParamsError(f"A must be square of order 1..3, got shape {A.shape}")
        B = _frozen(np.reshape(self.B, n))
        C = _frozen(np.reshape(self.C, n))
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "D", float(self.D))
        if not self.state_labels:
            object.__setattr__(self, "state_labels", ("phi", "omega", "i")[:n])

    @property
    def order(self) -> int:
        return self.A.shape[0]

    def __eq__(self, other):
        if not isinstance(other, LinearModel):
            return NotImplemented
        return (
            np.array_equal(self.A, other.A)
            and np.array_equal(self.B, other.B)
            and np.array_equal(self.C, other.C)
            and self.D == other.D
        )

    def __hash__(self):
        return hash((self.A.tobytes(), self.B.tobytes(), self.C.tobytes(), self.D))


@dataclass(frozen=True)
class TransferFunction:
    """``K / (a0 p^n + ... + a_n)``, or ``K / (p (a0 p^2 + a1 p + a2))`` when
    ``integrator`` is set (zero pivot stiffness)."""

    K: float
    denom: tuple
    integrator: bool = False

    def evaluate(self, p: complex) -> complex:
        d = np.polyval(self.denom, p)
        if self.integrator:
            d = d * p
        return self.K / d

    def full_denominator(self) -> np.ndarray:
        """Denominator coefficients including the integrator factor."""
        d = np.asarray(self.denom, dtype=float)
        return np.append(d, 0.0) if self.integrator else d


@dataclass(frozen=True)
class ModalAnalysis:
    eigenvalues: tuple
    natural_frequency: Optional[float] = None
    damping_ratio: Optional[float] = None
    resonant_frequency_hz: Optional[float] = None

    @property
    def resonant_frequency(self) -> Optional[float]:
        """Resonant angular frequency [rad/s]."""
        if self.resonant_frequency_hz is None:
            return None
        return 2 * math.pi * self.resonant_frequency_hz


def build_third_order(params: ActuatorParams) -> LinearModel:
    p = params
    A = [
        [0.0, 1.0, 0.0],
        [-p.c / p.J, -p.h / p.J, p.Kt / p.J],
        [0.0, -p.Kb / p.Lm, -p.Rm / p.Lm],
    ]
    B = [0.0, 0.0, 1.0 / p.Lm]
    return LinearModel(A, B, [1.0, 0.0, 0.0], 0.0, ("phi", "omega", "i"))


def build_simplified_second_order(params: ActuatorParams) -> LinearModel:
    """Second-order model obtained by neglecting the coil inductance.

    The reduction is meaningful when ``Lm/Rm`` is well below the mechanical
    time constant; :func:`time_constant_ratio` reports that ratio but the
    reduction is applied regardless.
    """
    p = params
    A = [
        [0.0, 1.0],
        [-p.c / p.J, -(p.Kb * p.Kt) / (p.Rm * p.J) - p.h / p.J],
    ]
    B = [0.0, p.Kt / (p.Rm * p.J)]
    return LinearModel(A, B, [1.0, 0.0], 0.0, ("phi", "omega"))


def time_constant_ratio(params: ActuatorParams) -> float:
    """Electrical over mechanical time constant, ``(Lm/Rm) / sqrt(J/c)``.

    Zero for a zero-stiffness actuator.
    """
    return params.electrical_time_constant / params.mechanical_time_constant


def transfer_function(params: ActuatorParams, order: int = 3) -> TransferFunction:
    p = params
    Te = p.Lm / p.Rm
    if order not in (2, 3):
        raise UnsupportedCombinationError(f"order must be 2 or 3, got {order!r}")
    if p.c == 0:
        if order == 2:
            raise UnsupportedCombinationError("zero pivot stiffness is only supported for order 3")
        if p.h == 0 and p.Kb == 0:
            raise UnsupportedCombinationError("zero stiffness form needs h > 0 or Kb > 0")
        if p.h > 0:
            g = 1.0 + p.Kt * p.Kb / (p.Rm * p.h)
            K = (p.Kt / (p.Rm * p.h)) / g
            a0 = Te * (p.J / p.h) / g
            a1 = (Te + p.J / p.h) / g
        else:
            # h = 0: normalise by the back-EMF term instead
            K = 1.0 / p.Kb
            a0 = Te * p.J * p.Rm / (p.Kt * p.Kb)
            a1 = p.J * p.Rm / (p.Kt * p.Kb)
        return TransferFunction(K, (a0, a1, 1.0), integrator=True)
    K = p.Kt / (p.Rm * p.c)
    if order == 3:
        a0 = Te * p.J / p.c
        a1 = Te * p.h / p.c + p.J / p.c
        a2 = Te + p.h / p.c + p.Kt * p.Kb / (p.Rm * p.c)
        return TransferFunction(K, (a0, a1, a2, 1.0))
    a0 = p.J / p.c
    a1 = p.h / p.c + p.Kt * p.Kb / (p.Rm * p.c)
    return TransferFunction(K, (a0, a1, 1.0))


def _quadratic_roots(b: float, c: float) -> list:
    """Roots of ``x^2 + b x + c``."""
    disc = b * b - 4 * c
    if disc >= 0:
        s = math.sqrt(disc)
        q = -0.5 * (b + math.copysign(s, b)) if b != 0 else -0.5 * s
        if q == 0:
            return [0.0, 0.0]
        r1, r2 = q, c / q
        return [r1, r2]
    s = math.sqrt(-disc)
    return [complex(-b / 2, s / 2), complex(-b / 2, -s / 2)]


def _cubic_roots(c2: float, c1: float, c0: float) -> list:
    """Roots of ``x^3 + c2 x^2 + c1 x + c0`` by closed form."""
    if c0 == 0:
        return [0.0] + _quadratic_roots(c2, c1)
    shift = c2 / 3.0
    p = c1 - c2 * c2 / 3.0
    q = 2 * c2**3 / 27.0 - c2 * c1 / 3.0 + c0
    disc = (q / 2) ** 2 + (p / 3) ** 3
    if disc <= 0 and p < 0:
        # three real roots, trigonometric form
        m = 2 * math.sqrt(-p / 3)
        arg = 3 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3
        roots = [m * math.cos(theta - 2 * math.pi * k / 3) - shift for k in range(3)]
    else:
        s = math.sqrt(max(disc, 0.0))
        u = np.cbrt(-q / 2 + s)
        v = np.cbrt(-q / 2 - s)
        r = float(u + v) - shift
        roots = [r] + _quadratic_roots(c2 + r, c1 + r * (c2 + r))
    polished = []
    for r in roots:
        if isinstance(r, complex):
            polished.append(r)
            continue
        for _ in range(3):
            f = ((r + c2) * r + c1) * r + c0
            df = (3 * r + 2 * c2) * r + c1
            if df == 0:
                break
            r -= f / df
        polished.append(r)
    return polished


def _sort_eigenvalues(vals) -> tuple:
    vals = [complex(v) for v in vals]
    vals.sort(key=lambda z: (round(abs(z.real), 9), -z.imag))
    out = []
    for z in vals:
        out.append(z.real + 0.0 if z.imag == 0 else z)
    return tuple(out)


def eigenvalues(A) -> tuple:
    """Eigenvalues of a matrix of order <= 3 from its characteristic polynomial.

    Sorted by ascending ``|Re|``; a complex pair is listed positive imaginary
    part first.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if n == 1:
        return (float(A[0, 0]),)
    tr = float(np.trace(A))
    if n == 2:
        det = float(A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0])
        return _sort_eigenvalues(_quadratic_roots(-tr, det))
    if n == 3:
        minors = (
            A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
            + A[0, 0] * A[2, 2] - A[0, 2] * A[2, 0]
            + A[1, 1] * A[2, 2] - A[1, 2] * A[2, 1]
        )
        det = float(np.linalg.det(A)) if np.any(A[:, 0]) else 0.0
        return _sort_eigenvalues(_cubic_roots(-tr, float(minors), -det))
    raise InvalidParamsError("closed-form eigenvalues only for order <= 3")


def modal_analysis(model: LinearModel) -> ModalAnalysis:
    lam = eigenvalues(model.A)
    if model.order != 2:
        return ModalAnalysis(lam)
    a21, a22 = float(model.A[1, 0]), float(model.A[1, 1])
    is_companion = model.A[0, 0] == 0 and model.A[0, 1] == 1
    if not is_companion or a21 >= 0:
        return ModalAnalysis(lam)
    wn = math.sqrt(-a21)
    xi = -a22 / (2 * wn)
    fr = None
    if xi < 1 / math.sqrt(2):
        fr = wn * math.sqrt(1 - 2 * xi * xi) / (2 * math.pi)
    return ModalAnalysis(lam, wn, xi, fr)


def frequency_response(model: LinearModel, omega: float) -> complex:
    """Complex frequency response ``C (j w I - A)^-1 B + D``."""
    if omega < 0:
        raise ValueError("omega must be >= 0")
    n = model.order
    M = 1j * omega * np.eye(n) - model.A
    for lam in eigenvalues(model.A):
        if abs(complex(lam) - 1j * omega) <= 1e-12 * max(1.0, abs(omega)):
            raise SingularFrequencyError(f"j*{omega} is an eigenvalue of A")
    x = np.linalg.solve(M, model.B.astype(complex))
    return complex(model.C @ x + model.D)


def bode_point(model: LinearModel, omega: float) -> tuple:
    """Magnitude (dimensionless) and phase [rad] of the response at ``omega``."""
    g = frequency_response(model, omega)
    return abs(g), cmath.phase(g)


def apply_correction(params: ActuatorParams, correction: str) -> ActuatorParams:
    """Design corrections that remove the oscillatory eigenvalue pair.

    ``damping_x10`` multiplies the viscous damping by ten,
    ``zero_pivot_stiffness`` removes the flex-pivot spring, ``none`` is the
    identity.
    """
    if correction == "none":
        return params
    if correction == "damping_x10":
        return replace(params, h=10.0 * params.h)
    if correction == "zero_pivot_stiffness":
        return replace(params, c=0.0)
    raise UnsupportedCombinationError(f"unknown correction {correction!r}")

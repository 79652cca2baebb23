"""Near time-optimal bang-bang control of the linear actuator models.

For a linear plant with real eigenvalues and a scalar bounded input, the
time-optimal control is bang-bang with at most ``n`` intervals of constancy
(``n`` = model order). :func:`solve` searches for the interval lengths by
shooting: the lengths are the unknowns, the terminal state is computed
exactly segment by segment, and a Levenberg-Marquardt iteration drives the
terminal error below the requested accuracy. :func:`certify` then builds an
adjoint trajectory that confirms the maximum condition along the solution.
"""

from __future__ import annotations

import json
import logging
import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import CertificationError, InvalidParamsError
from .models import LinearModel, eigenvalues
from .sim import ExactPropagator

__all__ = [
    "TocProblem",
    "BangBangSolution",
    "PmpCertificate",
    "Solver",
    "solve",
    "certify",
    "reach_time",
    "default_accuracy",
    "ComplexEigenvalueWarning",
]

log = logging.getLogger(__name__)


class ComplexEigenvalueWarning(UserWarning):
    """The plant has oscillatory modes; bang-bang results carry no optimality claim."""


def default_accuracy(order: int) -> tuple:
    """Terminal tolerances (rad, rad/s, A) of the zero-stiffness positioning runs:
    1e-7 deg, 2e-5 deg/s and 1e-5 A."""
    acc = (math.radians(1e-7), math.radians(2e-5), 1e-5)
    return acc[:order]


@dataclass(frozen=True, eq=False)
class TocProblem:
    """Transfer ``x0 -> xf`` in minimum time under ``|u| <= u0``."""

    model: LinearModel
    x0: np.ndarray
    xf: np.ndarray
    u0: float
    accuracy: tuple = ()

    def __post_init__(self):
        n = self.model.order
        x0 = np.array(self.x0, dtype=float).reshape(n)
        xf = np.array(self.xf, dtype=float).reshape(n)
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "xf", xf)
        acc = tuple(float(a) for a in (self.accuracy or default_accuracy(n)))
        if len(acc) != n:
            raise InvalidParamsError(f"accuracy needs {n} components, got {len(acc)}")
        if not all(a > 0 for a in acc):
            raise InvalidParamsError("accuracy components must be > 0")
        if not self.u0 > 0:
            raise InvalidParamsError("u0 must be > 0")
        object.__setattr__(self, "accuracy", acc)
        object.__setattr__(self, "u0", float(self.u0))

    @property
    def has_real_eigenvalues(self) -> bool:
        return all(not isinstance(l, complex) for l in eigenvalues(self.model.A))


@dataclass(frozen=True)
class BangBangSolution:
    """Control ``u(t) = initial_sign * (-1)**k * u0`` on interval ``k``."""

    initial_sign: int
    intervals: tuple
    total_time: float
    terminal_error: tuple
    converged: bool
    u0: float = 1.0

    @property
    def switch_times(self) -> np.ndarray:
        """Interior switching instants, relative to the start of the transfer."""
        return np.cumsum(self.intervals)[:-1] if self.intervals else np.empty(0)

    @property
    def n_intervals(self) -> int:
        return len(self.intervals)

    def control_values(self) -> tuple:
        return tuple(self.initial_sign * (-1) ** k * self.u0 for k in range(len(self.intervals)))

    def control(self, t: float) -> float:
        """Control at time ``t``; right-continuous at the switches, 0 after the end."""
        edges = np.cumsum(self.intervals)
        k = int(np.searchsorted(edges, t, side="right"))
        if t < 0 or k >= len(self.intervals):
            return 0.0
        return self.initial_sign * (-1) ** k * self.u0

    def to_dict(self) -> dict:
        return {
            "initial_sign": int(self.initial_sign),
            "intervals_s": [float(v) for v in self.intervals],
            "total_time_s": float(self.total_time),
            "terminal_error": [float(v) for v in self.terminal_error],
            "converged": bool(self.converged),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict, u0: float = 1.0) -> "BangBangSolution":
        return cls(
            initial_sign=int(d["initial_sign"]),
            intervals=tuple(float(v) for v in d["intervals_s"]),
            total_time=float(d["total_time_s"]),
            terminal_error=tuple(float(v) for v in d["terminal_error"]),
            converged=bool(d["converged"]),
            u0=u0,
        )


@dataclass(frozen=True)
class PmpCertificate:
    psi0: tuple
    switch_residuals: tuple
    sign_match: bool
    M_value: float
    margin: float = 0.0

    def to_dict(self) -> dict:
        return {
            "psi0": list(self.psi0),
            "switch_residuals": list(self.switch_residuals),
            "sign_match": self.sign_match,
            "M_value": self.M_value,
        }


class _Shooting:
    """Terminal state and its derivative with respect to the interval lengths."""

    def __init__(self, problem: TocProblem, prop: ExactPropagator):
        self.p = problem
        self.prop = prop
        self.A = np.array(problem.model.A)
        self.B = np.array(problem.model.B)
        self.w = 1.0 / np.array(problem.accuracy)

    def terminal(self, sign: int, tau):
        x = self.p.x0
        u = sign * self.p.u0
        for t in tau:
            x = self.prop.propagate(x, u, t)
            u = -u
        return x

    def residual_jacobian(self, sign: int, tau):
        """Weighted residual ``(x(T) - xf)/accuracy`` and ``d residual / d tau``."""
        m = len(tau)
        n = len(self.p.x0)
        xs = []
        Phis = []
        x = self.p.x0
        u = sign * self.p.u0
        us = []
        for t in tau:
            Phi, gamma = self.prop.transition(t)
            x = Phi @ x + gamma * u
            xs.append(x)
            Phis.append(Phi)
            us.append(u)
            u = -u
        J = np.empty((n, m))
        back = np.eye(n)
        for k in range(m - 1, -1, -1):
            J[:, k] = back @ (self.A @ xs[k] + self.B * us[k])
            back = back @ Phis[k]
        r = (x - self.p.xf) * self.w
        return r, J * self.w[:, None], x


class _ModalShooting(_Shooting):
    """Same interface, evaluated in real modal coordinates with scalar arithmetic."""

    def __init__(self, problem: TocProblem, prop: ExactPropagator):
        super().__init__(problem, prop)
        self.lam = [float(v) for v in prop.lam]
        self.V = np.array(prop.V)
        self.bm = [float(v) for v in prop.b]
        self.xi0 = [float(v) for v in prop.Vinv @ problem.x0]
        self.xif = prop.Vinv @ problem.xf

    def _run(self, sign, tau):
        lam, bm = self.lam, self.bm
        xi = list(self.xi0)
        u = sign * self.p.u0
        hist = []
        for t in tau:
            t = float(t)
            new = []
            for l, b, z in zip(lam, bm, xi):
                lt = l * t
                e = math.exp(lt)
                g = math.expm1(lt) / l if abs(lt) > 1e-12 else t * (1 + 0.5 * lt)
                new.append(e * z + g * b * u)
            hist.append((xi, u))
            xi = new
            u = -u
        return xi, hist

    def terminal(self, sign, tau):
        xi, _ = self._run(sign, tau)
        return self.V @ np.array(xi)

    def residual_jacobian(self, sign, tau):
        lam, bm = self.lam, self.bm
        xi, hist = self._run(sign, tau)
        m = len(tau)
        # modal derivative d xi_T / d tau_k = exp(lam (T - t_k)) (lam xi(t_k^+) + b u_k)
        Jm = np.empty((len(lam), m))
        rest = [0.0] * len(lam)
        for k in range(m - 1, -1, -1):
            xs, u = hist[k]
            t = float(tau[k])
            for j, (l, b, z) in enumerate(zip(lam, bm, xs)):
                lt = l * t
                e = math.exp(lt)
                g = math.expm1(lt) / l if abs(lt) > 1e-12 else t * (1 + 0.5 * lt)
                end = e * z + g * b * u
                Jm[j, k] = math.exp(l * rest[j]) * (l * end + b * u)
                rest[j] += t
        x = self.V @ np.array(xi)
        r = (x - self.p.xf) * self.w
        return r, (self.V @ Jm) * self.w[:, None], x


def _lm(shoot: _Shooting, sign: int, tau0, max_iter: int = 200):
    """Levenberg-Marquardt over ``s`` with ``tau = s**2``.

    Returns ``(tau, residual, converged)``.
    """
    s = np.sqrt(np.maximum(np.asarray(tau0, dtype=float), 0.0))
    tau = s * s
    r, Jt, _ = shoot.residual_jacobian(sign, tau)
    cost = float(r @ r)
    lam = 1e-3
    m = len(s)
    # candidates running away to absurd durations are abandoned early
    limit = 1e3 * max(float(np.sum(tau)), 1e-6)
    history = []
    for it in range(max_iter):
        if np.all(np.abs(r) <= 1.0):
            return tau, r, True
        # give up on starts that stall far from a solution
        history.append(cost)
        if it >= 20 and cost > 0.5 * history[it - 20]:
            break
        if m == len(r):
            # plain Newton in tau first; quadratic near the solution
            try:
                dtau = np.linalg.solve(Jt, -r)
            except np.linalg.LinAlgError:
                dtau = None
            if dtau is not None and np.all(np.isfinite(dtau)):
                tau_n = tau + dtau
                if np.all(tau_n >= 0) and tau_n.sum() <= limit:
                    r_n, Jt_n, _ = shoot.residual_jacobian(sign, tau_n)
                    c_n = float(r_n @ r_n)
                    if np.isfinite(c_n) and c_n < cost:
                        tau, r, Jt, cost = tau_n, r_n, Jt_n, c_n
                        s = np.sqrt(tau)
                        continue
        Js = Jt * (2 * s)[None, :]
        # column scaling keeps the damping meaningful across time scales
        d = np.linalg.norm(Js, axis=0)
        d = np.where(d > 0, d, 1.0)
        improved = False
        for _ in range(30):
            M = np.vstack([Js, math.sqrt(lam) * np.diag(d)])
            rhs = np.concatenate([-r, np.zeros(m)])
            step = np.linalg.lstsq(M, rhs, rcond=None)[0]
            s_new = s + step
            tau_new = s_new * s_new
            if tau_new.sum() > limit:
                lam *= 6
                continue
            r_new, Jt_new, _ = shoot.residual_jacobian(sign, tau_new)
            c_new = float(r_new @ r_new)
            if np.isfinite(c_new) and c_new < cost:
                s, tau, r, Jt, cost = s_new, tau_new, r_new, Jt_new, c_new
                lam = max(lam / 5, 1e-12)
                improved = True
                break
            lam *= 6
            if lam > 1e12:
                break
        if not improved:
            break
    return tau, r, bool(np.all(np.abs(r) <= 1.0))


def _canonical(sign: int, tau, zero: float):
    """Drop zero-length intervals, merging the neighbours they separate."""
    out = []
    cur_sign = sign
    first_sign = None
    for k, t in enumerate(tau):
        val = sign * (-1) ** k
        if t <= zero:
            continue
        if out and val == cur_sign:
            out[-1] += t
        else:
            out.append(float(t))
            cur_sign = val
            if first_sign is None:
                first_sign = val
    # trailing intervals of the right sign but zero length vanish naturally
    return (first_sign if first_sign is not None else sign), out


class Solver:
    """Shooting solver bound to one plant model.

    Re-using a ``Solver`` across many problems on the same model avoids
    recomputing the modal decomposition (the tracking loop does this).
    """

    def __init__(self, model: LinearModel, starts: Sequence[float] = (0.2, 1.0, 5.0)):
        self.model = model
        self.prop = ExactPropagator(model)
        lam = eigenvalues(model.A)
        self.real_eigenvalues = all(not isinstance(l, complex) for l in lam)
        nonzero = sorted(abs(complex(l)) for l in lam if abs(complex(l)) > 1e-9)
        self.T_slow = 1.0 / nonzero[0] if nonzero else 1.0
        # one interval per mode, slowest first; an integrator borrows T_slow
        tcs = [1.0 / v for v in nonzero]
        self.modal_ladder = [self.T_slow] * (model.order - len(tcs)) + tcs
        self.starts = tuple(starts)

    def _guesses(self, m: int, total: Optional[float] = None):
        """Starting interval vectors of length ``m``.

        Without ``total`` these are the modal ladder (one interval per time
        constant) and geometric ladders ``T * 2**(1-k)`` at
        ``T in starts * T_slow``, descending and ascending. With ``total`` the
        same shapes are rescaled to that overall duration.
        """
        if total is not None:
            shapes = [self.modal_ladder[:m], [2.0 ** (-k) for k in range(m)], [2.0 ** (k - m) for k in range(m)]]
            return [[total * v / sum(sh) for v in sh] for sh in shapes]
        out = [[f * t for t in self.modal_ladder[:m]] for f in (1.0, 0.2, 5.0)]
        for f in self.starts:
            T = f * self.T_slow
            ladder = [T * 2.0 ** (-k) for k in range(m)]
            out.append(ladder)
            out.append(ladder[::-1])
        return out

    def _finish(self, problem, shoot, sign, tau):
        zero = 1e-12
        sgn, ints = _canonical(sign, tau, zero)
        err = shoot.terminal(sgn, ints) - problem.xf
        ok = bool(np.all(np.abs(err) <= problem.accuracy))
        if not ok:
            err_raw = shoot.terminal(sign, tau) - problem.xf
            sgn, ints, err = sign, [float(t) for t in tau], err_raw
            ok = bool(np.all(np.abs(err) <= problem.accuracy))
        return BangBangSolution(int(sgn), tuple(ints), float(sum(ints)), tuple(float(e) for e in err), ok, problem.u0)

    def solve(self, problem: TocProblem, warm: Optional[BangBangSolution] = None,
              exhaustive: bool = True) -> BangBangSolution:
        if problem.model is not self.model and problem.model != self.model:
            raise InvalidParamsError("problem model differs from the solver model")
        err0 = problem.x0 - problem.xf
        if np.all(np.abs(err0) <= problem.accuracy):
            return BangBangSolution(1, (), 0.0, tuple(float(e) for e in err0), True, problem.u0)
        if not self.real_eigenvalues:
            warnings.warn("plant has complex eigenvalues; no optimality claim", ComplexEigenvalueWarning, stacklevel=3)
        shoot = _ModalShooting(problem, self.prop) if self.prop.modal and self.prop.real else _Shooting(problem, self.prop)
        n = self.model.order
        best = None
        best_res = math.inf
        fallback = None

        def consider(sol, res):
            nonlocal best, fallback, best_res
            if sol.converged:
                if best is None or sol.total_time < best.total_time - 1e-9 or (
                    abs(sol.total_time - best.total_time) <= 1e-9 and sol.n_intervals < best.n_intervals
                ):
                    best = sol
            elif res < best_res:
                best_res = res
                fallback = sol

        first = 1 if problem.xf[0] >= problem.x0[0] else -1
        starts = []
        if warm is not None and warm.intervals:
            tau0 = list(warm.intervals) + [1e-6] * (n - len(warm.intervals))
            starts.append((warm.initial_sign, tau0))
            # the previous plan preceded by a short pulse of the other sign
            flip = ([1e-6] + list(warm.intervals))[:n]
            starts.append((-warm.initial_sign, flip + [1e-6] * (n - len(flip))))
            # ladders sized like the previous plan, both signs
            T = max(warm.total_time, 1e-6)
            for sign in (warm.initial_sign, -warm.initial_sign):
                for g in self._guesses(n, T):
                    starts.append((sign, g))
        for sign, g in starts:
            tau, r, ok = _lm(shoot, sign, g)
            sol = self._finish(problem, shoot, sign, tau)
            consider(sol, float(r @ r))
            if sol.converged and not exhaustive:
                return sol
        for m in range(n, 0, -1):
            for sign in (first, -first):
                for g in self._guesses(m):
                    tau, r, ok = _lm(shoot, sign, g)
                    sol = self._finish(problem, shoot, sign, tau)
                    consider(sol, float(r @ r))
                    if sol.converged and not exhaustive:
                        return sol
        if best is not None:
            return best
        log.debug("no convergence; best residual %g", best_res)
        return fallback


def solve(problem: TocProblem) -> BangBangSolution:
    """Near time-optimal bang-bang solution of ``problem``.

    All interval counts from the model order down to one are tried with both
    initial signs and several starting ladders; the converged candidate with
    the smallest total time wins (ties go to fewer intervals). When nothing
    converges the closest candidate is returned with ``converged=False``.
    """
    return Solver(problem.model).solve(problem)


def reach_time(problem: TocProblem) -> float:
    return solve(problem).total_time


def _switching_function(prop: ExactPropagator, B, T: float, t: np.ndarray) -> np.ndarray:
    """Rows ``(exp(A (T - t)) B)^T`` so that ``psi(t)^T B = row . psi(T)``."""
    return np.array([prop.transition(T - ti)[0] @ B for ti in t])


def certify(problem: TocProblem, solution: BangBangSolution, grid: int = 1000,
            tol: float = 1e-9) -> PmpCertificate:
    """Adjoint certificate of the maximum condition along ``solution``.

    The adjoint ``psi(t) = exp(-A^T t) psi0`` is parameterised by its terminal
    value, which keeps the fast modes well scaled. ``psi(T)`` is chosen (unit
    norm) so that ``psi^T B`` vanishes at every interior switch and carries
    the sign of the applied control on the ``grid`` interior points; the
    choice maximises the worst-case normalised margin by linear programming.
    """
    if not solution.converged:
        raise InvalidParamsError("certify needs a converged solution")
    model = problem.model
    n = model.order
    A = np.array(model.A)
    B = np.array(model.B)
    prop = ExactPropagator(model)
    T = solution.total_time
    if not solution.intervals:
        return PmpCertificate(tuple([0.0] * n), (), True, 0.0)
    switches = solution.switch_times
    S = _switching_function(prop, B, T, switches) if len(switches) else np.zeros((0, n))
    # basis of psi(T) satisfying the switch conditions
    if len(switches):
        _, sv, Vt = np.linalg.svd(S / np.maximum(np.linalg.norm(S, axis=1, keepdims=True), 1e-300))
        rank = int(np.sum(sv > 1e-10 * sv[0]))
        N = Vt[rank:].T
    else:
        N = np.eye(n)
    if N.shape[1] == 0:
        raise CertificationError("switch conditions only admit the trivial adjoint")
    tg = (np.arange(grid) + 0.5) * T / grid
    edges = np.concatenate([switches, [T]])
    keep = np.min(np.abs(tg[:, None] - edges[None, :]), axis=1) > 1e-12 * max(T, 1.0)
    tg = tg[keep]
    sgn = np.array([solution.control(t) / solution.u0 for t in tg])
    G = _switching_function(prop, B, T, tg) @ N
    d = N.shape[1]
    if d == 1:
        c = np.array([1.0])
        vals = sgn * G[:, 0]
        if np.sum(vals > 0) < np.sum(vals < 0):
            c = -c
    else:
        # maximise eps subject to sgn_j * (G_j . c) >= eps * |G_j|, |c_i| <= 1
        scale = np.maximum(np.linalg.norm(G, axis=1), 1e-300)
        A_ub = np.hstack([-(sgn / scale)[:, None] * G, np.ones((len(tg), 1))])
        res = linprog(np.r_[np.zeros(d), -1.0], A_ub=A_ub, b_ub=np.zeros(len(tg)),
                      bounds=[(-1, 1)] * d + [(None, 1)], method="highs")
        if res.status != 0:
            raise CertificationError(f"linear program failed: {res.message}")
        c = res.x[:d]
    psiT = N @ c
    psiT = psiT / np.linalg.norm(psiT)
    sigma = _switching_function(prop, B, T, tg) @ psiT
    margin = float(np.min(sgn * sigma / np.maximum(np.abs(sigma).max(), 1e-300)))
    sign_match = bool(np.all(sgn * sigma > 0))
    if d > 1 and not sign_match and margin < 0:
        raise CertificationError("no sign-consistent adjoint exists for this switching structure")
    residuals = tuple(float(v) for v in (S @ psiT if len(switches) else ()))
    if any(abs(r) > tol for r in residuals):
        sign_match = False
    # psi0 = exp(A^T T) psi(T)
    PhiT = prop.transition(T)[0]
    psi0 = PhiT.T @ psiT
    psi0 = psi0 / np.linalg.norm(psi0)
    xT = problem.x0
    u = solution.initial_sign * solution.u0
    for t in solution.intervals:
        xT = prop.propagate(xT, u, t)
        u = -u
    M = float(psiT @ (A @ xT) + abs(psiT @ B) * solution.u0)
    return PmpCertificate(tuple(float(v) for v in psi0), residuals, sign_match, M, margin)

"""Vector and spinor forms of the Frenet and Darboux equations, integrated by RK4.

Frame states are 3x3 arrays whose rows are ``(T, N, B)`` or ``(T, g, n)``.
Spinor states are :class:`~spinorframe.spinor.Spinor` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._vec3 import cross
from .catalog import Curve, Surface
from .errors import BadGrid, NonFiniteState
from .geometry import darboux_apparatus, frenet_apparatus
from .spinor import Spinor, Triad, mate, norm_sq, triad_from_spinor

__all__ = [
    "FrenetSignal",
    "DarbouxSignal",
    "System",
    "Trajectory",
    "frenet_vector_rhs",
    "darboux_vector_rhs",
    "frenet_spinor_rhs",
    "darboux_spinor_rhs",
    "frenet_vector_system",
    "darboux_vector_system",
    "frenet_spinor_system",
    "darboux_spinor_system",
    "frame_to_triad",
    "repair_frame",
    "rk4_integrate",
]


class FrenetSignal:
    """Curvature and torsion as functions of arc length: ``signal(s) -> (kappa, tau)``."""

    def __init__(self, func: Callable[[float], tuple]):
        self._func = func

    def __call__(self, s):
        return self._func(s)

    @classmethod
    def constant(cls, kappa, tau):
        return cls(lambda s: (kappa, tau))

    @classmethod
    def from_curve(cls, curve: Curve):
        def sample(s):
            f = frenet_apparatus(curve, s)
            return f.kappa, f.tau
        return cls(sample)


class DarbouxSignal:
    """``signal(s) -> (kappa_g, kappa_n, tau_g)``."""

    def __init__(self, func: Callable[[float], tuple]):
        self._func = func

    def __call__(self, s):
        return self._func(s)

    @classmethod
    def constant(cls, kappa_g, kappa_n, tau_g):
        return cls(lambda s: (kappa_g, kappa_n, tau_g))

    @classmethod
    def from_curve(cls, surface: Surface, curve: Curve):
        def sample(s):
            d = darboux_apparatus(surface, curve, s)
            return d.kappa_g, d.kappa_n, d.tau_g
        return cls(sample)


def frenet_vector_rhs(state, kappa, tau):
    T, N, B = state
    return np.array([kappa * N, -kappa * T + tau * B, -tau * N])


def darboux_vector_rhs(state, kg, kn, tg):
    T, g, n = state
    return np.array([kg * g + kn * n, -kg * T + tg * n, -kn * T - tg * g])


def frenet_spinor_rhs(psi: Spinor, kappa, tau) -> Spinor:
    """``dpsi/ds = (-i tau psi + kappa mate(psi)) / 2``."""
    return (-0.5j * tau) * psi + (0.5 * kappa) * mate(psi)


def darboux_spinor_rhs(phi: Spinor, kg, kn, tg) -> Spinor:
    """``dphi/ds = (-i tau_g / 2) phi + ((i kappa_n + kappa_g) / 2) mate(phi)``."""
    # phi coefficient is purely imaginary: the flow preserves norm_sq
    phase_coeff = -0.5j * tg
    mate_coeff = 0.5 * complex(kg, kn)
    return phase_coeff * phi + mate_coeff * mate(phi)


@dataclass(frozen=True)
class System:
    """A right-hand side ``rhs(s, y)`` tagged with the kind of state it evolves."""

    kind: str
    rhs: Callable

    @property
    def is_spinor(self) -> bool:
        return self.kind.endswith("spinor")


def frenet_vector_system(signal: FrenetSignal) -> System:
    return System("frenet_vector", lambda s, y: frenet_vector_rhs(y, *signal(s)))


def darboux_vector_system(signal: DarbouxSignal) -> System:
    return System("darboux_vector", lambda s, y: darboux_vector_rhs(y, *signal(s)))


def frenet_spinor_system(signal: FrenetSignal) -> System:
    return System("frenet_spinor", lambda s, y: frenet_spinor_rhs(y, *signal(s)))


def darboux_spinor_system(signal: DarbouxSignal) -> System:
    return System("darboux_spinor", lambda s, y: darboux_spinor_rhs(y, *signal(s)))


def frame_to_triad(state) -> Triad:
    """Rows ``(T, e1, e2)`` to the triad ``{e1, e2, T}``."""
    T, e1, e2 = state
    return Triad(e1, e2, T)


def repair_frame(state) -> np.ndarray:
    T, N, _ = state
    T = T / np.linalg.norm(T)
    B = cross(T, N)
    B = B / np.linalg.norm(B)
    N = cross(B, T)
    return np.array([T, N / np.linalg.norm(N), B])


@dataclass
class Trajectory:
    """States of one system sampled on a uniform arc-length grid."""

    grid: np.ndarray
    states: list
    kind: str
    step: float
    renormalize: bool

    def __len__(self):
        return len(self.grid)

    def triads(self) -> list[Triad]:
        if self.kind.endswith("spinor"):
            return [triad_from_spinor(psi) for psi in self.states]
        return [frame_to_triad(y) for y in self.states]

    def norm_drift(self) -> np.ndarray:
        """``|norm_sq(psi(s)) - norm_sq(psi(s0))|`` for spinor trajectories."""
        n0 = norm_sq(self.states[0])
        return np.array([abs(norm_sq(psi) - n0) for psi in self.states])


def _grid(s0, s1, step):
    if not (step > 0 and math.isfinite(step)):
        raise BadGrid(f"step must be positive and finite, got {step}")
    if not s1 > s0:
        raise BadGrid(f"empty integration range [{s0}, {s1}]")
    ratio = (s1 - s0) / step
    n = round(ratio)
    if n < 1 or abs(ratio - n) > 1e-6:
        raise BadGrid(f"(s1 - s0) / step = {ratio} is not an integer")
    return s0 + step * np.arange(n + 1), n


def _finite(y) -> bool:
    if isinstance(y, Spinor):
        return y.is_finite()
    return bool(np.all(np.isfinite(y)))


def rk4_integrate(system: System, y0, s0: float, s1: float, step: float,
                  renormalize: bool = False) -> Trajectory:
    """Classical fixed-step fourth-order Runge-Kutta on ``[s0, s1]``.

    The returned grid holds both endpoints.  With ``renormalize`` the state is
    projected back to unit norm (spinors) or an orthonormal frame after every
    step.
    """
    grid, n = _grid(float(s0), float(s1), float(step))
    f = system.rhs
    h = float(step)
    y = y0 if system.is_spinor else np.asarray(y0, dtype=float)
    if not _finite(y):
        raise NonFiniteState("initial state is not finite")
    states = [y]
    for k in range(n):
        s = grid[k]
        k1 = f(s, y)
        k2 = f(s + h / 2, y + (h / 2) * k1)
        k3 = f(s + h / 2, y + (h / 2) * k2)
        # grid abscissa (not s + h) so signal caches hit at shared points
        k4 = f(grid[k + 1], y + h * k3)
        y = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
        if renormalize:
            y = y / math.sqrt(norm_sq(y)) if system.is_spinor else repair_frame(y)
        if not _finite(y):
            raise NonFiniteState(f"{system.kind}: state became non-finite at s={grid[k + 1]}")
        states.append(y)
    return Trajectory(grid, states, system.kind, h, renormalize)

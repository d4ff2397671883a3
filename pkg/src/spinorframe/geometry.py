"""Frenet and Darboux apparatus of catalog curves, and the phase between them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._vec3 import cross
from .catalog import Curve, Surface, numeric_derivative
from .errors import CurvatureVanishes, DegenerateNormal, OffSurface, TangentMismatch
from .spinor import Triad

__all__ = [
    "FrenetApparatus",
    "DarbouxApparatus",
    "frenet_apparatus",
    "darboux_apparatus",
    "frame_phase",
    "rotate_frenet_to_darboux",
    "unwrapped_phase",
    "consistency_residuals",
]

SURFACE_TOL = 1e-8
TANGENT_TOL = 1e-9


@dataclass(frozen=True)
class FrenetApparatus:
    s: float
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: float
    tau: float

    def triad(self) -> Triad:
        """The triad ``{N, B, T}`` carried by the Frenet spinor."""
        return Triad(self.N, self.B, self.T)

    def frame(self) -> np.ndarray:
        return np.array([self.T, self.N, self.B])


@dataclass(frozen=True)
class DarbouxApparatus:
    s: float
    T: np.ndarray
    g: np.ndarray
    n: np.ndarray
    kappa_g: float
    kappa_n: float
    tau_g: float

    def triad(self) -> Triad:
        """The triad ``{g, n, T}`` carried by the Darboux spinor."""
        return Triad(self.g, self.n, self.T)

    def frame(self) -> np.ndarray:
        return np.array([self.T, self.g, self.n])


def frenet_apparatus(curve: Curve, s: float, numeric: bool = False) -> FrenetApparatus:
    """Tangent, normal, binormal, curvature and torsion at arc length ``s``.

    ``numeric=True`` forces finite-difference derivatives even for analytic
    curves.
    """
    d1 = curve.derivative(s, 1, numeric=numeric)
    d2 = curve.derivative(s, 2, numeric=numeric)
    kappa = float(np.linalg.norm(d2))
    if kappa <= 1e-9:
        raise CurvatureVanishes(f"{curve.name}: curvature vanishes at s={s}")
    T = d1 / np.linalg.norm(d1)
    N = d2 / kappa
    # remove rounding-level tangential leakage so {N, B, T} is orthonormal
    N = N - T * (N @ T)
    N = N / np.linalg.norm(N)
    B = cross(T, N)
    d3 = curve.derivative(s, 3, numeric=numeric)
    tau = float(d3 @ B) / kappa
    return FrenetApparatus(float(s), T, N, B, kappa, tau)


def _darboux_vectors(surface: Surface, curve: Curve, s: float, numeric: bool):
    p = curve.position(s)
    T = curve.derivative(s, 1, numeric=numeric)
    T = T / np.linalg.norm(T)
    n = surface.normal(p)
    g = cross(n, T)
    return p, T, g, n


def darboux_apparatus(surface: Surface, curve: Curve, s: float,
                      numeric: bool = False) -> DarbouxApparatus:
    """Darboux frame ``{T, g, n}`` with ``g = n x T`` and its curvatures.

    With ``numeric=True`` the curve derivatives and the derivative of ``g``
    along the curve come from finite differences instead of the surface
    Hessian.
    """
    p = curve.position(s)
    if surface.residual(p) > SURFACE_TOL:
        raise OffSurface(f"{curve.name} leaves {surface.name} at s={s} "
                         f"(residual {surface.residual(p):.3g})")
    if np.linalg.norm(surface.grad(p)) <= 1e-9:
        raise DegenerateNormal(f"{surface.name}: vanishing gradient at {p}")
    _, T, g, n = _darboux_vectors(surface, curve, s, numeric)
    dT = curve.derivative(s, 2, numeric=numeric)
    if numeric:
        dg = numeric_derivative(lambda u: _darboux_vectors(surface, curve, u, True)[2], s, 1)
    else:
        dn = surface.normal_derivative(p, T)
        dg = cross(dn, T) + cross(n, dT)
    return DarbouxApparatus(float(s), T, g, n, float(dT @ g), float(dT @ n), float(dg @ n))


def frame_phase(f: FrenetApparatus, d: DarbouxApparatus) -> float:
    """Angle ``theta`` in (-pi, pi] with ``g = cos(theta) N + sin(theta) B``."""
    if abs(float(f.T @ d.T) - 1.0) > TANGENT_TOL:
        raise TangentMismatch(f"tangents disagree at s={f.s} (<T_f, T_d> = {f.T @ d.T})")
    theta = math.atan2(float(d.g @ f.B), float(d.g @ f.N))
    return math.pi if theta == -math.pi else theta


def rotate_frenet_to_darboux(f: FrenetApparatus, theta: float):
    """Rotate ``(N, B)`` about ``T`` by ``theta``; returns ``(g, n)``."""
    c, s = math.cos(theta), math.sin(theta)
    return c * f.N + s * f.B, -s * f.N + c * f.B


def unwrapped_phase(curve: Curve, surface: Surface, grid) -> np.ndarray:
    """Frame phase along ``grid`` with 2*pi jumps removed."""
    raw = [frame_phase(frenet_apparatus(curve, s), darboux_apparatus(surface, curve, s))
           for s in grid]
    return np.unwrap(np.asarray(raw))


def consistency_residuals(curve: Curve, surface: Surface, grid) -> dict:
    """Residuals of the relations tying the Darboux curvatures to the Frenet ones.

    Returns arrays ``kappa_g - kappa cos(theta)``, ``kappa_n + kappa sin(theta)``
    and ``tau_g - (tau + theta')`` over ``grid`` (at least 3 uniformly
    spaced points).  ``theta'`` is a central difference of the unwrapped
    phase along the grid, second-order one-sided at the ends.
    """
    grid = np.asarray(grid, dtype=float)
    fs = [frenet_apparatus(curve, s) for s in grid]
    ds = [darboux_apparatus(surface, curve, s) for s in grid]
    theta = np.unwrap([frame_phase(f, d) for f, d in zip(fs, ds)])
    dtheta = np.gradient(theta, grid, edge_order=2)
    kappa = np.array([f.kappa for f in fs])
    return {
        "kappa_g": np.array([d.kappa_g for d in ds]) - kappa * np.cos(theta),
        "kappa_n": np.array([d.kappa_n for d in ds]) + kappa * np.sin(theta),
        "tau_g": np.array([d.tau_g for d in ds]) - (np.array([f.tau for f in fs]) + dtheta),
    }

"""Analytic unit-speed curves, implicit oriented surfaces, and numeric fallbacks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np
from scipy.interpolate import CubicSpline, PchipInterpolator

from .errors import InvalidSpec, VanishingSpeed

__all__ = [
    "CURVE_KINDS",
    "SURFACE_KINDS",
    "CurveSpec",
    "SurfaceSpec",
    "Curve",
    "Surface",
    "make_curve",
    "make_surface",
    "parametric_curve",
    "arc_length_reparameterize",
    "numeric_derivative",
]

CURVE_KINDS = {
    "Line": ("point", "direction"),
    "Circle": ("r",),
    "Helix": ("a", "b"),
    "SphereLatitude": ("alpha",),
    "PlanarParametric": ("points", "closed", "grid_step"),
}
SURFACE_KINDS = {
    "Plane": (),
    "Sphere": ("R",),
    "Cylinder": ("a",),
}
ORIENTATIONS = ("Outward", "Inward")

# central stencils: offsets -> weights, divided by h**order
_STENCILS = {
    1: (np.arange(-2, 3), np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0),
    2: (np.arange(-2, 3), np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0),
    3: (np.arange(-3, 4), np.array([1.0, -8.0, 13.0, 0.0, -13.0, 8.0, -1.0]) / 8.0),
}
DEFAULT_H = {1: 1e-4, 2: 1e-4, 3: 1e-3}


def numeric_derivative(f: Callable, s: float, order: int, h: float | None = None):
    """Central finite-difference derivative of ``f`` at ``s``.

    Five-point stencils for orders 1 and 2, seven points for order 3.
    ``f`` may return a scalar or an array.
    """
    if order not in _STENCILS:
        raise ValueError(f"order must be 1, 2 or 3, got {order}")
    if h is None:
        h = DEFAULT_H[order]
    if h <= 0:
        raise ValueError("step h must be positive")
    offsets, weights = _STENCILS[order]
    acc = 0.0
    for k, w in zip(offsets, weights):
        if w != 0.0:
            acc = acc + w * np.asarray(f(s + k * h), dtype=float)
    return acc / h**order


@dataclass(frozen=True)
class CurveSpec:
    kind: str
    params: Mapping[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class SurfaceSpec:
    kind: str
    params: Mapping[str, object] = field(default_factory=dict)
    orientation: str = "Outward"


class Curve:
    """A space curve ``s -> alpha(s)`` with derivatives up to order 3.

    Parameters
    ----------
    evaluator : callable
        ``evaluator(s, order)`` returns the ``order``-th derivative
        (``order`` in 0..3) as a length-3 array.  When ``analytic`` is false
        only order 0 is required; higher orders come from stencils.
    domain : (float, float)
        Parameter interval.
    unit_speed : bool
        Whether ``s`` is arc length.
    """

    def __init__(self, evaluator, domain=(-math.inf, math.inf), unit_speed=True,
                 analytic=True, name="curve"):
        self._eval = evaluator
        self.domain = (float(domain[0]), float(domain[1]))
        self.unit_speed = unit_speed
        self.analytic = analytic
        self.name = name

    def __repr__(self):
        return f"Curve({self.name!r}, domain={self.domain}, unit_speed={self.unit_speed})"

    def position(self, s: float) -> np.ndarray:
        return np.asarray(self._eval(s, 0), dtype=float)

    def derivative(self, s: float, order: int, numeric: bool = False) -> np.ndarray:
        if order == 0:
            return self.position(s)
        if self.analytic and not numeric:
            return np.asarray(self._eval(s, order), dtype=float)
        return numeric_derivative(self.position, s, order)

    def speed_defect(self, samples) -> float:
        """Largest ``| |alpha'(s)| - 1 |`` over ``samples``."""
        return max(abs(float(np.linalg.norm(self.derivative(s, 1)) - 1.0)) for s in samples)


class Surface:
    """Implicit surface ``F(p) = 0`` with an oriented unit normal."""

    def __init__(self, F, grad, hess, sign=1.0, name="surface"):
        self.F = F
        self.grad = grad
        self.hess = hess
        self.sign = float(sign)
        self.name = name

    def __repr__(self):
        return f"Surface({self.name!r}, sign={self.sign:+.0f})"

    def residual(self, p) -> float:
        return abs(float(self.F(np.asarray(p, dtype=float))))

    def normal(self, p) -> np.ndarray:
        g = self.grad(np.asarray(p, dtype=float))
        return self.sign * g / np.linalg.norm(g)

    def normal_derivative(self, p, v) -> np.ndarray:
        """Derivative of the unit normal along velocity ``v`` at ``p``."""
        p = np.asarray(p, dtype=float)
        g = self.grad(p)
        ng = np.linalg.norm(g)
        u = g / ng
        hv = self.hess(p) @ np.asarray(v, dtype=float)
        return self.sign * (hv - u * (u @ hv)) / ng


def _rotating(radius: float, rate: float, s: float, order: int) -> np.ndarray:
    """k-th derivative of ``radius * (cos(rate s), sin(rate s))``."""
    phase = rate * s + order * math.pi / 2
    amp = radius * rate**order
    return np.array([amp * math.cos(phase), amp * math.sin(phase)])


def _param(spec, name, default=None):
    if name in spec.params:
        return spec.params[name]
    if default is None:
        raise InvalidSpec(f"{spec.kind} requires parameter {name!r}")
    return default


def _positive(spec, name) -> float:
    try:
        x = float(_param(spec, name))
    except (TypeError, ValueError):
        raise InvalidSpec(f"{spec.kind}: parameter {name!r} must be a number") from None
    if not math.isfinite(x) or x <= 0:
        raise InvalidSpec(f"{spec.kind}: parameter {name!r} must be positive, got {x}")
    return x


def make_curve(spec: CurveSpec) -> Curve:
    """Build the unit-speed evaluator for a catalog curve."""
    if spec.kind not in CURVE_KINDS:
        raise InvalidSpec(f"unknown curve kind {spec.kind!r}")
    unknown = set(spec.params) - set(CURVE_KINDS[spec.kind])
    if unknown:
        raise InvalidSpec(f"{spec.kind}: unknown parameters {sorted(unknown)}")

    if spec.kind == "Line":
        p0 = np.asarray(_param(spec, "point", (0.0, 0.0, 0.0)), dtype=float)
        d = np.asarray(_param(spec, "direction", (1.0, 0.0, 0.0)), dtype=float)
        if p0.shape != (3,) or d.shape != (3,) or np.linalg.norm(d) == 0:
            raise InvalidSpec("Line needs a 3-vector point and a nonzero 3-vector direction")
        d = d / np.linalg.norm(d)

        def line(s, order):
            if order == 0:
                return p0 + s * d
            return d if order == 1 else np.zeros(3)

        return Curve(line, name="Line")

    if spec.kind == "Circle":
        r = _positive(spec, "r")

        def circle(s, order):
            return np.append(_rotating(r, 1 / r, s, order), 0.0)

        return Curve(circle, name=f"Circle(r={r:g})")

    if spec.kind == "Helix":
        a = _positive(spec, "a")
        try:
            b = float(_param(spec, "b"))
        except (TypeError, ValueError):
            raise InvalidSpec("Helix: parameter 'b' must be a number") from None
        w = math.hypot(a, b)

        def helix(s, order):
            z = b * s / w if order == 0 else (b / w if order == 1 else 0.0)
            return np.append(_rotating(a, 1 / w, s, order), z)

        return Curve(helix, name=f"Helix(a={a:g}, b={b:g})")

    if spec.kind == "SphereLatitude":
        alpha = float(_param(spec, "alpha"))
        if not 0 < alpha < math.pi:
            raise InvalidSpec(f"SphereLatitude: alpha must lie in (0, pi), got {alpha}")
        sa, ca = math.sin(alpha), math.cos(alpha)

        def latitude(s, order):
            return np.append(_rotating(sa, 1 / sa, s, order), ca if order == 0 else 0.0)

        return Curve(latitude, name=f"SphereLatitude(alpha={alpha:g})")

    return _planar_parametric(spec)


def _planar_parametric(spec: CurveSpec) -> Curve:
    pts = np.asarray(_param(spec, "points"), dtype=float)
    if pts.ndim != 2 or pts.shape[1] not in (2, 3) or len(pts) < 4:
        raise InvalidSpec("PlanarParametric needs at least 4 points of dimension 2")
    if pts.shape[1] == 3 and np.any(pts[:, 2] != pts[0, 2]):
        raise InvalidSpec("PlanarParametric points must be planar (constant z)")
    xy = pts[:, :2]
    closed = bool(spec.params.get("closed", False))
    if closed and not np.allclose(xy[0], xy[-1]):
        xy = np.vstack([xy, xy[:1]])
    chords = np.linalg.norm(np.diff(xy, axis=0), axis=1)
    if np.any(chords == 0):
        raise InvalidSpec("PlanarParametric points must be distinct")
    t = np.concatenate([[0.0], np.cumsum(chords)])
    spline = CubicSpline(t, xy, bc_type="periodic" if closed else "not-a-knot")
    z0 = pts[0, 2] if pts.shape[1] == 3 else 0.0

    def raw(tt, order):
        v = spline(tt, order)
        return np.array([v[0], v[1], z0 if order == 0 else 0.0])

    step = float(spec.params.get("grid_step", t[-1] / 4000))
    raw_curve = Curve(raw, domain=(0.0, t[-1]), unit_speed=False, name="PlanarParametric")
    return arc_length_reparameterize(raw_curve, step)


def parametric_curve(func: Callable, t0: float, t1: float, derivatives: Callable | None = None,
                     name: str = "parametric") -> Curve:
    """Wrap a raw (not unit-speed) parametrisation ``t -> func(t)``.

    ``derivatives(t, order)`` may supply exact derivatives; otherwise
    finite-difference stencils are used.
    """
    if derivatives is None:
        return Curve(lambda t, order: func(t), domain=(t0, t1), unit_speed=False,
                     analytic=False, name=name)

    def ev(t, order):
        return func(t) if order == 0 else derivatives(t, order)

    return Curve(ev, domain=(t0, t1), unit_speed=False, name=name)


def arc_length_reparameterize(raw: Curve, grid_step: float) -> Curve:
    """Reparameterise ``raw`` by arc length on its (finite) domain.

    Arc length is accumulated with Simpson's rule per grid cell and inverted
    with a monotone cubic (PCHIP) interpolant.  Derivatives with respect to
    arc length are assembled from the raw derivatives by the chain rule, so
    the returned tangent is unit length to rounding.
    """
    if raw.unit_speed:
        return raw
    t0, t1 = raw.domain
    if not (math.isfinite(t0) and math.isfinite(t1) and t1 > t0):
        raise InvalidSpec("arc-length reparameterisation needs a finite domain")
    if grid_step <= 0:
        raise InvalidSpec("grid_step must be positive")
    n = max(2, int(math.ceil((t1 - t0) / grid_step)))
    nodes = np.linspace(t0, t1, n + 1)
    mids = 0.5 * (nodes[:-1] + nodes[1:])

    def speed(t):
        return float(np.linalg.norm(raw.derivative(t, 1)))

    v_nodes = np.array([speed(t) for t in nodes])
    v_mids = np.array([speed(t) for t in mids])
    if min(v_nodes.min(), v_mids.min()) <= 1e-9:
        raise VanishingSpeed(f"{raw.name}: speed vanishes on the reparameterisation grid")
    cell = np.diff(nodes) / 6.0 * (v_nodes[:-1] + 4.0 * v_mids + v_nodes[1:])
    s_nodes = np.concatenate([[0.0], np.cumsum(cell)])
    t_of_s = PchipInterpolator(s_nodes, nodes, extrapolate=True)

    def ev(s, order):
        t = float(t_of_s(s))
        if order == 0:
            return raw.position(t)
        r1 = raw.derivative(t, 1)
        v = float(np.linalg.norm(r1))
        d1 = 1.0 / v
        if order == 1:
            return r1 * d1
        r2 = raw.derivative(t, 2)
        vt = float(r1 @ r2) / v
        d2 = -vt / v**3
        if order == 2:
            return r2 * d1**2 + r1 * d2
        r3 = raw.derivative(t, 3)
        vtt = (float(r2 @ r2) + float(r1 @ r3)) / v - vt**2 / v
        d3 = (-vtt / v**3 + 3.0 * vt**2 / v**4) / v
        return r3 * d1**3 + 3.0 * r2 * d1 * d2 + r1 * d3

    return Curve(ev, domain=(0.0, float(s_nodes[-1])), unit_speed=True,
                 name=f"arclength({raw.name})")


def make_surface(spec: SurfaceSpec) -> Surface:
    """Build an implicit oriented catalog surface."""
    if spec.kind not in SURFACE_KINDS:
        raise InvalidSpec(f"unknown surface kind {spec.kind!r}")
    unknown = set(spec.params) - set(SURFACE_KINDS[spec.kind])
    if unknown:
        raise InvalidSpec(f"{spec.kind}: unknown parameters {sorted(unknown)}")
    if spec.orientation not in ORIENTATIONS:
        raise InvalidSpec(f"orientation must be one of {ORIENTATIONS}, got {spec.orientation!r}")
    sign = 1.0 if spec.orientation == "Outward" else -1.0

    if spec.kind == "Plane":
        # z = 0, "outward" is +z
        return Surface(lambda p: p[2], lambda p: np.array([0.0, 0.0, 1.0]),
                       lambda p: np.zeros((3, 3)), sign, name="Plane(z=0)")
    if spec.kind == "Sphere":
        R = _positive(spec, "R")
        return Surface(lambda p: float(p @ p) - R * R, lambda p: 2.0 * p,
                       lambda p: 2.0 * np.eye(3), sign, name=f"Sphere(R={R:g})")
    a = _positive(spec, "a")
    h = np.diag([2.0, 2.0, 0.0])
    return Surface(lambda p: p[0] ** 2 + p[1] ** 2 - a * a,
                   lambda p: np.array([2.0 * p[0], 2.0 * p[1], 0.0]),
                   lambda p: h, sign, name=f"Cylinder(a={a:g})")

import math

import numpy as np
import pytest
from scipy.integrate import quad

from spinorframe.catalog import (
    CurveSpec,
    SurfaceSpec,
    arc_length_reparameterize,
    make_curve,
    make_surface,
    numeric_derivative,
    parametric_curve,
)
from spinorframe.errors import InvalidSpec, VanishingSpeed

RNG = np.random.default_rng(20261014)

UNIT_SPEED = [
    CurveSpec("Line", {"direction": (1, 2, 2)}),
    CurveSpec("Circle", {"r": 1}),
    CurveSpec("Circle", {"r": 0.25}),
    CurveSpec("Helix", {"a": 3, "b": 4}),
    CurveSpec("Helix", {"a": 1, "b": -0.5}),
    CurveSpec("SphereLatitude", {"alpha": math.pi / 4}),
    CurveSpec("SphereLatitude", {"alpha": 2.5}),
]

PAIRINGS = [
    (CurveSpec("SphereLatitude", {"alpha": math.pi / 4}), SurfaceSpec("Sphere", {"R": 1})),
    (CurveSpec("SphereLatitude", {"alpha": math.pi / 2}), SurfaceSpec("Sphere", {"R": 1})),
    (CurveSpec("Helix", {"a": 3, "b": 4}), SurfaceSpec("Cylinder", {"a": 3})),
    (CurveSpec("Circle", {"r": 2}), SurfaceSpec("Cylinder", {"a": 2}, "Inward")),
    (CurveSpec("Circle", {"r": 1}), SurfaceSpec("Sphere", {"R": 1})),
    (CurveSpec("Circle", {"r": 5}), SurfaceSpec("Plane")),
    (CurveSpec("Line", {"direction": (1, 1, 0)}), SurfaceSpec("Plane")),
]


def test_circle_at_zero():
    c = make_curve(CurveSpec("Circle", {"r": 1}))
    np.testing.assert_allclose(c.position(0.0), [1, 0, 0])
    assert np.linalg.norm(c.derivative(0.0, 1)) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("spec", UNIT_SPEED, ids=lambda s: s.kind)
def test_unit_speed(spec):
    c = make_curve(spec)
    assert c.unit_speed
    assert c.speed_defect(RNG.uniform(-50, 50, 1000)) <= 1e-9


@pytest.mark.parametrize("spec", UNIT_SPEED, ids=lambda s: s.kind)
def test_analytic_derivatives_match_stencils(spec):
    c = make_curve(spec)
    for s in (-1.3, 0.0, 2.2):
        for order in (1, 2, 3):
            np.testing.assert_allclose(c.derivative(s, order),
                                       c.derivative(s, order, numeric=True), atol=2e-6)


@pytest.mark.parametrize("spec", [
    CurveSpec("Helix", {"a": 0, "b": 0}),
    CurveSpec("Circle", {"r": -1}),
    CurveSpec("Circle", {}),
    CurveSpec("SphereLatitude", {"alpha": 0.0}),
    CurveSpec("SphereLatitude", {"alpha": math.pi}),
    CurveSpec("Spiral", {}),
    CurveSpec("Circle", {"r": 1, "z": 2}),
    CurveSpec("Line", {"direction": (0, 0, 0)}),
])
def test_invalid_curve_specs(spec):
    with pytest.raises(InvalidSpec):
        make_curve(spec)


@pytest.mark.parametrize("spec, p, n", [
    (SurfaceSpec("Sphere", {"R": 1}), (0, 0, 1), (0, 0, 1)),
    (SurfaceSpec("Cylinder", {"a": 3}), (3, 0, 5), (1, 0, 0)),
    (SurfaceSpec("Sphere", {"R": 1}, "Inward"), (0, 0, 1), (0, 0, -1)),
    (SurfaceSpec("Plane"), (4, -2, 0), (0, 0, 1)),
])
def test_surface_normals(spec, p, n):
    np.testing.assert_allclose(make_surface(spec).normal(p), n, atol=1e-15)


@pytest.mark.parametrize("spec", [
    SurfaceSpec("Sphere", {"R": 0}),
    SurfaceSpec("Cylinder", {}),
    SurfaceSpec("Torus", {}),
    SurfaceSpec("Sphere", {"R": 1}, "Sideways"),
])
def test_invalid_surface_specs(spec):
    with pytest.raises(InvalidSpec):
        make_surface(spec)


def test_normal_derivative_matches_differences():
    surf = make_surface(SurfaceSpec("Sphere", {"R": 2}))
    curve = make_curve(CurveSpec("Circle", {"r": 2}))
    s = 0.9
    v = curve.derivative(s, 1)
    fd = numeric_derivative(lambda u: surf.normal(curve.position(u)), s, 1)
    np.testing.assert_allclose(surf.normal_derivative(curve.position(s), v), fd, atol=1e-10)


@pytest.mark.parametrize("curve_spec, surf_spec", PAIRINGS, ids=lambda x: x.kind)
def test_pairings_stay_on_surface(curve_spec, surf_spec):
    curve, surf = make_curve(curve_spec), make_surface(surf_spec)
    assert max(surf.residual(curve.position(s)) for s in RNG.uniform(-20, 20, 500)) <= 1e-10


def test_numeric_derivative_examples():
    assert numeric_derivative(math.sin, 0.0, 1, 1e-4) == pytest.approx(1.0, abs=1e-10)
    for order in (1, 2, 3):
        assert abs(numeric_derivative(lambda s: 7.5, 0.3, order)) <= 1e-12
    assert numeric_derivative(lambda s: s**3, 0.4, 3, 1e-3) == pytest.approx(6.0, abs=1e-6)


def test_numeric_derivative_vector_valued():
    f = lambda s: np.array([math.cos(s), s**2, 1.0])
    np.testing.assert_allclose(numeric_derivative(f, 0.5, 2), [-math.cos(0.5), 2.0, 0.0],
                               atol=1e-7)


def test_numeric_derivative_rejects_bad_input():
    with pytest.raises(ValueError):
        numeric_derivative(math.sin, 0.0, 4)
    with pytest.raises(ValueError):
        numeric_derivative(math.sin, 0.0, 1, h=0.0)


def test_reparameterize_unit_speed_is_identity():
    c = make_curve(CurveSpec("Circle", {"r": 1}))
    assert arc_length_reparameterize(c, 1e-3) is c
    # same curve presented as a raw parametrisation: s(t) = t
    raw = parametric_curve(c.position, 0.0, 2 * math.pi,
                           derivatives=lambda t, k: c.derivative(t, k))
    re = arc_length_reparameterize(raw, 1e-3)
    assert re.domain[1] == pytest.approx(2 * math.pi, abs=1e-9)
    for s in np.linspace(0, 2 * math.pi, 50):
        np.testing.assert_allclose(re.position(s), c.position(s), atol=1e-9)


def ellipse():
    return parametric_curve(lambda t: np.array([2 * math.cos(t), math.sin(t), 0.0]),
                            0.0, 2 * math.pi, name="ellipse")


def test_reparameterize_ellipse_length():
    c = arc_length_reparameterize(ellipse(), 1e-3)
    oracle, _ = quad(lambda t: math.hypot(2 * math.sin(t), math.cos(t)), 0, 2 * math.pi,
                     epsabs=1e-13, epsrel=1e-13)
    assert c.domain[1] == pytest.approx(oracle, abs=1e-9)


def test_reparameterize_ellipse_unit_speed():
    c = arc_length_reparameterize(ellipse(), 1e-3)
    grid = np.linspace(0.01, c.domain[1] - 0.01, 200)
    # speed of positions themselves (tests the inversion, not the chain rule)
    fd_speed = [np.linalg.norm(numeric_derivative(c.position, s, 1, 1e-3)) for s in grid]
    assert max(abs(v - 1) for v in fd_speed) <= 1e-6
    assert c.speed_defect(grid) <= 1e-9


def test_reparameterized_derivatives_consistent():
    c = arc_length_reparameterize(ellipse(), 1e-3)
    for s in (0.5, 3.0, 7.1):
        np.testing.assert_allclose(c.derivative(s, 2),
                                   numeric_derivative(lambda u: c.derivative(u, 1), s, 1, 1e-3),
                                   atol=1e-5)
        np.testing.assert_allclose(c.derivative(s, 3),
                                   numeric_derivative(lambda u: c.derivative(u, 2), s, 1, 1e-3),
                                   atol=1e-4)


def test_reparameterize_cusp():
    cusp = parametric_curve(lambda t: np.array([t**2, t**3, 0.0]), -1.0, 1.0)
    with pytest.raises(VanishingSpeed):
        arc_length_reparameterize(cusp, 1e-3)


def test_planar_parametric_samples():
    t = np.linspace(0, 2 * math.pi, 400, endpoint=False)
    pts = np.column_stack([3 * np.cos(t), 3 * np.sin(t)]).tolist()
    c = make_curve(CurveSpec("PlanarParametric", {"points": pts, "closed": True}))
    assert c.unit_speed
    assert c.domain[1] == pytest.approx(6 * math.pi, rel=1e-6)
    assert np.linalg.norm(c.derivative(1.0, 2)) == pytest.approx(1 / 3, rel=1e-4)

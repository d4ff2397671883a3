"""Frenet and surface frames share the tangent and differ by a rotation theta.

Squaring each spinor with the symmetric sigma form gives N + iB and g + in
respectively, and they are related by the phase factor exp(i theta).  Along
a helix on its cylinder the angle is pi/2; along a wavier curve it varies, and
the geodesic torsion picks up theta'.

Run:  python demos/04_phase_relation.py
"""

import math

import numpy as np

from spinorframe import CurveSpec, ScenarioConfig, SurfaceSpec, compare_run
from spinorframe.catalog import arc_length_reparameterize, make_surface, parametric_curve
from spinorframe.geometry import consistency_residuals, unwrapped_phase

for label, curve, surface in (
    ("latitude pi/4 on sphere", CurveSpec("SphereLatitude", {"alpha": math.pi / 4}),
     SurfaceSpec("Sphere", {"R": 1})),
    ("helix(3,4) on cylinder", CurveSpec("Helix", {"a": 3, "b": 4}),
     SurfaceSpec("Cylinder", {"a": 3})),
):
    r = compare_run(ScenarioConfig(name=label, mode="Theorem2", curve=curve, surface=surface,
                                   s0=0.0, s1=10.0, step=1e-3))
    print(f"{label:24s} theta = {r.records[0].theta:.6f}  "
          f"max phase residual = {r.summary['max_theorem2_residual']:.1e}")

# A curve with varying phase: (3 cos t, 3 sin t, sin 2t) on the radius-3 cylinder
wavy = arc_length_reparameterize(
    parametric_curve(lambda t: np.array([3 * math.cos(t), 3 * math.sin(t), math.sin(2 * t)]),
                     0.0, 2 * math.pi, name="wavy"),
    1e-3)
cyl = make_surface(SurfaceSpec("Cylinder", {"a": 3}))
grid = np.linspace(0.5, 5.0, 901)
theta = unwrapped_phase(wavy, cyl, grid)
print(f"\nwavy curve: theta ranges over [{theta.min():.3f}, {theta.max():.3f}]")
res = consistency_residuals(wavy, cyl, grid)
for key, vals in res.items():
    print(f"  {key:8s} relation residual {np.max(np.abs(vals)):.1e}")

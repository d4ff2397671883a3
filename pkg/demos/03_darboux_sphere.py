"""The surface-adapted frame of a latitude circle on the unit sphere.

At polar angle pi/4 the latitude has geodesic curvature 1, normal curvature -1
(with the outward normal) and no geodesic torsion.  The spinor version of the
transport equation keeps the frame orthonormal by construction.

Run:  python demos/03_darboux_sphere.py
"""

import math

from spinorframe import CurveSpec, ScenarioConfig, SurfaceSpec, compare_run
from spinorframe.catalog import make_curve, make_surface
from spinorframe.geometry import darboux_apparatus

curve = make_curve(CurveSpec("SphereLatitude", {"alpha": math.pi / 4}))
sphere = make_surface(SurfaceSpec("Sphere", {"R": 1}))

d = darboux_apparatus(sphere, curve, 0.0)
print("at s = 0:  T =", d.T.round(6), " g =", d.g.round(6), " n =", d.n.round(6))
print(f"kappa_g = {d.kappa_g:.12f}  kappa_n = {d.kappa_n:.12f}  tau_g = {d.tau_g:.1e}")

fd = darboux_apparatus(sphere, curve, 0.0, numeric=True)
print(f"finite differences: kappa_g = {fd.kappa_g:.9f}  kappa_n = {fd.kappa_n:.9f}")

report = compare_run(ScenarioConfig(
    name="latitude", mode="Compare", curve=CurveSpec("SphereLatitude", {"alpha": math.pi / 4}),
    surface=SurfaceSpec("Sphere", {"R": 1}), s0=0.0, s1=10.0, step=1e-3))
print("\nspinor vs vector transport over [0, 10]:",
      f"{report.summary['max_err_spinor_vs_vector']:.2e}")
print("distance from the exact frame:        ",
      f"{report.summary['max_err_vs_analytic']:.2e}")

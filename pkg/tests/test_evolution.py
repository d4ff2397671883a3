import math

import numpy as np
import pytest

from spinorframe.catalog import CurveSpec, SurfaceSpec, make_curve, make_surface
from spinorframe.errors import BadGrid, NonFiniteState
from spinorframe.evolution import (
    DarbouxSignal,
    FrenetSignal,
    System,
    darboux_spinor_rhs,
    darboux_spinor_system,
    darboux_vector_rhs,
    darboux_vector_system,
    frame_to_triad,
    frenet_spinor_rhs,
    frenet_spinor_system,
    frenet_vector_rhs,
    frenet_vector_system,
    repair_frame,
    rk4_integrate,
)
from spinorframe.geometry import darboux_apparatus, frenet_apparatus
from spinorframe.spinor import Spinor, norm_sq, spinor_from_triad, triad_from_spinor
from spinorframe.verification import frame_distance

I3 = np.eye(3)


def closed_form(s):
    return Spinor(math.cos(s / 2), math.sin(s / 2))


def test_frenet_vector_rhs():
    np.testing.assert_array_equal(frenet_vector_rhs(I3, 0.0, 0.0), np.zeros((3, 3)))
    d = frenet_vector_rhs(I3, 1.0, 0.0)
    np.testing.assert_array_equal(d, [[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    d = frenet_vector_rhs(I3, 0.12, 0.16)
    np.testing.assert_allclose(d[1], [-0.12, 0, 0.16])


def test_darboux_vector_rhs():
    np.testing.assert_array_equal(darboux_vector_rhs(I3, 0, 0, 0), np.zeros((3, 3)))
    d = darboux_vector_rhs(I3, 1.0, 0.0, 0.0)
    np.testing.assert_array_equal(d, [[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    d = darboux_vector_rhs(I3, 1.0, -1.0, 0.0)
    np.testing.assert_array_equal(d[0], [0, 1, -1])


def test_frenet_spinor_rhs():
    assert frenet_spinor_rhs(Spinor(0.3, 1j), 0, 0) == Spinor(0, 0)
    assert frenet_spinor_rhs(Spinor(1, 0), 1, 0) == Spinor(0, 0.5)
    assert frenet_spinor_rhs(Spinor(1, 0), 0, 2) == Spinor(-1j, 0)


def test_darboux_spinor_rhs():
    assert darboux_spinor_rhs(Spinor(0.3, 1j), 0, 0, 0) == Spinor(0, 0)
    assert darboux_spinor_rhs(Spinor(1, 0), 1, 0, 0) == Spinor(0, 0.5)
    assert darboux_spinor_rhs(Spinor(1, 0), 0, 0, 2) == Spinor(-1j, 0)


def test_darboux_spinor_rhs_reduces_to_frenet():
    # with kappa_n = 0 the two equations coincide (geodesic torsion <-> torsion)
    psi = Spinor(0.6 - 0.2j, 0.3 + 0.7j)
    assert darboux_spinor_rhs(psi, 0.4, 0.0, -1.1) == frenet_spinor_rhs(psi, 0.4, -1.1)


def test_spinor_rhs_is_triad_derivative():
    # d/ds of the projected triad equals the vector equation, checked by differences
    psi = Spinor(0.6 - 0.2j, 0.3 + 0.7j) / math.sqrt(0.98)
    kg, kn, tg = 0.7, -0.4, 0.25
    h = 1e-6
    dpsi = darboux_spinor_rhs(psi, kg, kn, tg)
    plus = triad_from_spinor(psi + h * dpsi).as_matrix()
    minus = triad_from_spinor(psi - h * dpsi).as_matrix()
    g, n, T = triad_from_spinor(psi).as_matrix()
    expected = darboux_vector_rhs(np.array([T, g, n]), kg, kn, tg)
    fd = (plus - minus) / (2 * h)
    np.testing.assert_allclose(fd[[2, 0, 1]], expected, atol=1e-8)


def test_circle_spinor_half_turn():
    n = 3142
    sys = frenet_spinor_system(FrenetSignal.constant(1.0, 0.0))
    traj = rk4_integrate(sys, Spinor(1, 0), 0.0, math.pi, math.pi / n)
    assert traj.states[-1].distance(Spinor(0, 1)) <= 1e-10


def test_circle_spinor_full_turn_negates():
    n = 6283
    sys = frenet_spinor_system(FrenetSignal.constant(1.0, 0.0))
    traj = rk4_integrate(sys, Spinor(1, 0), 0.0, 2 * math.pi, 2 * math.pi / n)
    end = traj.states[-1]
    assert end.distance(Spinor(-1, 0)) <= 1e-9
    assert frame_distance(triad_from_spinor(end), triad_from_spinor(Spinor(1, 0))) <= 1e-9


def test_zero_signal_is_exact():
    psi0 = Spinor(0.3 + 0.1j, -0.8j)
    traj = rk4_integrate(frenet_spinor_system(FrenetSignal.constant(0.0, 0.0)), psi0, 0, 1, 0.01)
    assert traj.states[-1] == psi0
    frame0 = np.array([[0.0, 0.6, 0.8], [1.0, 0.0, 0.0], [0.0, 0.8, -0.6]])
    traj = rk4_integrate(darboux_vector_system(DarbouxSignal.constant(0, 0, 0)), frame0,
                         0, 1, 0.01)
    np.testing.assert_array_equal(traj.states[-1], frame0)


def test_grid_includes_endpoints():
    traj = rk4_integrate(frenet_spinor_system(FrenetSignal.constant(1, 0)), Spinor(1, 0),
                         0.5, 2.5, 0.25)
    assert len(traj) == 9
    assert traj.grid[0] == 0.5 and traj.grid[-1] == pytest.approx(2.5)
    assert np.all(np.diff(traj.grid) > 0)


@pytest.mark.parametrize("s0, s1, step", [(0, 1, 0.3), (0, 1, 0), (1, 0, 0.1), (0, 1, -0.1)])
def test_bad_grid(s0, s1, step):
    with pytest.raises(BadGrid):
        rk4_integrate(frenet_spinor_system(FrenetSignal.constant(1, 0)), Spinor(1, 0),
                      s0, s1, step)


def test_non_finite_state():
    blowup = System("frenet_spinor", lambda s, y: Spinor(1e308, 0) * 10)
    with pytest.raises(NonFiniteState):
        rk4_integrate(blowup, Spinor(1, 0), 0, 1, 0.5)


def test_spinor_norm_conserved():
    hel = make_curve(CurveSpec("Helix", {"a": 3, "b": 4}))
    lat = make_curve(CurveSpec("SphereLatitude", {"alpha": math.pi / 4}))
    sphere = make_surface(SurfaceSpec("Sphere", {"R": 1}))
    psi0 = Spinor(0.6, 0.8j)
    fr = rk4_integrate(frenet_spinor_system(FrenetSignal.from_curve(hel)), psi0, 0, 10, 1e-3)
    db = rk4_integrate(darboux_spinor_system(DarbouxSignal.from_curve(sphere, lat)), psi0,
                       0, 10, 1e-3)
    assert np.max(fr.norm_drift()) <= 1e-10
    assert np.max(db.norm_drift()) <= 1e-10


@pytest.mark.parametrize("signal_kind", ["frenet", "darboux"])
def test_vector_frame_drift(signal_kind):
    if signal_kind == "frenet":
        sys = frenet_vector_system(FrenetSignal.constant(0.12, 0.16))
    else:
        sys = darboux_vector_system(DarbouxSignal.constant(1.0, -1.0, 0.0))
    traj = rk4_integrate(sys, I3, 0, 10, 1e-3)
    for y in traj.states[::500] + traj.states[-1:]:
        assert np.max(np.abs(y @ y.T - I3)) <= 1e-8


def test_renormalize():
    sys = frenet_spinor_system(FrenetSignal.constant(1.0, 0.3))
    traj = rk4_integrate(sys, Spinor(1, 0), 0, 20, 0.5, renormalize=True)
    assert max(abs(norm_sq(p) - 1) for p in traj.states) <= 1e-15
    vsys = frenet_vector_system(FrenetSignal.constant(1.0, 0.3))
    traj = rk4_integrate(vsys, I3, 0, 20, 0.5, renormalize=True)
    for y in traj.states:
        np.testing.assert_allclose(y @ y.T, I3, atol=1e-14)
        assert np.linalg.det(y) > 0


def test_repair_frame():
    noisy = I3 + 1e-3 * np.array([[0, 1, 0], [0.5, 0, 0.2], [0, 0, 0.1]])
    fixed = repair_frame(noisy)
    np.testing.assert_allclose(fixed @ fixed.T, I3, atol=1e-15)


def test_frenet_equivalence_helix():
    curve = make_curve(CurveSpec("Helix", {"a": 3, "b": 4}))
    f0 = frenet_apparatus(curve, 0.0)
    psi0, _ = spinor_from_triad(f0.triad())
    signal = FrenetSignal.from_curve(curve)
    vec = rk4_integrate(frenet_vector_system(signal), f0.frame(), 0, 10, 1e-2)
    spin = rk4_integrate(frenet_spinor_system(signal), psi0, 0, 10, 1e-2)
    for k in range(0, len(vec), 50):
        assert frame_distance(frame_to_triad(vec.states[k]),
                              triad_from_spinor(spin.states[k])) <= 1e-8


def test_darboux_equivalence_cylinder():
    curve = make_curve(CurveSpec("Helix", {"a": 3, "b": 4}))
    surf = make_surface(SurfaceSpec("Cylinder", {"a": 3}))
    d0 = darboux_apparatus(surf, curve, 0.0)
    phi0, _ = spinor_from_triad(d0.triad())
    signal = DarbouxSignal.from_curve(surf, curve)
    vec = rk4_integrate(darboux_vector_system(signal), d0.frame(), 0, 10, 1e-2)
    spin = rk4_integrate(darboux_spinor_system(signal), phi0, 0, 10, 1e-2)
    for k in range(0, len(vec), 50):
        assert frame_distance(frame_to_triad(vec.states[k]),
                              triad_from_spinor(spin.states[k])) <= 1e-8


def test_rk4_fourth_order():
    errs = []
    for n in (32, 64, 128):
        traj = rk4_integrate(frenet_spinor_system(FrenetSignal.constant(1, 0)), Spinor(1, 0),
                             0, 4 * math.pi, 4 * math.pi / n)
        errs.append(max(p.distance(closed_form(s)) for p, s in zip(traj.states, traj.grid)))
    for coarse, fine in zip(errs, errs[1:]):
        assert 8 <= coarse / fine <= 32

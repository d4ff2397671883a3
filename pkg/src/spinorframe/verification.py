"""Agreement metrics between spinor transport, vector transport and analytic frames."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .catalog import make_curve, make_surface
from .errors import CurvatureVanishes, ScenarioInvalid
from .evolution import (
    DarbouxSignal,
    FrenetSignal,
    Trajectory,
    darboux_spinor_system,
    darboux_vector_system,
    frenet_spinor_system,
    frenet_vector_system,
    rk4_integrate,
)
from .geometry import darboux_apparatus, frame_phase, frenet_apparatus
from .spinor import Spinor, Triad, mate, sigma_bilinear, spinor_from_triad

__all__ = [
    "METRICS",
    "SampleRecord",
    "ComparisonReport",
    "Theorem2Residual",
    "frame_distance",
    "spinor_lift",
    "theorem2_residual",
    "compare_run",
    "frame_run",
    "run_scenario",
]

METRICS = ("err_spinor_vs_vector", "err_vs_analytic", "norm_drift",
           "theorem2_residual", "tangent_residual")


def frame_distance(t1: Triad, t2: Triad) -> float:
    """Largest Euclidean distance between corresponding triad vectors."""
    return max(float(np.linalg.norm(u - v)) for u, v in
               ((t1.a, t2.a), (t1.b, t2.b), (t1.c, t2.c)))


def spinor_lift(frames: Trajectory) -> Trajectory:
    """Lift a frame trajectory to a sign-continuous spinor trajectory."""
    spinors = []
    for triad in frames.triads():
        psi, _ = spinor_from_triad(triad)
        if spinors and psi.distance(spinors[-1]) > (-psi).distance(spinors[-1]):
            psi = -psi
        spinors.append(psi)
    return Trajectory(frames.grid, spinors, frames.kind.replace("vector", "spinor"),
                      frames.step, frames.renormalize)


class Theorem2Residual(NamedTuple):
    bilinear: float
    tangent: float


def _tangent(psi: Spinor) -> np.ndarray:
    return -sigma_bilinear(mate(psi), psi)


def theorem2_residual(psi: Spinor, phi: Spinor, theta: float) -> Theorem2Residual:
    """Residual of ``psi^t sigma psi = exp(i theta) phi^t sigma phi``.

    Also reports the distance between the tangents the two spinors induce.
    """
    lhs = sigma_bilinear(psi, psi)
    rhs = complex(math.cos(theta), math.sin(theta)) * sigma_bilinear(phi, phi)
    return Theorem2Residual(float(np.linalg.norm(lhs - rhs)),
                            float(np.linalg.norm(_tangent(psi) - _tangent(phi))))


@dataclass
class SampleRecord:
    s: float
    T: tuple
    e1: tuple
    e2: tuple
    kappa_like: tuple
    err_spinor_vs_vector: float | None = None
    err_vs_analytic: float | None = None
    norm_drift: float | None = None
    theta: float | None = None
    theorem2_residual: float | None = None
    tangent_residual: float | None = None


@dataclass
class ComparisonReport:
    scenario: str
    mode: str
    records: list[SampleRecord]
    metadata: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.summary:
            self.summary = self.compute_summary()

    def column(self, name: str) -> list:
        return [getattr(r, name) for r in self.records]

    def compute_summary(self) -> dict:
        out = {}
        for name in METRICS:
            values = [v for v in self.column(name) if v is not None]
            out[f"max_{name}"] = max(values) if values else None
            out[f"mean_{name}"] = math.fsum(values) / len(values) if values else None
        return out

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "mode": self.mode,
            "metadata": self.metadata,
            "records": [asdict(r) for r in self.records],
            "summary": self.summary,
        }


def _vec(v) -> tuple:
    return tuple(float(x) for x in v)


def _cached(signal):
    return lru_cache(maxsize=None)(signal)


def _setup(scenario):
    if not scenario.s1 > scenario.s0:
        raise ScenarioInvalid(f"{scenario.name}: s1={scenario.s1} must exceed s0={scenario.s0}")
    if scenario.step > scenario.s1 - scenario.s0:
        raise ScenarioInvalid(f"{scenario.name}: step exceeds the range")
    curve = make_curve(scenario.curve)
    lo, hi = curve.domain
    if scenario.s0 < lo or scenario.s1 > hi:
        raise ScenarioInvalid(f"{scenario.name}: range [{scenario.s0}, {scenario.s1}] "
                              f"outside curve domain [{lo}, {hi}]")
    surface = make_surface(scenario.surface) if scenario.surface is not None else None
    return curve, surface


def _metadata(scenario, n, systems):
    meta = {
        "label": scenario.name,
        "curve": {"kind": scenario.curve.kind, **_jsonable(scenario.curve.params)},
        "surface": None,
        "s0": scenario.s0,
        "s1": scenario.s1,
        "step": scenario.step,
        "renormalize": scenario.renormalize,
        "samples": n,
        "systems": systems,
    }
    if scenario.surface is not None:
        meta["surface"] = {"kind": scenario.surface.kind,
                           "orientation": scenario.surface.orientation,
                           **_jsonable(scenario.surface.params)}
    return meta


def _jsonable(params):
    return {k: (np.asarray(v).tolist() if isinstance(v, (list, tuple, np.ndarray)) else v)
            for k, v in params.items()}


def compare_run(scenario) -> ComparisonReport:
    """Integrate the vector and spinor systems of a scenario side by side.

    Without a surface the Frenet pair is run; with one, the Darboux pair, and
    when the curvature stays positive the Frenet spinor as well, so that the
    phase relation between the two spinors can be checked.
    """
    curve, surface = _setup(scenario)
    s0, s1, h, renorm = scenario.s0, scenario.s1, scenario.step, scenario.renormalize

    if surface is None:
        start = frenet_apparatus(curve, s0)
        signal = FrenetSignal(_cached(FrenetSignal.from_curve(curve)))
        vec_sys, spin_sys = frenet_vector_system(signal), frenet_spinor_system(signal)

        def analytic(s):
            return frenet_apparatus(curve, s)

        def kappa_like(s):
            return (*signal(s), None)
    else:
        start = darboux_apparatus(surface, curve, s0)
        signal = DarbouxSignal(_cached(DarbouxSignal.from_curve(surface, curve)))
        vec_sys, spin_sys = darboux_vector_system(signal), darboux_spinor_system(signal)

        def analytic(s):
            return darboux_apparatus(surface, curve, s)

        def kappa_like(s):
            return signal(s)

    psi0, _ = spinor_from_triad(start.triad())
    vec = rk4_integrate(vec_sys, start.frame(), s0, s1, h, renorm)
    spin = rk4_integrate(spin_sys, psi0, s0, s1, h, renorm)
    systems = [vec_sys.kind, spin_sys.kind]

    frenet_spin, frenets = None, None
    if surface is not None:
        try:
            frenets = [frenet_apparatus(curve, s) for s in vec.grid]
        except CurvatureVanishes:
            if scenario.mode == "Theorem2":
                raise
            frenets = None
    if frenets is not None:
        fsignal = FrenetSignal(_cached(FrenetSignal.from_curve(curve)))
        fsys = frenet_spinor_system(fsignal)
        psi_f0, _ = spinor_from_triad(frenets[0].triad())
        frenet_spin = rk4_integrate(fsys, psi_f0, s0, s1, h, renorm)
        systems.append(fsys.kind)

    spin_triads = spin.triads()
    vec_triads = vec.triads()
    drift = spin.norm_drift()
    analytics = [analytic(s) for s in vec.grid]
    thetas = None
    if frenets is not None:
        thetas = np.unwrap([frame_phase(f, d) for f, d in zip(frenets, analytics)])

    records = []
    for k, s in enumerate(vec.grid):
        ts, tv, ta = spin_triads[k], vec_triads[k], analytics[k].triad()
        rec = SampleRecord(
            s=float(s), T=_vec(ts.c), e1=_vec(ts.a), e2=_vec(ts.b),
            kappa_like=tuple(None if x is None else float(x) for x in kappa_like(s)),
            err_spinor_vs_vector=frame_distance(ts, tv),
            err_vs_analytic=max(frame_distance(ts, ta), frame_distance(tv, ta)),
            norm_drift=float(drift[k]),
        )
        if thetas is not None:
            res = theorem2_residual(frenet_spin.states[k], spin.states[k], float(thetas[k]))
            rec.theta = float(thetas[k])
            rec.theorem2_residual = res.bilinear
            rec.tangent_residual = res.tangent
        records.append(rec)

    return ComparisonReport(scenario.name, scenario.mode, records,
                            metadata=_metadata(scenario, len(records), systems))


def frame_run(scenario) -> ComparisonReport:
    """Tabulate analytic Frenet or (with a surface) Darboux frames along a grid."""
    curve, surface = _setup(scenario)
    n = round((scenario.s1 - scenario.s0) / scenario.step)
    grid = scenario.s0 + scenario.step * np.arange(n + 1)
    records = []
    if scenario.mode == "Frenet" or surface is None:
        for s in grid:
            f = frenet_apparatus(curve, s)
            records.append(SampleRecord(float(s), _vec(f.T), _vec(f.N), _vec(f.B),
                                        (f.kappa, f.tau, None)))
        systems = ["frenet_apparatus"]
    else:
        ds = [darboux_apparatus(surface, curve, s) for s in grid]
        try:
            thetas = np.unwrap([frame_phase(frenet_apparatus(curve, s), d)
                                for s, d in zip(grid, ds)])
        except CurvatureVanishes:
            thetas = [None] * len(ds)
        for s, d, th in zip(grid, ds, thetas):
            records.append(SampleRecord(float(s), _vec(d.T), _vec(d.g), _vec(d.n),
                                        (d.kappa_g, d.kappa_n, d.tau_g),
                                        theta=None if th is None else float(th)))
        systems = ["darboux_apparatus"]
    return ComparisonReport(scenario.name, scenario.mode, records,
                            metadata=_metadata(scenario, len(records), systems))


def run_scenario(scenario) -> ComparisonReport:
    """Dispatch on ``scenario.mode``."""
    if scenario.mode in ("Darboux", "Theorem2") and scenario.surface is None:
        raise ScenarioInvalid(f"{scenario.name}: mode {scenario.mode} requires a surface")
    if scenario.mode in ("Frenet", "Darboux"):
        return frame_run(scenario)
    return compare_run(scenario)

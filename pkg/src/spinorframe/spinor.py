"""Two-component spinors and the orthonormal triads they carry.

A spinor ``psi = (psi1, psi2)`` determines three real vectors through the
symmetric bilinear form built from Cartan's matrices

    sigma1 = [[1, 0], [0, -1]]
    sigma2 = [[i, 0], [0, i]]
    sigma3 = [[0, -1], [-1, 0]]

namely ``a + ib = psi^t sigma psi`` and ``c = -mate(psi)^t sigma psi``.  The
matrices are never materialised; the explicit component formulas are used.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotOrthonormal, ZeroSpinor, ZeroTriad

__all__ = [
    "Spinor",
    "Triad",
    "mate",
    "norm_sq",
    "sigma_bilinear",
    "triad_from_spinor",
    "spinor_from_triad",
    "canonical_sign",
]

_ZERO = 1e-30
INPUT_TOL = 1e-6
IMAG_TOL = 1e-12


@dataclass(frozen=True)
class Spinor:
    """A pair of complex numbers ``(c1, c2)``.

    Supports addition, negation and multiplication by (complex) scalars so
    that generic integrators can treat it as a vector.
    """

    c1: complex
    c2: complex

    def __post_init__(self):
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))

    def __add__(self, other: "Spinor") -> "Spinor":
        return Spinor(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "Spinor") -> "Spinor":
        return Spinor(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "Spinor":
        return Spinor(-self.c1, -self.c2)

    def __mul__(self, k) -> "Spinor":
        return Spinor(k * self.c1, k * self.c2)

    __rmul__ = __mul__

    def __truediv__(self, k) -> "Spinor":
        return Spinor(self.c1 / k, self.c2 / k)

    def conj(self) -> "Spinor":
        return Spinor(self.c1.conjugate(), self.c2.conjugate())

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2], dtype=complex)

    @classmethod
    def from_array(cls, arr) -> "Spinor":
        return cls(complex(arr[0]), complex(arr[1]))

    def is_finite(self) -> bool:
        return cmath.isfinite(self.c1) and cmath.isfinite(self.c2)

    def distance(self, other: "Spinor") -> float:
        return math.sqrt(abs(self.c1 - other.c1) ** 2 + abs(self.c2 - other.c2) ** 2)


@dataclass(frozen=True)
class Triad:
    """Ordered triple of real 3-vectors ``{a, b, c}``."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))

    def as_matrix(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c])

    def scale(self) -> float:
        return float(np.linalg.norm(self.a))

    def defects(self) -> dict:
        """Invariant violations, each scaled to be dimensionless."""
        s = self.scale()
        if s <= _ZERO:
            raise ZeroTriad("triad has zero magnitude")
        na, nb, nc = (float(np.linalg.norm(v)) for v in (self.a, self.b, self.c))
        return {
            "ab": abs(float(self.a @ self.b)) / s**2,
            "bc": abs(float(self.b @ self.c)) / s**2,
            "ac": abs(float(self.a @ self.c)) / s**2,
            "mag_ab": abs(na - nb) / s,
            "mag_bc": abs(nb - nc) / s,
            "det": float(np.linalg.det(self.as_matrix())) / s**3,
        }

    def check(self, tol: float = INPUT_TOL) -> None:
        """Raise ``NotOrthonormal`` unless orthogonal, equal-length, right-handed."""
        d = self.defects()
        det = d.pop("det")
        bad = {k: v for k, v in d.items() if v > tol}
        if bad:
            raise NotOrthonormal(f"triad invariants violated: {bad}")
        if det <= 0:
            raise NotOrthonormal(f"triad is not right-handed (det={det:.3g})")


def mate(psi: Spinor) -> Spinor:
    """Return the mate ``(-conj(psi2), conj(psi1))``.

    Mating twice gives ``-psi``.
    """
    return Spinor(-psi.c2.conjugate(), psi.c1.conjugate())


def norm_sq(psi: Spinor) -> float:
    """Hermitian squared norm ``|psi1|^2 + |psi2|^2``."""
    return abs(psi.c1) ** 2 + abs(psi.c2) ** 2


def sigma_bilinear(phi: Spinor, psi: Spinor) -> np.ndarray:
    """Complex 3-vector ``phi^t sigma psi``; symmetric in its arguments."""
    p1, p2 = phi.c1, phi.c2
    q1, q2 = psi.c1, psi.c2
    return np.array(
        [p1 * q1 - p2 * q2, 1j * (p1 * q1 + p2 * q2), -(p1 * q2 + p2 * q1)],
        dtype=complex,
    )


def triad_from_spinor(psi: Spinor) -> Triad:
    """Project a spinor onto its triad ``{a, b, c}``.

    All three vectors have length ``norm_sq(psi)``.
    """
    n2 = norm_sq(psi)
    if n2 <= _ZERO:
        raise ZeroSpinor("cannot build a triad from the zero spinor")
    m = sigma_bilinear(psi, psi)
    c = -sigma_bilinear(mate(psi), psi)
    residue = float(np.max(np.abs(c.imag)))
    # c is real in exact arithmetic; anything above rounding means a bug
    assert residue <= IMAG_TOL * n2, f"imaginary residue {residue} in c"
    return Triad(m.real.copy(), m.imag.copy(), c.real.copy())


def canonical_sign(psi: Spinor, tol: float = 1e-12) -> Spinor:
    """Choose between ``psi`` and ``-psi``.

    The branch with ``Re(psi1) >= 0`` wins; ties (within ``tol`` relative to
    the spinor size) fall through to ``Im(psi1)`` and then ``Re(psi2)``,
    ``Im(psi2)``.
    """
    eps = tol * math.sqrt(norm_sq(psi))
    for x in (psi.c1.real, psi.c1.imag, psi.c2.real, psi.c2.imag):
        if abs(x) > eps:
            return psi if x > 0 else -psi
    return psi


def spinor_from_triad(t: Triad) -> tuple[Spinor, Spinor]:
    """Recover the two spinors ``(psi, -psi)`` that project onto ``t``.

    ``psi`` follows the :func:`canonical_sign` convention.
    """
    if t.scale() <= _ZERO:
        raise ZeroTriad("triad has zero magnitude")
    t.check(INPUT_TOL)
    m1, m2, m3 = (complex(x) for x in t.a + 1j * t.b)
    sq1 = (m1 - 1j * m2) / 2
    sq2 = -(m1 + 1j * m2) / 2
    prod = -m3 / 2
    if abs(sq1) >= abs(sq2):
        p1 = cmath.sqrt(sq1)
        p2 = prod / p1
    else:
        p2 = cmath.sqrt(sq2)
        p1 = prod / p2
    psi = canonical_sign(Spinor(p1, p2))
    return psi, -psi

"""A spinor, its mate, and the orthonormal triad they carry.

Run:  python demos/01_spinor_algebra.py
"""

import numpy as np

from spinorframe import Spinor, mate, norm_sq, spinor_from_triad, triad_from_spinor

psi = Spinor(0.6 + 0.0j, 0.8j)
print("psi           =", psi)
print("mate(psi)     =", mate(psi))
print("mate(mate)    =", mate(mate(psi)), "  (equals -psi)")

# The triad vectors all have length |psi|^2 and form a right-handed frame.
t = triad_from_spinor(psi)
print("\ntriad rows (a, b, c):")
print(np.round(t.as_matrix(), 12))
print("|psi|^2 =", norm_sq(psi), " det =", round(float(np.linalg.det(t.as_matrix())), 12))

# Both psi and -psi land on the same triad: the map is two-to-one.
print("\nsame triad for -psi:", np.array_equal(t.as_matrix(), triad_from_spinor(-psi).as_matrix()))

# Going back returns the pair (psi, -psi); the first one follows a fixed sign rule.
plus, minus = spinor_from_triad(t)
print("recovered     =", plus, "and", minus)

# Scaling a spinor by a unit phase e^{i t/2} rotates a and b by t around c.
rot = triad_from_spinor(psi * np.exp(0.25j))
print("\nphase 0.5 rad rotates a towards b: a.a' =",
      round(float(t.a @ rot.a), 12), "= cos 0.5 =", round(float(np.cos(0.5)), 12))

"""The six standard classes and the 19-row extended table.

Run:  python demos/03_classification.py
"""

import numpy as np

from spindual import (
    EXTENDED_LABELS,
    bilinears,
    extended_class,
    lounesto_class,
    seed_spinor,
    zero_pattern,
)

# ---------------------------------------------------------------------------
# Standard classes from deterministic seeds
# ---------------------------------------------------------------------------
print("standard seeds and their zero patterns (Phi, Theta, U, S, M):")
for k in range(1, 7):
    B = bilinears(seed_spinor(k))
    flags = "".join("0" if z else "x" for z in zero_pattern(B))
    print(f"  class {k}: pattern {flags}  ->  standard {lounesto_class(B)}, extended {extended_class(B)}")

# ---------------------------------------------------------------------------
# The singular family in chiral components: psi = (phiL, lam * i s2 conj(phiL))
# lam = 0 -> class 6, |lam| = 1 -> class 5, otherwise class 4
# ---------------------------------------------------------------------------
J = np.array([[0.0, 1.0], [-1.0, 0.0]])
phi_l = np.array([1.0, 0.4 + 0.2j])
print("\nsingular family sweep over lam:")
for lam in (0.0, 0.5, 1.0, np.exp(0.7j), 2.0):
    psi = np.concatenate([phi_l, lam * (J @ phi_l.conj())])
    print(f"  lam = {lam}: class {lounesto_class(bilinears(psi))}")

# ---------------------------------------------------------------------------
# The extended table is a strict refinement: 19 labels, everything else
# forbidden (or degenerate for the all-zero set)
# ---------------------------------------------------------------------------
print("\nextended labels:", ", ".join(EXTENDED_LABELS))

"""Bilinear covariants, the Fierz identities, and the closed-form route.

Run:  python demos/02_bilinears_and_fierz.py
"""

import numpy as np

from spindual import (
    DualCoefficients,
    bilinears,
    check_fpk,
    transformed_bilinears,
)

np.set_printoptions(precision=5, suppress=True)

rng = np.random.default_rng(7)
psi = rng.normal(size=4) + 1j * rng.normal(size=4)

# ---------------------------------------------------------------------------
# Standard-adjoint covariants are real and Fierz-consistent
# ---------------------------------------------------------------------------
B = bilinears(psi)
print("Phi  =", B.phi.real)
print("Theta=", B.theta.real)
print("U    =", B.u.real)
print("S    =", B.s.real)
print("M    =\n", B.m.real)
print("Sigma (dual of M) =\n", B.sigma.real)

report = check_fpk(B)
print("\nFierz residuals (max over indices, scale-normalized):")
for name, value in report.residuals.items():
    print(f"  {name:40s} {value:.2e}")
print("passes at 1e-10:", report.passes)

# a deliberate violation is pinned to the identity it breaks
broken_u = B.u.copy()
broken_u[2] += 1.0
from spindual import BilinearSet

bad = check_fpk(BilinearSet(B.phi, B.theta, broken_u, B.s, B.m))
print("\nafter corrupting U:", bad.passes, "| worst:", bad.worst_identity())

# ---------------------------------------------------------------------------
# Generalized dual: matrix route vs closed forms
# ---------------------------------------------------------------------------
dual = DualCoefficients(
    a=0.2 + 0.1j, b=-0.7, c=1.3, d=0.4, e=-0.9,
    v=rng.normal(size=4), n=rng.normal(size=4), h=rng.normal(size=6),
)
direct = bilinears(psi, dual.to_multivector())
closed = transformed_bilinears(B, dual)
print("\ngeneralized Phi~ (matrix route) :", direct.phi)
print("generalized Phi~ (closed form)  :", closed.phi)
deviation = max(
    abs(direct.phi - closed.phi),
    abs(direct.theta - closed.theta),
    np.abs(direct.u - closed.u).max(),
    np.abs(direct.s - closed.s).max(),
    np.abs(direct.m - closed.m).max(),
)
print("max deviation over all components:", deviation)

"""Unit-square constraint branches, the flag-pole dual, and the omega law.

Run:  python demos/04_dual_families.py
"""

import numpy as np

from spindual import (
    DualCoefficients,
    a_zero_branch,
    bilinears,
    d1_for_unit_iq,
    extended_class,
    majorana_dual,
    omega,
    unit_constraint,
    us_family,
    us_reduced_bilinears,
)
from spindual.representatives import seed_spinor

rng = np.random.default_rng(3)

# ---------------------------------------------------------------------------
# The square-to-identity constraint system has exactly two branches
# ---------------------------------------------------------------------------
report = unit_constraint(DualCoefficients(a=1.0, c=0.0, d=0.0, e=0.0))
print("a=1 (rest zero):", report.branch, "| max residual", report.max_residual)

dc = a_zero_branch(alpha=0.7, d=0.0, e=0.0)
print("a=0, c=cosh(0.7), e=sinh(0.7):", unit_constraint(dc).branch)

bad = a_zero_branch(alpha=1.0, d=0.5, e=0.1)
print("alpha=1, d=0.5, e=0.1:", bad)  # infeasible, with the residual

# ---------------------------------------------------------------------------
# Flag-pole seeds: the cosh/sinh dual keeps every surviving bilinear real
# ---------------------------------------------------------------------------
psi5 = seed_spinor(5)
dual = majorana_dual(0.8, [1, 0, 0, 0], [0, 0, 0, 1])
Bt = bilinears(psi5, dual.to_multivector())
print("\nflag-pole seed under the cosh/sinh dual:")
print("  Phi~       =", Bt.phi)
print("  Theta~     =", Bt.theta)
print("  S~         =", Bt.s)
print("  i U~       =", (1j * Bt.u))
print("  -i M~[0,3] =", (-1j * Bt.m[0, 3]))
print("  class:", extended_class(Bt))

# ---------------------------------------------------------------------------
# The U/S family: with iq = 1 and beta = 0 everything scales by omega
# ---------------------------------------------------------------------------
psi = rng.normal(size=4) + 1j * rng.normal(size=4)
B = bilinears(psi)
c1, c2, d2, e = 0.4, -0.3, 0.2, 0.6
d1 = d1_for_unit_iq(c2, e, B.phi)
p = us_family(0, 0, c1, c2, d1, d2, e, B).p
b = B.phi - p * B.theta
a = 0.35
fam = us_family(a, b, c1, c2, d1, d2, e, B)
w = omega(a, b, B.phi, B.theta)
Bt = bilinears(psi, fam.coefficients.to_multivector())
print("\nomega =", w)
print("Phi~ / Phi   =", Bt.phi / B.phi)
print("Theta~/Theta =", Bt.theta / B.theta)
print("U~ / U       =", (Bt.u / B.u))

# omega = 0 in the reduced closed system leaves only M~: the 5.1 pattern
a0 = -(B.phi / B.theta) * (B.phi - b) - B.theta
reduced = us_reduced_bilinears(B, a0, b, c1, c2, d1, d2, e)
print("\nomega -> 0 (reduced system): class", extended_class(reduced))
fam0 = us_family(a0, b, c1, c2, d1, d2, e, B)
Bt0 = bilinears(psi, fam0.coefficients.to_multivector())
print("omega -> 0 (matrix route): class", extended_class(Bt0),
      "(the dual row annihilates; see README on this divergence)")

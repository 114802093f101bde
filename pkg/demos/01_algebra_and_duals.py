"""Tour of the fixed Clifford representation and the dual-matrix closed form.

Run:  python demos/01_algebra_and_duals.py
"""

import numpy as np

from spindual import Multivector, gamma, matrix_of, multivector_of, pi, sigma_upper

np.set_printoptions(precision=4, suppress=True, linewidth=120)

# ---------------------------------------------------------------------------
# The generators: metric diag(+,-,-,-), chiral blocks
# ---------------------------------------------------------------------------
print("gamma^0 =\n", gamma(0).real)
print("\ngamma^3 =\n", gamma(3).real)
print("\npi = i g0 g1 g2 g3 =\n", pi().real)

print("\nanticommutators {gamma^a, gamma^b} / 2 (should be the metric):")
table = np.array(
    [[(gamma(a) @ gamma(b) + gamma(b) @ gamma(a))[0, 0].real / 2 for b in range(4)] for a in range(4)]
)
print(table)

# ---------------------------------------------------------------------------
# A general dual structure: 16 coefficients -> one matrix -> back
# ---------------------------------------------------------------------------
rng = np.random.default_rng(1)
A = Multivector(
    scalar=0.3,
    pseudoscalar=-1.1,
    vector=rng.normal(size=4),
    pseudovector=rng.normal(size=4),
    bivector=rng.normal(size=6),
)
D = matrix_of(A)
print("\ndual matrix D(A) =\n", D)

recovered = multivector_of(D)
print("\ntrace projections recover the coefficients:")
print("  scalar      ", recovered.scalar)
print("  pseudoscalar", recovered.pseudoscalar)
print("  vector      ", recovered.vector.real)
print("  pseudovector", recovered.pseudovector.real)
print("  bivector    ", recovered.bivector.real)
print("round-trip error:", np.abs(matrix_of(recovered) - D).max())

# ---------------------------------------------------------------------------
# Reality criterion: real coefficients <=> gamma^0 D^dagger gamma^0 = D
# ---------------------------------------------------------------------------
sym = gamma(0) @ D.conj().T @ gamma(0)
print("\nself-adjointness residual for the real dual above:", np.abs(sym - D).max())
complex_dual = Multivector(scalar=1j)
Dc = matrix_of(complex_dual)
print("... and for a complex one:", np.abs(gamma(0) @ Dc.conj().T @ gamma(0) - Dc).max())

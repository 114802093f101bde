"""Shared construction helpers for the test suite."""

import numpy as np

from spindual.duals import DualCoefficients

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])  # i * sigma_y, real form


def random_spinor(rng, scale=1.0):
    return scale * (rng.normal(size=4) + 1j * rng.normal(size=4))


def random_dual(rng, real=False):
    def c():
        return rng.normal() if real else rng.normal() + 1j * rng.normal()

    def cvec(k):
        return rng.normal(size=k) if real else rng.normal(size=k) + 1j * rng.normal(size=k)

    return DualCoefficients(
        a=c(), b=c(), c=c(), d=c(), e=c(), v=cvec(4), n=cvec(4), h=cvec(6)
    )


def chiral_spinor(phi_l, lam):
    """Spinor with right-handed half ``lam * i sigma_y conj(phi_l)``.

    ``lam = 0`` gives a single-chirality spinor, ``|lam| = 1`` a flag-pole
    one, any other nonzero ``lam`` a flag-dipole one.
    """
    phi_l = np.asarray(phi_l, dtype=complex).reshape(2)
    return np.concatenate([phi_l, lam * (J2 @ phi_l.conj())])


def random_singular_spinor(rng, kind):
    """kind in {4, 5, 6}: flag-dipole, flag-pole, single-chirality."""
    phi_l = rng.normal(size=2) + 1j * rng.normal(size=2)
    if kind == 6:
        return chiral_spinor(phi_l, 0.0)
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
    if kind == 5:
        return chiral_spinor(phi_l, phase)
    return chiral_spinor(phi_l, phase * rng.uniform(1.5, 3.0))


def random_timelike_spacelike(rng):
    """Random real (v, n) with v.v = 1, n.n = -1, v.n = 0 (lower components)."""
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    r = rng.uniform(-0.8, 0.8)
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    v_up = np.concatenate([[np.cosh(r)], np.sinh(r) * direction])
    w_up = np.concatenate([[0.0], rng.normal(size=3)])
    w_up = w_up - (w_up @ eta @ v_up) * v_up  # project out v (v.v = +1)
    n_up = w_up / np.sqrt(-(w_up @ eta @ w_up))
    return eta @ v_up, eta @ n_up


def phase_aligned_error(recovered, psi):
    """Max componentwise error after aligning the global phase.

    Canonical-phase comparison is discontinuous when two components tie in
    magnitude (exact for flag-pole spinors), so round trips are compared
    at the optimal relative phase instead.
    """
    recovered = np.asarray(recovered, dtype=complex)
    psi = np.asarray(psi, dtype=complex)
    overlap = np.vdot(recovered, psi)
    if abs(overlap) == 0:
        return float(max(np.abs(recovered).max(), np.abs(psi).max()))
    return float(np.abs(recovered * (overlap / abs(overlap)) - psi).max())


def max_component_deviation(B1, B2):
    return float(
        max(
            abs(B1.phi - B2.phi),
            abs(B1.theta - B2.theta),
            np.abs(B1.u - B2.u).max(),
            np.abs(B1.s - B2.s).max(),
            np.abs(B1.m - B2.m).max(),
        )
    )

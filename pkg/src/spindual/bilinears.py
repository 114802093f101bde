"""Spinors, dual rows and bilinear covariants.

A spinor is a plain length-4 complex array in the fixed chiral
representation.  From a spinor ``psi`` and a dual row ``psi~`` the package
forms the bilinear covariants

    Phi   = psi~ psi                 scalar
    Theta = i psi~ pi psi            pseudoscalar
    U^a   = psi~ gamma^a psi         vector
    S^a   = psi~ gamma^a pi psi      pseudovector
    M^ab  = 2i psi~ sigma^ab psi     bivector

with ``psi~`` either the standard adjoint ``psi^dagger gamma^0`` or the
generalized adjoint ``psi^dagger gamma^0 D`` for a multivector dual ``D``.
``Sigma^ab`` is never stored: it is always the bivector dual
``-1/2 epsilon^{abij} M_ij`` of ``M``.

``transformed_bilinears`` evaluates the same generalized covariants
directly from the standard ones, without touching the spinor.  Its term
structure was fixed once against the first-principles matrix route; in
particular the pseudovector terms enter with the sign dictated by the
``pi gamma^a`` basis element, and the bivector contractions carry the
pair-storage normalization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import ETA, EPSILON_UPPER, PAIRS, gamma, pi, sigma_upper
from .multivector import Multivector, matrix_of, pairs_to_tensor, tensor_to_pairs

__all__ = [
    "BilinearSet",
    "spinor",
    "spinor_is_zero",
    "dirac_dual",
    "general_dual",
    "bilinears",
    "sigma_dual",
    "transformed_bilinears",
]

# Gamma structures of the five covariants, stacked once:
# rows 0..15 hold I-like slots: [gamma^0..3, gamma^0..3 pi, 2i sigma^(6 pairs), I, i pi]
_G_U = np.stack([gamma(a) for a in range(4)])
_G_S = np.stack([gamma(a) @ pi() for a in range(4)])
_G_M = np.stack([2j * sigma_upper(a, b) for a, b in PAIRS])


def spinor(components) -> np.ndarray:
    """Coerce 4 complex components into a spinor array."""
    psi = np.asarray(components, dtype=complex).reshape(4)
    return psi


def spinor_is_zero(psi: np.ndarray, tol: float = 0.0) -> bool:
    return bool(np.max(np.abs(psi)) <= tol)


def sigma_dual(M: np.ndarray) -> np.ndarray:
    """Bivector dual ``-1/2 epsilon^{abij} M_ij`` of an upper-index tensor."""
    M_low = ETA @ M @ ETA
    return -0.5 * np.einsum("abij,ij->ab", EPSILON_UPPER, M_low)


def _as_antisymmetric(m) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.shape == (6,):
        arr = pairs_to_tensor(arr)
    if arr.shape != (4, 4):
        raise ValueError("M must be a 4x4 tensor or its 6 pair components")
    if not np.allclose(arr, -arr.T, atol=1e-12 * max(1.0, np.abs(arr).max())):
        raise ValueError("M must be antisymmetric")
    out = 0.5 * (arr - arr.T)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class BilinearSet:
    """The five bilinear covariants; ``u``, ``s``, ``m`` carry upper indices."""

    phi: complex
    theta: complex
    u: np.ndarray
    s: np.ndarray
    m: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "phi", complex(self.phi))
        object.__setattr__(self, "theta", complex(self.theta))
        u = np.asarray(self.u, dtype=complex).reshape(4).copy()
        s = np.asarray(self.s, dtype=complex).reshape(4).copy()
        u.flags.writeable = False
        s.flags.writeable = False
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "m", _as_antisymmetric(self.m))

    @classmethod
    def zero(cls) -> "BilinearSet":
        return cls(0.0, 0.0, np.zeros(4), np.zeros(4), np.zeros((4, 4)))

    @property
    def sigma(self) -> np.ndarray:
        """Derived dual bivector ``Sigma^ab``."""
        return sigma_dual(self.m)

    def m_pairs(self) -> np.ndarray:
        return tensor_to_pairs(self.m)

    def norm_inf(self) -> float:
        return float(
            max(
                abs(self.phi),
                abs(self.theta),
                np.abs(self.u).max(),
                np.abs(self.s).max(),
                np.abs(self.m).max(),
            )
        )

    def is_real(self, tol: float = 1e-12) -> bool:
        scale = max(1.0, self.norm_inf())
        worst = max(
            abs(self.phi.imag),
            abs(self.theta.imag),
            np.abs(self.u.imag).max(),
            np.abs(self.s.imag).max(),
            np.abs(self.m.imag).max(),
        )
        return bool(worst <= tol * scale)

    def scaled(self, factor: complex) -> "BilinearSet":
        return BilinearSet(
            factor * self.phi,
            factor * self.theta,
            factor * self.u,
            factor * self.s,
            factor * self.m,
        )


def dirac_dual(psi: np.ndarray) -> np.ndarray:
    """Standard adjoint row ``psi^dagger gamma^0``."""
    return spinor(psi).conj() @ gamma(0)


def general_dual(psi: np.ndarray, A: Multivector) -> np.ndarray:
    """Generalized adjoint row ``psi^dagger gamma^0 D(A)``; reduces to
    :func:`dirac_dual` for the identity multivector."""
    return dirac_dual(psi) @ matrix_of(A)


def bilinears(psi: np.ndarray, A: Multivector | None = None) -> BilinearSet:
    """Bilinear covariants of ``psi`` under the Dirac dual or a general dual."""
    psi = spinor(psi)
    row = dirac_dual(psi) if A is None else general_dual(psi, A)
    phi = row @ psi
    theta = 1j * (row @ pi() @ psi)
    u = np.einsum("j,ajk,k->a", row, _G_U, psi)
    s = np.einsum("j,ajk,k->a", row, _G_S, psi)
    m_pairs = np.einsum("j,ajk,k->a", row, _G_M, psi)
    return BilinearSet(phi, theta, u, s, pairs_to_tensor(m_pairs))


def transformed_bilinears(
    dirac: BilinearSet,
    coeffs,
    require_fpk: bool = True,
    fpk_tol: float = 1e-8,
) -> BilinearSet:
    """Generalized bilinears as closed forms over standard (Dirac-dual) ones.

    ``coeffs`` is a :class:`spindual.duals.DualCoefficients`.  For any input
    set that actually comes from a spinor, the result equals
    ``bilinears(psi, coeffs.to_multivector())`` componentwise.

    The closed forms are valid rearrangements only on inputs obeying the
    Fierz identities, so the input is gated by default; pass
    ``require_fpk=False`` to evaluate the same term structure on a formal
    set that deliberately violates them.
    """
    if require_fpk:
        from .fierz import check_fpk

        report = check_fpk(dirac, tol=fpk_tol)
        if not report.passes:
            raise ValueError(
                "input bilinears violate the Fierz identities "
                f"(worst: {report.worst_identity()} = {report.max_residual:.3e}); "
                "they do not come from a spinor"
            )

    phi, theta, u, s, m = dirac.phi, dirac.theta, dirac.u, dirac.s, dirac.m
    sg = dirac.sigma
    u_low = ETA @ u
    s_low = ETA @ s

    V = coeffs.c * coeffs.v            # lower indices
    N = coeffs.d * coeffs.n
    H = coeffs.e * pairs_to_tensor(coeffs.h)
    V_up = ETA @ V
    N_up = ETA @ N
    H_mixed = ETA @ H                   # H^j_b
    H_up = ETA @ H @ ETA

    a, b = coeffs.a, coeffs.b

    phi_t = a * phi + b * theta + V @ u - N @ s + 0.25 * np.einsum("ab,ab->", H, m)
    theta_t = (
        a * theta - b * phi + 1j * (V @ s) - 1j * (N @ u)
        - 0.25 * np.einsum("ab,ab->", H, sg)
    )

    u_t = (
        a * u
        - 1j * b * s
        + V_up * phi
        - 1j * np.einsum("a,aj->j", V, m)
        - 1j * N_up * theta
        + np.einsum("a,aj->j", N, sg)
        - 0.5j * np.einsum("jb,b->j", H_mixed, u)
        + 0.25 * np.einsum("abjc,ab,c->j", EPSILON_UPPER, H, s_low)
    )
    s_t = (
        a * s
        - 1j * b * u
        - 1j * V_up * theta
        + np.einsum("a,aj->j", V, sg)
        + N_up * phi
        - 1j * np.einsum("a,aj->j", N, m)
        - 0.5j * np.einsum("jb,b->j", H_mixed, s)
        + 0.25 * np.einsum("abjc,ab,c->j", EPSILON_UPPER, H, u_low)
    )

    vu = np.einsum("j,k->jk", V_up, u)
    vu = vu - vu.T
    ns = np.einsum("j,k->jk", N_up, s)
    ns = ns - ns.T
    hm = np.einsum("jb,bk->jk", H_mixed, m)
    m_t = (
        a * m
        - b * sg
        + 1j * vu
        + np.einsum("ajkc,a,c->jk", EPSILON_UPPER, V, s_low)
        - 1j * ns
        - np.einsum("ajkc,a,c->jk", EPSILON_UPPER, N, u_low)
        + 0.5 * H_up * phi
        - 0.25 * np.einsum("ab,abjk->jk", H, EPSILON_UPPER) * theta
        - 0.5j * (hm - hm.T)
    )
    return BilinearSet(phi_t, theta_t, u_t, s_t, m_t)

"""Residual verification of the Fierz rearrangement identities.

Any bilinear set derived from a single spinor under the standard adjoint
satisfies ten quadratic relations.  ``check_fpk`` evaluates all of them as
residuals, normalized by the squared sup-norm of the set (the identities
are quadratic, so this makes the pass verdict scale invariant).
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from .algebra import ETA, EPSILON_LOWER
from .bilinears import BilinearSet

__all__ = ["FpkReport", "check_fpk", "IDENTITY_NAMES"]

IDENTITY_NAMES = (
    "M*Phi - Sigma*Theta = eps(U,S)",
    "M*Theta + Sigma*Phi = U^S",
    "M.U = Theta*S",
    "Sigma.U = Phi*S",
    "M.S = Theta*U",
    "Sigma.S = Phi*U",
    "M.M/2 = Phi^2 - Theta^2",
    "Sigma.Sigma/2 = Theta^2 - Phi^2",
    "M.Sigma/2 = -2*Theta*Phi",
    "U.U = Phi^2 + Theta^2",
    "S.S = -(Phi^2 + Theta^2)",
    "U.S = 0",
)


@dataclass(frozen=True)
class FpkReport:
    residuals: MappingProxyType
    max_residual: float
    passes: bool
    tol: float

    def worst_identity(self) -> str:
        return max(self.residuals, key=self.residuals.get)


def check_fpk(B: BilinearSet, tol: float = 1e-10) -> FpkReport:
    """Evaluate every Fierz identity on ``B``.

    Residuals are max absolute deviations over free indices, divided by
    ``max(1, ||B||_inf^2)``.  Never raises on a failing set.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    phi, theta, u, s, m = B.phi, B.theta, B.u, B.s, B.m
    sg = B.sigma
    u_low, s_low = ETA @ u, ETA @ s
    m_low, sg_low = ETA @ m @ ETA, ETA @ sg @ ETA

    eps_us = np.einsum("j,k,jkab->ab", u, s, EPSILON_LOWER)
    u_wedge_s = np.einsum("a,b->ab", u_low, s_low)
    u_wedge_s = u_wedge_s - u_wedge_s.T

    uu = u_low @ u
    ss = s_low @ s
    us = u_low @ s
    mm = 0.5 * np.einsum("ab,ab->", m_low, m)
    sgsg = 0.5 * np.einsum("ab,ab->", sg_low, sg)
    msg = 0.5 * np.einsum("ab,ab->", m_low, sg)

    raw = {
        IDENTITY_NAMES[0]: np.abs(m_low * phi - sg_low * theta - eps_us).max(),
        IDENTITY_NAMES[1]: np.abs(m_low * theta + sg_low * phi - u_wedge_s).max(),
        IDENTITY_NAMES[2]: np.abs(np.einsum("ik,i->k", m_low, u) - theta * s_low).max(),
        IDENTITY_NAMES[3]: np.abs(np.einsum("ik,i->k", sg_low, u) - phi * s_low).max(),
        IDENTITY_NAMES[4]: np.abs(np.einsum("ik,i->k", m_low, s) - theta * u_low).max(),
        IDENTITY_NAMES[5]: np.abs(np.einsum("ik,i->k", sg_low, s) - phi * u_low).max(),
        IDENTITY_NAMES[6]: abs(mm - (phi**2 - theta**2)),
        IDENTITY_NAMES[7]: abs(sgsg - (theta**2 - phi**2)),
        IDENTITY_NAMES[8]: abs(msg + 2.0 * theta * phi),
        IDENTITY_NAMES[9]: abs(uu - (phi**2 + theta**2)),
        IDENTITY_NAMES[10]: abs(ss + (phi**2 + theta**2)),
        IDENTITY_NAMES[11]: abs(us),
    }
    scale = max(1.0, B.norm_inf() ** 2)
    residuals = {k: float(v) / scale for k, v in raw.items()}
    max_residual = max(residuals.values())
    return FpkReport(
        residuals=MappingProxyType(residuals),
        max_residual=max_residual,
        passes=max_residual <= tol,
        tol=tol,
    )

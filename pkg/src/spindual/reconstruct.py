"""Fierz aggregate assembly and spinor recovery from standard bilinears.

A bilinear set obeying the Fierz identities is the trace decomposition of
a rank-one aggregate ``Z = psi psibar``.  Assembling ``Z`` from the set
and factoring it back therefore recovers the spinor up to a global phase:

    Z = (Phi I + U_a gamma^a + S_a (pi gamma^a)) / 4
        - (Theta/4) * i pi ... assembled as a multivector with components
    scalar = Phi/4, pseudoscalar = -Theta/4,
    vector = U_low/4, pseudovector = S_low/4, bivector pairs = M_low/2.

The coefficients were fixed once by requiring the trace projections of
``psi psibar`` to reproduce the bilinears; the round trip is the contract.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ETA
from .bilinears import BilinearSet, bilinears, dirac_dual
from .fierz import check_fpk
from .multivector import Multivector, matrix_of, tensor_to_pairs

__all__ = ["FierzAggregate", "aggregate", "invert", "canonical_phase"]


@dataclass(frozen=True)
class FierzAggregate:
    """Algebra element whose trace projections reproduce a bilinear set."""

    matrix: np.ndarray

    def rank(self, rtol: float = 1e-8) -> int:
        s = np.linalg.svd(self.matrix, compute_uv=False)
        return int(np.sum(s > rtol * max(s[0], 1e-300)))


def aggregate(B: BilinearSet, fpk_tol: float = 1e-8) -> FierzAggregate:
    """Assemble the rank-one aggregate of a Fierz-consistent bilinear set."""
    report = check_fpk(B, tol=fpk_tol)
    if not report.passes:
        raise ValueError(
            "bilinear set violates the Fierz identities "
            f"(worst: {report.worst_identity()} = {report.max_residual:.3e})"
        )
    mv = Multivector(
        scalar=B.phi / 4.0,
        pseudoscalar=-B.theta / 4.0,
        vector=(ETA @ B.u) / 4.0,
        pseudovector=(ETA @ B.s) / 4.0,
        bivector=tensor_to_pairs(ETA @ B.m @ ETA) / 2.0,
    )
    return FierzAggregate(matrix=matrix_of(mv))


def canonical_phase(psi: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the largest-magnitude component is real
    and positive.  Idempotent."""
    psi = np.asarray(psi, dtype=complex)
    k = int(np.argmax(np.abs(psi)))
    if abs(psi[k]) == 0:
        return psi
    out = psi * (abs(psi[k]) / psi[k])
    out[k] = abs(psi[k])  # exactly real, so the map is idempotent
    return out


# fixed reference spinors for rank-one factoring; the second is used when
# the first is annihilated by the aggregate
_REFERENCES = (
    np.array([1.0, 0.0, 0.0, 0.0], dtype=complex),
    np.array([0.0, 1.0, 0.0, 0.0], dtype=complex),
    np.array([0.0, 0.0, 1.0, 0.0], dtype=complex),
    np.array([0.0, 0.0, 0.0, 1.0], dtype=complex),
)


def invert(B: BilinearSet, fpk_tol: float = 1e-8) -> np.ndarray:
    """Recover a spinor whose Dirac-dual bilinears equal ``B``.

    The result is unique up to a global unit phase, canonicalized by
    :func:`canonical_phase`.  Raises for Fierz-violating input and for a
    vanishing aggregate.
    """
    Z = aggregate(B, fpk_tol=fpk_tol).matrix
    znorm = np.abs(Z).max()
    if znorm <= 1e-14 * max(1.0, B.norm_inf()):
        raise ValueError("zero aggregate: the bilinear set carries no spinor")
    # Z r = psi * (psibar r); pick the reference with the largest image
    images = [Z @ r for r in _REFERENCES]
    k = int(np.argmax([np.abs(v).max() for v in images]))
    direction = images[k]
    # |psi|^2 equals U^0
    scale = np.sqrt(B.u[0].real) / np.linalg.norm(direction)
    return canonical_phase(direction * scale)

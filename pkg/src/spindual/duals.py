"""Parameterized families of dual structures.

The general dual is ``a I + i b pi + c v_a gamma^a + d n_a (pi gamma^a)
+ i e h_(ab) sigma^ab``: five scalar parameters ``a..e`` over a fixed
tensor structure ``(v, n, h)``.  This module provides

* the coefficient record and its conversion to a :class:`Multivector`;
* the scalar constraint system that makes the dual square to the
  identity, with its two solution branches;
* the reality-preserving dual family for flag-pole (Majorana-type) seeds;
* the family whose tensor structure is built from a seed's own ``U`` and
  ``S`` vectors, together with its reduced two-parameter form ``(p, q)``
  and the scaling factor ``omega``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .algebra import ETA
from .bilinears import BilinearSet, sigma_dual, tensor_to_pairs
from .multivector import Multivector, matrix_of, multivector_of, pairs_to_tensor

__all__ = [
    "DualCoefficients",
    "ConstraintReport",
    "Infeasible",
    "unit_constraint",
    "a_zero_branch",
    "majorana_dual",
    "UsFamilyDual",
    "us_family",
    "d1_for_unit_iq",
    "omega",
    "us_reduced_bilinears",
    "CANONICAL_V",
    "CANONICAL_N",
]

#: canonical unit time-like / space-like structure vectors (lower indices)
CANONICAL_V = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
CANONICAL_N = np.array([0.0, 0.0, 0.0, 1.0], dtype=complex)


def _vec(x) -> np.ndarray:
    arr = np.asarray(x, dtype=complex).reshape(4).copy()
    arr.flags.writeable = False
    return arr


def _pairs(x) -> np.ndarray:
    arr = np.asarray(x, dtype=complex)
    if arr.shape == (4, 4):
        arr = tensor_to_pairs(arr)
    arr = arr.reshape(6).copy()
    arr.flags.writeable = False
    return arr


def antisymmetrized(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """``x_a y_b - x_b y_a`` as a full 4x4 tensor (no 1/2)."""
    w = np.einsum("a,b->ab", np.asarray(x, dtype=complex), np.asarray(y, dtype=complex))
    return w - w.T


@dataclass(frozen=True)
class DualCoefficients:
    """Scalar parameters ``a..e`` over a tensor structure ``(v, n, h)``.

    ``v`` and ``n`` are lower-index 4-vectors, ``h`` the six bivector pair
    components.  The scalings ``c, d, e`` multiply the vector, pseudovector
    and bivector structure respectively and carry no independent freedom.
    """

    a: complex = 0.0
    b: complex = 0.0
    c: complex = 1.0
    d: complex = 1.0
    e: complex = 1.0
    v: np.ndarray = field(default_factory=lambda: np.zeros(4, dtype=complex))
    n: np.ndarray = field(default_factory=lambda: np.zeros(4, dtype=complex))
    h: np.ndarray = field(default_factory=lambda: np.zeros(6, dtype=complex))

    def __post_init__(self):
        for name in "abcde":
            object.__setattr__(self, name, complex(getattr(self, name)))
        object.__setattr__(self, "v", _vec(self.v))
        object.__setattr__(self, "n", _vec(self.n))
        object.__setattr__(self, "h", _pairs(self.h))

    @classmethod
    def identity(cls) -> "DualCoefficients":
        return cls(a=1.0)

    @classmethod
    def scalar_pseudoscalar(cls, a: complex, b: complex) -> "DualCoefficients":
        return cls(a=a, b=b)

    def to_multivector(self) -> Multivector:
        return Multivector(
            scalar=self.a,
            pseudoscalar=self.b,
            vector=self.c * self.v,
            pseudovector=self.d * self.n,
            bivector=self.e * self.h,
        )

    def matrix(self) -> np.ndarray:
        return matrix_of(self.to_multivector())

    def is_real(self, tol: float = 1e-12) -> bool:
        parts = np.concatenate(
            [[self.a, self.b], self.c * self.v, self.d * self.n, self.e * self.h]
        )
        return bool(np.max(np.abs(parts.imag)) <= tol)


@dataclass(frozen=True)
class ConstraintReport:
    """Residuals of the six scalar equations for a unit-square dual,
    the detected solution branch, and matrix-level diagnostics."""

    residuals: MappingProxyType
    branch: str                  # "dirac", "a_zero" or "none"
    scalar_deviation: float      # |scalar part of D^2 - 1|
    nonscalar_residual: float    # largest non-scalar coefficient of D^2

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())


@dataclass(frozen=True)
class Infeasible:
    residual: float
    reason: str


def unit_constraint(coeffs: DualCoefficients, tol: float = 1e-9) -> ConstraintReport:
    """Evaluate the unit-square constraint system on ``a..e``.

    The six equations are checked verbatim on the scalar parameters; they
    presume unit-normalized structure (``v.v = 1``, ``n.n = -1``,
    ``v.n = 0``, ``h`` built from ``v`` and ``n``).  The actual matrix
    square is decomposed as well: its scalar deviation and its largest
    non-scalar coefficient are reported as diagnostics, since a general
    ``(v, n, h)`` makes the square pick up non-scalar parts and the pair
    normalization of ``h`` rescales the bivector contribution.
    """
    a, b, c, d, e = coeffs.a, coeffs.b, coeffs.c, coeffs.d, coeffs.e
    residuals = {
        "a^2-b^2+c^2+d^2-e^2=1": abs(a * a - b * b + c * c + d * d - e * e - 1.0),
        "ab=0": abs(a * b),
        "ac=0": abs(a * c),
        "ad=0": abs(a * d),
        "ae=0": abs(a * e),
        "cd-be=0": abs(c * d - b * e),
    }

    small = lambda z: abs(z) <= tol
    branch = "none"
    if all(residuals[k] <= tol for k in residuals):
        if small(b) and small(c) and small(d) and small(e) and abs(a * a - 1.0) <= tol:
            branch = "dirac"
        elif small(a):
            cosh_a = c + d
            sinh_a = b + e
            if abs(cosh_a**2 - sinh_a**2 - 1.0) <= tol and cosh_a.real > 0:
                branch = "a_zero"

    D = coeffs.matrix()
    sq = multivector_of(D @ D)
    nonscalar = float(
        max(
            abs(sq.pseudoscalar),
            np.abs(sq.vector).max(),
            np.abs(sq.pseudovector).max(),
            np.abs(sq.bivector).max(),
        )
    )
    return ConstraintReport(
        residuals=MappingProxyType({k: float(v) for k, v in residuals.items()}),
        branch=branch,
        scalar_deviation=float(abs(sq.scalar - 1.0)),
        nonscalar_residual=nonscalar,
    )


def a_zero_branch(alpha: float, d: float, e: float, tol: float = 1e-12):
    """Coefficients on the ``a = 0`` solution branch.

    Returns ``a=0, c=cosh(alpha)-d, b=sinh(alpha)-e`` over the canonical
    structure vectors, provided the branch constraint
    ``(cosh(alpha)-d) d = (sinh(alpha)-e) e`` holds; otherwise an
    :class:`Infeasible` record with the constraint residual.
    """
    c = np.cosh(alpha) - d
    b = np.sinh(alpha) - e
    residual = abs(c * d - b * e)
    if residual > tol:
        return Infeasible(float(residual), "(cosh(alpha)-d)*d != (sinh(alpha)-e)*e")
    h = tensor_to_pairs(antisymmetrized(CANONICAL_V, CANONICAL_N))
    return DualCoefficients(a=0.0, b=b, c=c, d=d, e=e, v=CANONICAL_V, n=CANONICAL_N, h=h)


def majorana_dual(alpha: float, v, n) -> DualCoefficients:
    """Reality-preserving dual for flag-pole seeds:
    ``cosh(alpha) v_a gamma^a + i sinh(alpha) v_[a n_b] sigma^ab``.

    ``v`` must be time-like, ``n`` space-like, and the two orthogonal
    (components are lower-index).  Falls on the ``a = 0`` constraint
    branch with ``c = cosh(alpha)``, ``e = sinh(alpha)``.
    """
    v = np.asarray(v, dtype=complex).reshape(4)
    n = np.asarray(n, dtype=complex).reshape(4)
    if np.abs(v.imag).max() > 0 or np.abs(n.imag).max() > 0:
        raise ValueError("v and n must be real 4-vectors")
    v_up, n_up = ETA @ v.real, ETA @ n.real
    vv = float(v.real @ v_up)
    nn = float(n.real @ n_up)
    vn = float(v.real @ n_up)
    if vv <= 0:
        raise ValueError(f"v must be time-like (v.v > 0), got v.v = {vv:.6g}")
    if nn >= 0:
        raise ValueError(f"n must be space-like (n.n < 0), got n.n = {nn:.6g}")
    if abs(vn) > 1e-12 * max(1.0, abs(vv), abs(nn)):
        raise ValueError(f"v and n must be orthogonal, got v.n = {vn:.6g}")
    h = tensor_to_pairs(antisymmetrized(v, n))
    return DualCoefficients(
        a=0.0, b=0.0, c=np.cosh(alpha), d=0.0, e=np.sinh(alpha), v=v, n=n, h=h
    )


@dataclass(frozen=True)
class UsFamilyDual:
    """Dual built from a seed's own vector bilinears, with the derived
    reduced parameters ``p`` and ``q``."""

    coefficients: DualCoefficients
    p: complex
    q: complex


def us_family(
    a: complex,
    b: complex,
    c1: complex,
    c2: complex,
    d1: complex,
    d2: complex,
    e: complex,
    seed: BilinearSet,
) -> UsFamilyDual:
    """Dual with ``v = c1 U + c2 S``, ``n = d1 U + d2 S`` and
    ``h = U_[a S_b]`` taken from the seed's lowered bilinears.

    The seed is assumed Fierz-consistent; only then do the generalized
    bilinears close on two derived parameters:

        p = c1 + d2 - (e/2) Theta
        q = -c2 - d1 - (i e/2) Phi

    (both oracle-pinned against the first-principles route; see
    :func:`us_reduced_bilinears` for the reduced system they enter).
    """
    u_low = ETA @ seed.u
    s_low = ETA @ seed.s
    v = c1 * u_low + c2 * s_low
    n = d1 * u_low + d2 * s_low
    h = tensor_to_pairs(antisymmetrized(u_low, s_low))
    coeffs = DualCoefficients(a=a, b=b, c=1.0, d=1.0, e=e, v=v, n=n, h=h)
    p = c1 + d2 - 0.5 * e * seed.theta
    q = -c2 - d1 - 0.5j * e * seed.phi
    return UsFamilyDual(coefficients=coeffs, p=complex(p), q=complex(q))


def d1_for_unit_iq(c2: complex, e: complex, phi: complex) -> complex:
    """The ``d1`` that makes ``i q = 1`` for given ``c2``, ``e`` and seed ``Phi``."""
    return 1j - c2 - 0.5j * e * phi


def omega(a: complex, b: complex, phi: complex, theta: complex) -> complex:
    """Uniform scaling factor ``a + (Phi/Theta)(Phi - b) + Theta`` of the
    reduced family at ``iq = 1`` and ``b - iq Phi + p Theta = 0``."""
    if theta == 0:
        raise ZeroDivisionError(
            "omega is undefined for Theta = 0; singular seeds are handled by "
            "the dedicated class constructors in spindual.representatives"
        )
    return a + (phi / theta) * (phi - b) + theta


def us_reduced_bilinears(
    seed: BilinearSet,
    a: complex,
    b: complex,
    c1: complex,
    c2: complex,
    d1: complex,
    d2: complex,
    e: complex,
) -> BilinearSet:
    """The reduced closed system of the ``U/S`` family.

    With ``p`` and ``q`` as in :func:`us_family` and
    ``alpha = a + p Phi + i q Theta``, ``beta = b - i q Phi + p Theta``:

        Phi~   = a Phi + b Theta + p (Phi^2 + Theta^2)
        Theta~ = a Theta - b Phi + i q (Phi^2 + Theta^2)
        U~     = alpha U - i beta S
        S~     = alpha S - i beta U
        M~     = a M - b Sigma + i q U^[j S^k]

    On seeds obeying the Fierz identities the first four lines equal the
    first-principles route identically.  The ``M~`` line keeps ``U^[j S^k]``
    as an independent expression; the first-principles result is
    ``alpha M - beta Sigma``, which coincides with this line exactly when
    ``p = 0`` and otherwise differs by ``p (Phi M - Theta Sigma)``.
    """
    phi, theta = seed.phi, seed.theta
    fam = us_family(a, b, c1, c2, d1, d2, e, seed)
    p, q = fam.p, fam.q
    alpha = a + p * phi + 1j * q * theta
    beta = b - 1j * q * phi + p * theta
    norm2 = phi * phi + theta * theta
    us = np.einsum("j,k->jk", seed.u, seed.s)
    us = us - us.T
    return BilinearSet(
        a * phi + b * theta + p * norm2,
        a * theta - b * phi + 1j * q * norm2,
        alpha * seed.u - 1j * beta * seed.s,
        alpha * seed.s - 1j * beta * seed.u,
        a * seed.m - b * sigma_dual(seed.m) + 1j * q * us,
    )

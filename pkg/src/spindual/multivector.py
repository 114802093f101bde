"""Multivectors of the spacetime algebra and their 4x4 matrix realization.

A multivector is stored over the graded basis

    I, pi, gamma^a, pi gamma^a, sigma^ab

as ``scalar * I + 1j * pseudoscalar * pi + v_a gamma^a + n_a (pi gamma^a)
+ 1j * sum_pairs h_(ab) sigma^ab``.  The vector and pseudovector components
carry lower indices; the bivector is stored on the six independent index
pairs ``(01, 02, 03, 12, 23, 31)``.

``matrix_of`` and ``multivector_of`` are mutually inverse.  The inverse
direction is a set of trace projections:

    scalar       =  Tr(D) / 4
    pseudoscalar = -i Tr(D pi) / 4
    v_a          =  Tr(D gamma_a) / 4
    n_a          =  Tr(D gamma_a pi) / 4
    h_(ab)       = -i Tr(D (sigma^ab)^dagger)

The pseudovector basis element is ``pi gamma^a`` (not ``gamma^a pi``); with
the opposite order the trace projection for ``n_a`` would return ``-n_a``
and the decomposition would not invert.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import ETA, PAIRS, gamma, gamma_lower, pi, sigma_upper

__all__ = ["Multivector", "matrix_of", "multivector_of", "pairs_to_tensor", "tensor_to_pairs"]

_PAIR_INDEX = {p: i for i, p in enumerate(PAIRS)}


def pairs_to_tensor(h: np.ndarray) -> np.ndarray:
    """Expand six pair components into the full antisymmetric 4x4 tensor."""
    H = np.zeros((4, 4), dtype=complex)
    for i, (a, b) in enumerate(PAIRS):
        H[a, b] = h[i]
        H[b, a] = -h[i]
    return H

def tensor_to_pairs(H: np.ndarray) -> np.ndarray:
    """Read the six independent components off an antisymmetric 4x4 tensor."""
    return np.array([H[a, b] for a, b in PAIRS], dtype=complex)


def _as_complex(x, shape) -> np.ndarray:
    arr = np.asarray(x, dtype=complex).reshape(shape)
    out = arr.copy()
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class Multivector:
    """Element of the complexified spacetime algebra in graded components.

    ``vector`` and ``pseudovector`` are lower-index 4-arrays; ``bivector``
    holds the six pair components in the order ``PAIRS``.
    """

    scalar: complex = 0.0
    pseudoscalar: complex = 0.0
    vector: np.ndarray = field(default_factory=lambda: np.zeros(4, dtype=complex))
    pseudovector: np.ndarray = field(default_factory=lambda: np.zeros(4, dtype=complex))
    bivector: np.ndarray = field(default_factory=lambda: np.zeros(6, dtype=complex))

    def __post_init__(self):
        object.__setattr__(self, "scalar", complex(self.scalar))
        object.__setattr__(self, "pseudoscalar", complex(self.pseudoscalar))
        object.__setattr__(self, "vector", _as_complex(self.vector, (4,)))
        object.__setattr__(self, "pseudovector", _as_complex(self.pseudovector, (4,)))
        object.__setattr__(self, "bivector", _as_complex(self.bivector, (6,)))

    @classmethod
    def identity(cls) -> "Multivector":
        return cls(scalar=1.0)

    def h(self, a: int, b: int) -> complex:
        """Bivector component ``h_(ab)``; antisymmetric in the indices."""
        if a == b:
            return 0.0 + 0.0j
        if (a, b) in _PAIR_INDEX:
            return complex(self.bivector[_PAIR_INDEX[(a, b)]])
        return -complex(self.bivector[_PAIR_INDEX[(b, a)]])

    def bivector_tensor(self) -> np.ndarray:
        """Full antisymmetric lower-index bivector tensor ``h_ab``."""
        return pairs_to_tensor(self.bivector)

    def is_real(self, tol: float = 1e-12) -> bool:
        """True when all 16 coefficients are real, equivalently when the
        matrix ``D`` satisfies ``gamma^0 D^dagger gamma^0 = D``."""
        comps = np.concatenate(
            [[self.scalar, self.pseudoscalar], self.vector, self.pseudovector, self.bivector]
        )
        return bool(np.max(np.abs(comps.imag)) <= tol)


def matrix_of(A: Multivector) -> np.ndarray:
    """4x4 matrix of a multivector in the fixed representation."""
    D = A.scalar * np.eye(4, dtype=complex) + 1j * A.pseudoscalar * pi()
    for a in range(4):
        D = D + A.vector[a] * gamma(a) + A.pseudovector[a] * (pi() @ gamma(a))
    for i, (a, b) in enumerate(PAIRS):
        D = D + 1j * A.bivector[i] * sigma_upper(a, b)
    return D


def multivector_of(D: np.ndarray) -> Multivector:
    """Graded components of a 4x4 matrix, via trace projections."""
    D = np.asarray(D, dtype=complex)
    if D.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {D.shape}")
    scalar = np.trace(D) / 4.0
    pseudoscalar = -1j * np.trace(D @ pi()) / 4.0
    vector = np.array([np.trace(D @ gamma_lower(a)) / 4.0 for a in range(4)])
    pseudovector = np.array([np.trace(D @ gamma_lower(a) @ pi()) / 4.0 for a in range(4)])
    bivector = np.array(
        [-1j * np.trace(D @ sigma_upper(a, b).conj().T) for a, b in PAIRS]
    )
    return Multivector(scalar, pseudoscalar, vector, pseudovector, bivector)

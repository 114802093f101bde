"""Fixed matrix representation of the complexified spacetime Clifford algebra.

Everything in this package is expressed in one frozen set of conventions:

* metric ``eta = diag(+1, -1, -1, -1)``;
* chiral (Weyl) gamma matrices with ``gamma^0 = offdiag(I2, I2)`` and
  ``gamma^k = [[0, -sigma_k], [sigma_k, 0]]``;
* parity-odd element ``pi = i gamma^0 gamma^1 gamma^2 gamma^3 = diag(I2, -I2)``;
* orientation ``epsilon_{0123} = +1`` (so ``epsilon^{0123} = -1``);
* Lorentz generators ``sigma^{ab} = [gamma^a, gamma^b] / 4``.

The block signs are not arbitrary: they are the unique Weyl-form assignment
for which the closed-form dual matrix and the trace-projection coefficient
table (see :mod:`spindual.multivector`) hold entry by entry.  ``check()``
re-derives the structural identities at import time.

All tensor components handled by this package are stored with lower
indices; raising is always an explicit contraction with ``ETA``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

__all__ = [
    "ETA",
    "EPSILON_LOWER",
    "EPSILON_UPPER",
    "PAIRS",
    "Conventions",
    "CONVENTIONS",
    "gamma",
    "gamma_lower",
    "pi",
    "sigma",
    "sigma_upper",
    "check",
]

ETA = np.diag([1.0, -1.0, -1.0, -1.0])

#: independent bivector index pairs, in the storage order used everywhere
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1))

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)
_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def _block(a, b, c, d):
    return np.block([[a, b], [c, d]])


_GAMMA = np.stack(
    [_block(_Z2, _I2, _I2, _Z2)]
    + [_block(_Z2, -s, s, _Z2) for s in (_SX, _SY, _SZ)]
)
_PI = _block(_I2, _Z2, _Z2, -_I2)


def _levi_civita() -> np.ndarray:
    eps = np.zeros((4, 4, 4, 4))
    for p in permutations(range(4)):
        q = list(p)
        sign = 1
        for i in range(4):
            while q[i] != i:
                j = q[i]
                q[i], q[j] = q[j], q[i]
                sign = -sign
        eps[p] = sign
    return eps


EPSILON_LOWER = _levi_civita()          # epsilon_{abcd}, epsilon_{0123} = +1
EPSILON_UPPER = -EPSILON_LOWER          # epsilon^{abcd} = det(eta) epsilon_{abcd}

_SIGMA_UPPER = np.zeros((4, 4, 4, 4), dtype=complex)
for _a in range(4):
    for _b in range(4):
        _SIGMA_UPPER[_a, _b] = (_GAMMA[_a] @ _GAMMA[_b] - _GAMMA[_b] @ _GAMMA[_a]) / 4.0

for _m in (_GAMMA, _PI, _SIGMA_UPPER, ETA, EPSILON_LOWER, EPSILON_UPPER):
    _m.flags.writeable = False


def gamma(index: int) -> np.ndarray:
    """Gamma matrix with an upper index, ``gamma^index``."""
    if index not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be 0..3, got {index!r}")
    return _GAMMA[index]


def gamma_lower(index: int) -> np.ndarray:
    """Gamma matrix with a lower index, ``gamma_index = eta_{index,index} gamma^index``."""
    if index not in (0, 1, 2, 3):
        raise ValueError(f"gamma index must be 0..3, got {index!r}")
    return ETA[index, index] * _GAMMA[index]


def pi() -> np.ndarray:
    """The parity-odd element: squares to the identity, anticommutes with every gamma."""
    return _PI


def sigma(a: int, b: int) -> np.ndarray:
    """Lorentz generator with lower indices, ``[gamma_a, gamma_b] / 4``."""
    if a not in (0, 1, 2, 3) or b not in (0, 1, 2, 3):
        raise ValueError(f"sigma indices must be 0..3, got {(a, b)!r}")
    return ETA[a, a] * ETA[b, b] * _SIGMA_UPPER[a, b]


def sigma_upper(a: int, b: int) -> np.ndarray:
    """Lorentz generator with upper indices, ``[gamma^a, gamma^b] / 4``."""
    if a not in (0, 1, 2, 3) or b not in (0, 1, 2, 3):
        raise ValueError(f"sigma indices must be 0..3, got {(a, b)!r}")
    return _SIGMA_UPPER[a, b]


@dataclass(frozen=True)
class Conventions:
    """Frozen record of the representation choices, used to fingerprint results."""

    metric_signature: tuple[int, int, int, int] = (1, -1, -1, -1)
    epsilon_0123: int = 1
    pi_upper_block_sign: int = 1
    representation: str = "weyl-chiral-v1"

    def fingerprint(self) -> dict:
        return {
            "metric": "".join("+" if s > 0 else "-" for s in self.metric_signature),
            "epsilon_0123": self.epsilon_0123,
            "pi_upper_block_sign": self.pi_upper_block_sign,
            "representation": self.representation,
        }


CONVENTIONS = Conventions()


def check(atol: float = 1e-15) -> None:
    """Verify the structural identities of the representation.

    Raises ``AssertionError`` if any of the defining relations fails:
    the anticommutator algebra, the properties of the parity-odd element,
    and the duality relation ``2i sigma_ab = epsilon_abcd pi sigma^cd``.
    """
    ident = np.eye(4)
    for a in range(4):
        for b in range(4):
            anti = _GAMMA[a] @ _GAMMA[b] + _GAMMA[b] @ _GAMMA[a]
            assert np.allclose(anti, 2.0 * ETA[a, b] * ident, atol=atol)
    assert np.allclose(_PI @ _PI, ident, atol=atol)
    assert np.allclose(_PI, 1j * _GAMMA[0] @ _GAMMA[1] @ _GAMMA[2] @ _GAMMA[3], atol=atol)
    for a in range(4):
        assert np.allclose(_PI @ _GAMMA[a] + _GAMMA[a] @ _PI, 0.0, atol=atol)
    for a in range(4):
        for b in range(4):
            lhs = 2j * sigma(a, b)
            rhs = np.einsum("cd,cdij->ij", EPSILON_LOWER[a, b], _PI @ _SIGMA_UPPER)
            assert np.allclose(lhs, rhs, atol=atol)


check()

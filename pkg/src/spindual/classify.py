"""Zero-pattern classification of bilinear sets.

The standard table sorts spinors into six classes by which of
``(Phi, Theta, U, S, M)`` vanish under the Dirac dual; generalized duals
unlock a 19-row table.  Classification is purely a question of which
blocks are zero, decided here by a scale-aware threshold rule
(:class:`ZeroPolicy`).  Zero-ness is tested on complex magnitudes, so sets
with purely imaginary blocks classify the same as their real counterparts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bilinears import BilinearSet

__all__ = [
    "ZeroPolicy",
    "zero_pattern",
    "lounesto_class",
    "extended_class",
    "STANDARD_LABELS",
    "EXTENDED_LABELS",
    "OUTSIDE_STANDARD",
    "FORBIDDEN",
    "DEGENERATE",
]

STANDARD_LABELS = ("1", "2", "3", "4", "5", "6")
EXTENDED_LABELS = (
    "1", "1.1", "1.2", "1.3", "1.4", "1.5", "1.6", "1.7",
    "2", "2.1", "3", "3.1", "4", "4.1", "5", "5.1", "6", "6.1", "7",
)
OUTSIDE_STANDARD = "outside standard table"
FORBIDDEN = "forbidden"
DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ZeroPolicy:
    """A block counts as zero when its sup-norm is at most
    ``max(abs_floor, rel_factor * ||B||_inf)``."""

    abs_floor: float = 1e-9
    rel_factor: float = 1e-9

    def threshold(self, scale: float) -> float:
        return max(self.abs_floor, self.rel_factor * scale)


DEFAULT_POLICY = ZeroPolicy()

# zero-flag tuples (Phi, Theta, U, S, M), True = block vanishes
_EXTENDED_TABLE = {
    (False, False, False, False, False): "1",
    (False, False, False, False, True): "1.1",
    (False, False, False, True, False): "1.2",
    (False, False, False, True, True): "1.3",
    (False, False, True, False, False): "1.4",
    (False, False, True, True, True): "1.5",
    (False, False, True, True, False): "1.6",
    (False, False, True, False, True): "1.7",
    (False, True, False, False, False): "2",
    (False, True, False, False, True): "2.1",
    (True, False, False, False, False): "3",
    (True, False, False, False, True): "3.1",
    (True, True, False, False, False): "4",
    (True, True, True, False, False): "4.1",
    (True, True, False, True, False): "5",
    (True, True, True, True, False): "5.1",
    (True, True, False, False, True): "6",
    (True, True, True, False, True): "6.1",
    (True, True, False, True, True): "7",
}

_STANDARD_TABLE = {
    (False, False, False, False, False): "1",
    (False, True, False, False, False): "2",
    (True, False, False, False, False): "3",
    (True, True, False, False, False): "4",
    (True, True, False, True, False): "5",
    (True, True, False, False, True): "6",
}


def zero_pattern(B: BilinearSet, policy: ZeroPolicy = DEFAULT_POLICY):
    """Zero flags for the five blocks ``(Phi, Theta, U, S, M)``.

    The derived ``Sigma`` shares ``M``'s flag by construction, so it is not
    tested separately.
    """
    thr = policy.threshold(B.norm_inf())
    return (
        abs(B.phi) <= thr,
        abs(B.theta) <= thr,
        bool(np.abs(B.u).max() <= thr),
        bool(np.abs(B.s).max() <= thr),
        bool(np.abs(B.m).max() <= thr),
    )


def lounesto_class(B: BilinearSet, policy: ZeroPolicy = DEFAULT_POLICY) -> str:
    """Standard six-class label, or :data:`OUTSIDE_STANDARD` for patterns
    the standard table does not contain."""
    return _STANDARD_TABLE.get(zero_pattern(B, policy), OUTSIDE_STANDARD)


def extended_class(B: BilinearSet, policy: ZeroPolicy = DEFAULT_POLICY) -> str:
    """Label in the 19-row extended table.

    The all-zero set maps to :data:`DEGENERATE`; the twelve patterns absent
    from the table map to :data:`FORBIDDEN`.
    """
    pattern = zero_pattern(B, policy)
    if all(pattern):
        return DEGENERATE
    return _EXTENDED_TABLE.get(pattern, FORBIDDEN)

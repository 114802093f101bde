"""Numerical toolkit for generalized spinor dual structures on the
complexified spacetime Clifford algebra.

Capabilities: the fixed chiral matrix representation and multivector
trace decomposition; bilinear covariants under the standard and
generalized adjoints; Fierz identity checking; the standard six-class
and extended 19-class zero-pattern tables; parameterized dual families
(unit-square branches, the reality-preserving flag-pole family, the U/S
family with its omega law); explicit class representatives; and spinor
recovery from a bilinear set.
"""

from .algebra import (
    CONVENTIONS,
    EPSILON_LOWER,
    EPSILON_UPPER,
    ETA,
    PAIRS,
    Conventions,
    gamma,
    gamma_lower,
    pi,
    sigma,
    sigma_upper,
)
from .bilinears import (
    BilinearSet,
    bilinears,
    dirac_dual,
    general_dual,
    sigma_dual,
    spinor,
    spinor_is_zero,
    transformed_bilinears,
)
from .classify import (
    DEGENERATE,
    EXTENDED_LABELS,
    FORBIDDEN,
    OUTSIDE_STANDARD,
    STANDARD_LABELS,
    ZeroPolicy,
    extended_class,
    lounesto_class,
    zero_pattern,
)
from .duals import (
    CANONICAL_N,
    CANONICAL_V,
    ConstraintReport,
    DualCoefficients,
    Infeasible,
    UsFamilyDual,
    a_zero_branch,
    d1_for_unit_iq,
    majorana_dual,
    omega,
    unit_constraint,
    us_family,
    us_reduced_bilinears,
)
from .fierz import IDENTITY_NAMES, FpkReport, check_fpk
from .multivector import Multivector, matrix_of, multivector_of
from .reconstruct import FierzAggregate, aggregate, canonical_phase, invert
from .representatives import (
    Representative,
    SeedModification,
    TARGETS,
    VerificationResult,
    apply_modification,
    representative,
    seed_spinor,
    verify_representative,
)

__version__ = "0.1.0"

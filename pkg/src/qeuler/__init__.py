"""Exact algebra of linear q-difference operators over Q(q).

Builds the operator families attached to first-order equations
alpha*sigma(y) + y = beta, verifies the resulting identities for powers of
both q-analogs of the Euler series to arbitrary truncation order, and reads
off summability levels from Newton polygons.
"""

from .errors import (
    DegenerateSequence,
    DuplicateNode,
    IndeterminateValuation,
    InsufficientPrecision,
    MissingEndpointCoefficient,
    NonIntegerSlope,
    PoleAtSpecialization,
    QEulerError,
    UnknownIdentity,
    UnsupportedValuation,
)
from .qfield import QPolynomial, QRational
from .series import LaurentSeries, expand_rational
from .qdiff import QDiffOperator
from .constructions import (
    OperatorTower,
    SignEpsilon,
    build_Akj,
    build_Pn,
    build_beta,
    build_tower,
    build_tower_general,
    epsilon,
    euler_hat_q,
    euler_hat_xq,
    euler_xq_pair,
    solve_first_order,
)
from .newton import NewtonPolygon, SummabilityOrder, newton_polygon, summability_order
from .verify import (
    VerificationReport,
    verify_all,
    verify_catalog,
    verify_lagrange,
    verify_lemma_akj,
    verify_thm_fn,
    verify_thm_gen,
)

__version__ = "0.1.0"

__all__ = [
    "QEulerError",
    "PoleAtSpecialization",
    "IndeterminateValuation",
    "InsufficientPrecision",
    "DegenerateSequence",
    "UnsupportedValuation",
    "NonIntegerSlope",
    "MissingEndpointCoefficient",
    "DuplicateNode",
    "UnknownIdentity",
    "QPolynomial",
    "QRational",
    "LaurentSeries",
    "expand_rational",
    "QDiffOperator",
    "OperatorTower",
    "SignEpsilon",
    "build_Akj",
    "build_Pn",
    "build_beta",
    "build_tower",
    "build_tower_general",
    "epsilon",
    "euler_hat_q",
    "euler_hat_xq",
    "euler_xq_pair",
    "solve_first_order",
    "NewtonPolygon",
    "SummabilityOrder",
    "newton_polygon",
    "summability_order",
    "VerificationReport",
    "verify_all",
    "verify_catalog",
    "verify_lagrange",
    "verify_lemma_akj",
    "verify_thm_fn",
    "verify_thm_gen",
]

"""Exact-arithmetic verification of the varieties of five-dimensional
nilpotent Jordan superalgebras: identity gates, invariant regeneration,
degeneration and non-degeneration certificates, and Hasse diagrams."""

from .field import DomainError, PoleError, Rational, Scalar, rescale_exponents, scalar_arith
from .linalg import Matrix, SingularMatrixError
from .algebra import BasisChange, GradedVector, ParamSpec, SuperAlgebra, apply_basis_change, verify_iso_certificate
from .identities import (
    check_associativity,
    check_graded_identity,
    check_jordan_superidentity,
    check_supercommutativity,
    parse_identity,
)
from .invariants import (
    GradedDims,
    InvariantFingerprint,
    NotNilpotentError,
    a_functor,
    annihilator,
    assoc_center,
    even_derivation_dim,
    even_part,
    f_functor,
    fingerprint,
    nilindex,
    orbit_dim,
    power_dims,
)
from .degeneration import (
    BatteryContext,
    DegenerationResult,
    Verdict,
    battery,
    closed_set_check,
    universal_certificate,
    verify_degeneration,
    verify_nondeg_rows,
)
from .hasse import HasseGraph, build_hasse, components, export_dot, export_edge_csv
from .catalog import Catalog, DegenerationCertificate, ParseError, parse_catalog, parse_certificates
from .corpus import load_corpus

__version__ = "0.1.0"

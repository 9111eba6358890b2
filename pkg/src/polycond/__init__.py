"""Eigenvalue condition numbers for matrix polynomials.

Compute the non-homogeneous (absolute/relative) and homogeneous (differential
and chordal-metric) eigenvalue condition numbers of dense matrix polynomials,
verify the exact identities relating them, and validate them empirically by
perturbation experiments.
"""

from .cond import (
    ConditionReport,
    CotangentConditions,
    PencilBounds,
    chordal_distance,
    computability_bounds,
    cotangent_condition_numbers,
    kappa_a,
    kappa_h,
    kappa_r,
    kappa_theta,
    line_angle,
    relation_report,
)
from .docio import PolynomialDocument, read_document, write_document
from .eig import (
    EigenTriple,
    Eigenvalue,
    ProjectivePoint,
    SimplicityCertificate,
    eigentriple,
    eigenvalues,
    is_simple,
)
from .errors import (
    AmbiguousMatch,
    DocumentError,
    InvalidInput,
    NonFinite,
    NotAnEigenvalue,
    NotRegular,
    NotSimple,
    NumericalError,
    PencilOnly,
    PolycondError,
    UndefinedForInfinite,
    UndefinedForPoint,
    UndefinedForZeroOrInfinite,
)
from .generate import known_spectrum_polynomial, random_regular
from .numlin import (
    DEFAULT_TOL,
    ScalarPolynomial,
    poly_roots,
    smallest_singular_triplet,
    spectral_norm,
)
from .perturb import (
    EmpiricalEstimate,
    PerturbationSpec,
    SweepRecord,
    TARGET_A,
    TARGET_R,
    TARGET_THETA,
    closed_form_eigenvalues,
    empirical_condition,
    example_pencil,
    example_sweep,
    extremal_perturbation,
    extremal_ratio_sequence,
    perturbed_eigenvalue_shift,
)
from .poly import (
    WEIGHTS_ABS,
    WEIGHTS_COEFF,
    WEIGHTS_CUSTOM,
    WEIGHTS_MAX,
    MatrixPolynomial,
    Regularity,
    WeightScheme,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousMatch",
    "ConditionReport",
    "CotangentConditions",
    "DEFAULT_TOL",
    "DocumentError",
    "EigenTriple",
    "Eigenvalue",
    "EmpiricalEstimate",
    "InvalidInput",
    "MatrixPolynomial",
    "NonFinite",
    "NotAnEigenvalue",
    "NotRegular",
    "NotSimple",
    "NumericalError",
    "PencilBounds",
    "PencilOnly",
    "PerturbationSpec",
    "PolycondError",
    "PolynomialDocument",
    "ProjectivePoint",
    "Regularity",
    "ScalarPolynomial",
    "SimplicityCertificate",
    "SweepRecord",
    "TARGET_A",
    "TARGET_R",
    "TARGET_THETA",
    "UndefinedForInfinite",
    "UndefinedForPoint",
    "UndefinedForZeroOrInfinite",
    "WEIGHTS_ABS",
    "WEIGHTS_COEFF",
    "WEIGHTS_CUSTOM",
    "WEIGHTS_MAX",
    "WeightScheme",
    "chordal_distance",
    "closed_form_eigenvalues",
    "computability_bounds",
    "cotangent_condition_numbers",
    "eigentriple",
    "eigenvalues",
    "empirical_condition",
    "example_pencil",
    "example_sweep",
    "extremal_perturbation",
    "extremal_ratio_sequence",
    "is_simple",
    "kappa_a",
    "kappa_h",
    "kappa_r",
    "kappa_theta",
    "known_spectrum_polynomial",
    "line_angle",
    "perturbed_eigenvalue_shift",
    "poly_roots",
    "random_regular",
    "read_document",
    "relation_report",
    "smallest_singular_triplet",
    "spectral_norm",
    "write_document",
]

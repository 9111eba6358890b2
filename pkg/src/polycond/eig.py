"""Homogeneous polynomial eigenvalue problems at desk scale.

Eigenvalues are lines through the origin of C^2: a finite eigenvalue lambda0
is the line through (lambda0, 1) and the infinite eigenvalue is (1, 0).
Finite eigenvalues come from the roots of det P(lambda); the infinite
eigenvalue appears with multiplicity equal to the degree deficiency of that
determinant relative to n*k.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput, NotAnEigenvalue, NotRegular, NumericalError
from .numlin import DEFAULT_TOL, poly_roots, refine_roots, smallest_singular_triplet, spectral_norm
from .poly import MatrixPolynomial, ScalarPolynomial

# Two computed roots closer than this (chordal) are treated as one point.
MERGE_TOL = 1e-12
# Roots closer than this (chordal) are flagged non-simple rather than merged.
CLUSTER_TOL = 1e-8
# sigma_min above this fraction of scale(P) means "not an eigenvalue".
RESIDUAL_TOL = 1e-6
# Safety margin over machine epsilon when classifying determinant coefficients
# as interpolation roundoff.
_DUST_FACTOR = 64.0


@dataclass(frozen=True)
class ProjectivePoint:
    """A line through the origin of C^2, stored via a normalized representative.

    The stored pair satisfies |alpha|^2 + |beta|^2 = 1 with beta real and
    nonnegative; the infinite eigenvalue is stored exactly as (1, 0).
    """

    alpha: complex
    beta: complex

    def __post_init__(self):
        if self.alpha == 0 and self.beta == 0:
            raise InvalidInput("(0, 0) does not define a line")
        if not (cmath.isfinite(self.alpha) and cmath.isfinite(self.beta)):
            raise InvalidInput("projective point has non-finite representative")

    @classmethod
    def from_pair(cls, a: complex, b: complex) -> "ProjectivePoint":
        """Normalize an arbitrary representative (a, b) != (0, 0)."""
        a, b = complex(a), complex(b)
        if not (cmath.isfinite(a) and cmath.isfinite(b)):
            raise InvalidInput("projective representative must be finite")
        if a == 0 and b == 0:
            raise InvalidInput("(0, 0) does not define a line")
        if b == 0:
            return cls(complex(1.0), complex(0.0))
        s = math.hypot(a.real, a.imag, b.real, b.imag)
        phase = b.conjugate() / abs(b)
        return cls(a * phase / s, complex(abs(b) / s))

    @classmethod
    def from_lambda(cls, lam) -> "ProjectivePoint":
        """The line of a finite eigenvalue lambda, or (1, 0) for lambda = inf."""
        if lam == math.inf:
            return cls.infinity()
        return cls.from_pair(complex(lam), 1.0)

    @classmethod
    def infinity(cls) -> "ProjectivePoint":
        return cls(complex(1.0), complex(0.0))

    @classmethod
    def zero(cls) -> "ProjectivePoint":
        return cls(complex(0.0), complex(1.0))

    @property
    def is_infinite(self) -> bool:
        return self.beta == 0

    @property
    def is_zero(self) -> bool:
        return self.alpha == 0

    @property
    def lam(self) -> complex:
        """The quotient alpha/beta; raises for the infinite eigenvalue."""
        if self.is_infinite:
            raise InvalidInput("the infinite eigenvalue has no finite quotient")
        return self.alpha / self.beta

    @property
    def abs_lambda(self) -> float:
        return math.inf if self.is_infinite else abs(self.alpha) / abs(self.beta)

    def chordal_to(self, other: "ProjectivePoint") -> float:
        """Chordal distance |a d - b c| / (||(a,b)|| ||(c,d)||), in [0, 1]."""
        num = abs(self.alpha * other.beta - self.beta * other.alpha)
        d1 = math.hypot(self.alpha.real, self.alpha.imag, self.beta.real, self.beta.imag)
        d2 = math.hypot(other.alpha.real, other.alpha.imag, other.beta.real, other.beta.imag)
        return min(1.0, num / (d1 * d2))

    def angle_to(self, other: "ProjectivePoint") -> float:
        """Acute angle between the two lines; its sine is the chordal distance."""
        return math.asin(self.chordal_to(other))

    def reversed_(self) -> "ProjectivePoint":
        """The reciprocal line (beta, alpha), swapping the roles of 0 and inf."""
        return ProjectivePoint.from_pair(self.beta, self.alpha)

    def same_line(self, other: "ProjectivePoint", tol: float = 1e-12) -> bool:
        return self.chordal_to(other) <= tol

    def _sort_key(self) -> tuple[float, float]:
        if self.is_infinite:
            return (math.inf, 0.0)
        return (self.abs_lambda, cmath.phase(self.alpha))


@dataclass(frozen=True)
class Eigenvalue:
    point: ProjectivePoint
    multiplicity: int


@dataclass(frozen=True)
class SimplicityCertificate:
    """Evidence backing (or refuting) a simplicity claim.

    multiplicity counts computed eigenvalues (with multiplicity) within the
    clustering tolerance; denom is |y^*(conj(beta) dP/dalpha - conj(alpha)
    dP/dbeta) x| at the normalized representative, which is nonzero exactly
    at simple eigenvalues, and denom_floor is the threshold it must clear.
    """

    multiplicity: int
    denom: float
    denom_floor: float
    residual_right: float
    residual_left: float

    @property
    def simple(self) -> bool:
        return self.multiplicity == 1 and self.denom > self.denom_floor


@dataclass(frozen=True, eq=False)
class EigenTriple:
    """Left/right eigenvectors attached to an eigenvalue point.

    Both vectors have unit norm with their largest entry rotated to the
    positive real axis. denom is the simplicity pairing described in
    SimplicityCertificate, evaluated at the stored (normalized) representative.
    """

    point: ProjectivePoint
    right: np.ndarray = field(repr=False)
    left: np.ndarray = field(repr=False)
    simple: bool
    denom: float
    certificate: SimplicityCertificate


def eigenvalues(p: MatrixPolynomial, tol: float | None = None) -> list[Eigenvalue]:
    """All eigenvalues of a regular polynomial as projective points.

    Returns n*k eigenvalues counted with multiplicity, sorted by |lambda| and
    then by phase; the infinite eigenvalue (if any) comes last. Distinct but
    nearly coincident roots are kept separate (they are reported non-simple by
    `is_simple`, not merged).
    """
    tol = DEFAULT_TOL if tol is None else float(tol)
    reg = p.is_regular(tol)
    if not reg:
        raise NotRegular("det P(lambda) is identically zero at the working tolerance")
    c = reg.det.coefficients
    nk = p.n * p.k
    # Coefficients of the interpolated determinant that are pure roundoff dust
    # are treated as exact zeros. The dust level of coefficient l is set by the
    # magnitude of the determinant samples scaled back by r^l, NOT by a fixed
    # fraction of the largest coefficient: badly balanced polynomials have
    # genuine coefficients many orders of magnitude below the largest one.
    r = p.interpolation_radius()
    radial = r ** np.arange(nk + 1)
    sample_scale = float(np.max(np.abs(c) * radial))
    dust = _DUST_FACTOR * np.finfo(float).eps * sample_scale / radial
    live = np.nonzero(np.abs(c) > dust)[0]
    # Leading deficiency becomes infinite eigenvalues, trailing deficiency
    # becomes exact zero eigenvalues.
    eff = int(live[-1])
    trail = c[: eff + 1].copy()
    trail[: int(live[0])] = 0.0
    trimmed = ScalarPolynomial(trail)
    roots = refine_roots(trimmed, poly_roots(trimmed))

    entries: list[list] = []  # [point, multiplicity]
    for z in roots:
        pt = ProjectivePoint.from_lambda(z)
        for e in entries:
            if e[0].chordal_to(pt) <= MERGE_TOL:
                e[1] += 1
                break
        else:
            entries.append([pt, 1])
    if nk - eff > 0:
        entries.append([ProjectivePoint.infinity(), nk - eff])
    out = [Eigenvalue(pt, m) for pt, m in entries]
    out.sort(key=lambda e: e.point._sort_key())
    if sum(e.multiplicity for e in out) != nk:
        raise NumericalError("eigenvalue multiplicities do not add up to n*k")
    return out


def _fix_phase(v: np.ndarray) -> np.ndarray:
    j = int(np.argmax(np.abs(v)))
    return v * (v[j].conjugate() / abs(v[j]))


def _pairing_matrix(p: MatrixPolynomial, point: ProjectivePoint) -> np.ndarray:
    da, db = p.partials_homogeneous(point.alpha, point.beta)
    return point.beta.conjugate() * da - point.alpha.conjugate() * db


def cluster_multiplicity(
    eigs: list[Eigenvalue], point: ProjectivePoint, tol: float = CLUSTER_TOL
) -> int:
    """Total multiplicity of computed eigenvalues within chordal distance tol."""
    return sum(e.multiplicity for e in eigs if e.point.chordal_to(point) <= tol)


def eigentriple(
    p: MatrixPolynomial,
    point: ProjectivePoint,
    tol: float | None = None,
    known_eigenvalues: list[Eigenvalue] | None = None,
) -> EigenTriple:
    """Left/right eigenvectors and a simplicity certificate for one eigenvalue.

    The vectors are the singular vectors of P(alpha0, beta0) for its smallest
    singular value. Pass `known_eigenvalues` to reuse an existing spectrum
    (the multiplicity test needs one).
    """
    m = p.evaluate_homogeneous(point.alpha, point.beta)
    sigma, left, right = smallest_singular_triplet(m)
    scale = p.scale
    if sigma > RESIDUAL_TOL * scale:
        raise NotAnEigenvalue(
            f"sigma_min = {sigma:.3e} exceeds {RESIDUAL_TOL:g} * scale = {RESIDUAL_TOL * scale:.3e}"
        )
    right = _fix_phase(right)
    left = _fix_phase(left)
    pairing = _pairing_matrix(p, point)
    denom = float(abs(left.conj() @ pairing @ right))
    eigs = eigenvalues(p, tol) if known_eigenvalues is None else known_eigenvalues
    cert = SimplicityCertificate(
        multiplicity=cluster_multiplicity(eigs, point),
        denom=denom,
        denom_floor=1e-8 * spectral_norm(pairing),
        residual_right=float(np.linalg.norm(m @ right)),
        residual_left=float(np.linalg.norm(left.conj() @ m)),
    )
    return EigenTriple(
        point=point, right=right, left=left, simple=cert.simple, denom=denom, certificate=cert
    )


def is_simple(p: MatrixPolynomial, t: EigenTriple, tol: float | None = None) -> bool:
    """Re-judge simplicity of a triple: multiplicity-one root and nonzero pairing."""
    eigs = eigenvalues(p, tol)
    pairing = _pairing_matrix(p, t.point)
    denom = float(abs(t.left.conj() @ pairing @ t.right))
    return (
        cluster_multiplicity(eigs, t.point) == 1 and denom > 1e-8 * spectral_norm(pairing)
    )


def reversed_triple(t: EigenTriple, rev_poly: MatrixPolynomial) -> EigenTriple:
    """The triple of the reversal at the reciprocal point.

    Left and right eigenvectors carry over unchanged, because the reversal
    evaluated at (beta0, alpha0) is the same matrix as the original polynomial
    at (alpha0, beta0). Only the simplicity pairing is recomputed.
    """
    pt = t.point.reversed_()
    pairing = _pairing_matrix(rev_poly, pt)
    denom = float(abs(t.left.conj() @ pairing @ t.right))
    cert = SimplicityCertificate(
        multiplicity=t.certificate.multiplicity,
        denom=denom,
        denom_floor=1e-8 * spectral_norm(pairing),
        residual_right=t.certificate.residual_right,
        residual_left=t.certificate.residual_left,
    )
    return EigenTriple(
        point=pt, right=t.right, left=t.left, simple=t.simple, denom=denom, certificate=cert
    )

"""Eigenvalue condition numbers for matrix polynomials and their exact relations.

Four condition numbers are computed for a simple eigenvalue with right/left
eigenvectors x, y and weights omega_i:

* kappa_a  (absolute, finite eigenvalues only):
      (sum_i |lambda0|^i omega_i) ||y|| ||x|| / |y^* P'(lambda0) x|
* kappa_r  (relative, finite nonzero only): kappa_a / |lambda0|
* kappa_h  (homogeneous, 2-norm weight aggregation):
      ||v||_2 ||y|| ||x|| / |y^* (conj(b0) dP/da - conj(a0) dP/db) x|
* kappa_theta (homogeneous, chordal metric, 1-norm aggregation):
      ||v||_1 ||y|| ||x|| / |y^* (conj(b0) dP/da - conj(a0) dP/db) x|

where v_i = |alpha0|^i |beta0|^{k-i} omega_i. The homogeneous numbers are
invariant under the choice of representative of the eigenvalue line, and
relate to the non-homogeneous ones through the factors sin^2, cos^2 and
sin*cos of the angle between the eigenvalue line and the infinite one.
`relation_report` evaluates every such identity and records its residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .eig import EigenTriple, ProjectivePoint, reversed_triple
from .errors import (
    NotSimple,
    PencilOnly,
    UndefinedForInfinite,
    UndefinedForZeroOrInfinite,
)
from .poly import MatrixPolynomial, WeightScheme

# Guard against 0/0 in relative residuals.
_TINY = 1e-300


def chordal_distance(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """Chordal distance between two lines of C^2; a metric with values in [0, 1]."""
    return p.chordal_to(q)


def line_angle(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """Acute angle between two lines; sin(line_angle) equals the chordal distance."""
    return p.angle_to(q)


def _norms(t: EigenTriple) -> float:
    return float(np.linalg.norm(t.left) * np.linalg.norm(t.right))


def _require_simple(t: EigenTriple) -> None:
    if not t.simple:
        raise NotSimple(
            f"eigenvalue at ({t.point.alpha:.6g}, {t.point.beta:.6g}) is not certified simple"
        )


def _weight_vector(t: EigenTriple, k: int, w: WeightScheme) -> np.ndarray:
    """v_i = |alpha0|^i |beta0|^{k-i} omega_i at the stored representative."""
    a = abs(t.point.alpha)
    b = abs(t.point.beta)
    return a ** np.arange(k + 1) * b ** np.arange(k, -1, -1) * w.weights


def kappa_a(p: MatrixPolynomial, t: EigenTriple, w: WeightScheme) -> float:
    """Absolute condition number of a simple finite eigenvalue."""
    if t.point.is_infinite:
        raise UndefinedForInfinite("kappa_a is not defined for the infinite eigenvalue")
    _require_simple(t)
    lam = t.point.lam
    den = abs(t.left.conj() @ p.derivative_eval(lam) @ t.right)
    num = float(np.sum(abs(lam) ** np.arange(p.k + 1) * w.weights))
    return num * _norms(t) / den


def kappa_r(p: MatrixPolynomial, t: EigenTriple, w: WeightScheme) -> float:
    """Relative condition number of a simple finite nonzero eigenvalue."""
    if t.point.is_infinite or t.point.is_zero:
        raise UndefinedForZeroOrInfinite(
            "kappa_r is not defined for zero or infinite eigenvalues"
        )
    return kappa_a(p, t, w) / t.point.abs_lambda


def kappa_h(p: MatrixPolynomial, t: EigenTriple, w: WeightScheme) -> float:
    """Homogeneous condition number with 2-norm weight aggregation."""
    _require_simple(t)
    v = _weight_vector(t, p.k, w)
    return float(np.linalg.norm(v)) * _norms(t) / t.denom


def kappa_theta(p: MatrixPolynomial, t: EigenTriple, w: WeightScheme) -> float:
    """Homogeneous condition number in the chordal metric (1-norm aggregation)."""
    _require_simple(t)
    v = _weight_vector(t, p.k, w)
    return float(np.sum(v)) * _norms(t) / t.denom


@dataclass(frozen=True)
class CotangentConditions:
    """Condition numbers of the cotangent/tangent map at the eigenvalue's angle.

    kappa_a_ct = 1 + |lambda0|^2 (needs beta0 != 0), kappa_r_ct =
    (1 + |lambda0|^2)/|lambda0| (needs alpha0 beta0 != 0) and kappa_a_t =
    1 + |1/lambda0|^2 (needs alpha0 != 0); members are None where undefined.
    """

    kappa_a_ct: float | None
    kappa_r_ct: float | None
    kappa_a_t: float | None


def cotangent_condition_numbers(point: ProjectivePoint) -> CotangentConditions:
    a_ct = r_ct = a_t = None
    if not point.is_infinite:
        lam = point.abs_lambda
        a_ct = 1.0 + lam * lam
        if not point.is_zero:
            r_ct = a_ct / lam
    if not point.is_zero:
        inv = 0.0 if point.is_infinite else 1.0 / point.abs_lambda
        a_t = 1.0 + inv * inv
    return CotangentConditions(a_ct, r_ct, a_t)


@dataclass(frozen=True, eq=False)
class ConditionReport:
    """All condition numbers of one simple eigenvalue plus identity residuals.

    Undefined entries (kappa_a at infinity, kappa_r at zero or infinity,
    kappa_a_rev when the eigenvalue is zero) are None. identity_residuals maps
    the name of each applicable exact relation to its relative residual;
    inequality entries hold the (nonnegative) violation instead.
    """

    point: ProjectivePoint
    lambda_abs: float
    kappa_a: float | None
    kappa_r: float | None
    kappa_h: float
    kappa_theta: float
    kappa_a_rev: float | None
    weights_mode: str
    identity_residuals: dict[str, float] = field(repr=False)

    @property
    def worst_residual(self) -> float:
        return max(self.identity_residuals.values(), default=0.0)

    def to_dict(self) -> dict:
        return {
            "alpha": [self.point.alpha.real, self.point.alpha.imag],
            "beta": [self.point.beta.real, self.point.beta.imag],
            "lambda_abs": self.lambda_abs,
            "kappa_a": self.kappa_a,
            "kappa_r": self.kappa_r,
            "kappa_h": self.kappa_h,
            "kappa_theta": self.kappa_theta,
            "kappa_a_rev": self.kappa_a_rev,
            "weights_mode": self.weights_mode,
            "identity_residuals": dict(self.identity_residuals),
        }


def _rel(a: float, b: float) -> float:
    """Symmetric relative difference, safe near zero."""
    return abs(a - b) / max(abs(a), abs(b), _TINY)


def _violation(lhs: float, rhs: float) -> float:
    """Relative amount by which the inequality lhs <= rhs fails (0 when it holds)."""
    return max(0.0, (lhs - rhs) / max(abs(lhs), abs(rhs), _TINY))


def relation_report(
    p: MatrixPolynomial,
    t: EigenTriple,
    w: WeightScheme,
    _kappa_theta_scale: float = 1.0,
) -> ConditionReport:
    """Compute every defined condition number and the residual of each exact relation.

    Residuals are reported, never silently dropped; callers decide what to
    tolerate. `_kappa_theta_scale` is a fault-injection hook used by
    verification tooling to prove the residual checks can fail.
    """
    _require_simple(t)
    point = t.point
    k = p.k
    finite = not point.is_infinite
    nonzero = not point.is_zero
    lam_abs = point.abs_lambda

    kt = kappa_theta(p, t, w) * _kappa_theta_scale
    kh = kappa_h(p, t, w)
    ka = kappa_a(p, t, w) if finite else None
    kr = kappa_r(p, t, w) if finite and nonzero else None

    rev_p = p.reversal()
    rev_w = w.reversed_()
    rev_t = reversed_triple(t, rev_p)
    ka_rev = kappa_a(rev_p, rev_t, rev_w) if nonzero else None
    kr_rev = kappa_r(rev_p, rev_t, rev_w) if nonzero and finite else None

    # Stable forms of the relating factors at the normalized representative:
    # sin^2 = 1/(1+|l|^2), cos^2 = 1/(1+|1/l|^2), sin*cos = |l|/(1+|l|^2).
    sin_sq = abs(point.beta) ** 2
    cos_sq = abs(point.alpha) ** 2
    sin_cos = abs(point.alpha) * abs(point.beta)

    chi_inf = chordal_distance(point, ProjectivePoint.infinity())
    chi_zero = chordal_distance(point, ProjectivePoint.zero())
    ct = cotangent_condition_numbers(point)

    res: dict[str, float] = {}
    if finite:
        res["theta_vs_abs"] = _rel(kt, ka * sin_sq)
        res["sin_sq"] = _rel(sin_sq, chi_inf * chi_inf)
        res["cotan_abs"] = _rel(ka, kt * ct.kappa_a_ct)
        res["theta_le_abs"] = _violation(kt, ka)
    if nonzero:
        res["theta_vs_abs_rev"] = _rel(kt, ka_rev * cos_sq)
        res["cos_sq"] = _rel(cos_sq, chi_zero * chi_zero)
        res["tan_abs_rev"] = _rel(ka_rev, kt * ct.kappa_a_t)
    if finite and nonzero:
        res["theta_vs_rel"] = _rel(kt, kr * sin_cos)
        res["sin_cos"] = _rel(sin_cos, chi_inf * chi_zero)
        res["cotan_rel"] = _rel(kr, kt * ct.kappa_r_ct)
        res["theta_le_rel"] = _violation(kt, kr)
        res["rev_abs"] = _rel(ka_rev, kr / lam_abs)
        res["rev_rel"] = _rel(kr_rev, kr)

    v = _weight_vector(t, k, w)
    ratio = float(np.linalg.norm(v) / np.sum(v))
    res["hom_ratio"] = _rel(kh, ratio * kt)
    res["hom_ratio_upper"] = _violation(kh / kt, 1.0)
    res["hom_ratio_lower"] = _violation(1.0 / math.sqrt(k + 1), kh / kt)

    if finite and lam_abs <= 1.0:
        res["abs_envelope_lower"] = _violation(ka / 2.0, kt)
        res["abs_envelope_upper"] = _violation(kt, ka)
    if nonzero and lam_abs >= 1.0:
        res["abs_envelope_lower"] = max(
            res.get("abs_envelope_lower", 0.0), _violation(ka_rev / 2.0, kt)
        )
        res["abs_envelope_upper"] = max(
            res.get("abs_envelope_upper", 0.0), _violation(kt, ka_rev)
        )
    if finite and nonzero:
        if lam_abs <= 1.0:
            res["rel_envelope_lower"] = _violation(kr * lam_abs / 2.0, kt)
            res["rel_envelope_upper"] = _violation(kt, kr * lam_abs)
        if lam_abs >= 1.0:
            res["rel_envelope_lower"] = max(
                res.get("rel_envelope_lower", 0.0), _violation(kr / (2.0 * lam_abs), kt)
            )
            res["rel_envelope_upper"] = max(
                res.get("rel_envelope_upper", 0.0), _violation(kt, kr / lam_abs)
            )

    return ConditionReport(
        point=point,
        lambda_abs=lam_abs,
        kappa_a=ka,
        kappa_r=kr,
        kappa_h=kh,
        kappa_theta=kt,
        kappa_a_rev=ka_rev,
        weights_mode=w.mode,
        identity_residuals=res,
    )


@dataclass(frozen=True)
class PencilBounds:
    """Computability bounds for a simple finite eigenvalue of a pencil.

    theta_lower_bound is (omega_0 + |l| omega_1)/(||B_1|| + |l| ||B_0||), a
    bound kappa_theta always satisfies. `case` identifies which weight/norm
    configuration (1..4) forces kappa_a >= 1+|l|^2 and kappa_r >= (1+|l|^2)/|l|,
    or None when no configuration applies; case 4 ("similar norms") uses the
    recorded ratio band.
    """

    case: int | None
    theta_lower_bound: float
    kappa_theta: float
    theta_bound_ok: bool
    kappa_a: float
    kappa_a_bound: float
    kappa_a_ok: bool
    kappa_r: float | None
    kappa_r_bound: float | None
    kappa_r_ok: bool | None
    similar_ratio_band: tuple[float, float] = (0.5, 2.0)


def computability_bounds(
    l: MatrixPolynomial, t: EigenTriple, w: WeightScheme, slack: float = 1e-9
) -> PencilBounds:
    """Evaluate the pencil lower bounds on kappa_a / kappa_r for large or small eigenvalues."""
    if l.k != 1:
        raise PencilOnly("computability bounds are stated for pencils (grade 1) only")
    if t.point.is_infinite:
        raise UndefinedForInfinite("computability bounds need a finite eigenvalue")
    _require_simple(t)

    b1 = float(l.coefficient_norms[1])
    b0 = float(l.coefficient_norms[0])
    lam = t.point.abs_lambda
    w0, w1 = (float(x) for x in w.weights)
    theta_lb = (w0 + lam * w1) / (b1 + lam * b0)

    def close(a: float, b: float) -> bool:
        return abs(a - b) <= 1e-12 * max(abs(a), abs(b), _TINY)

    coeffw = close(w0, b0) and close(w1, b1)
    maxw = close(w0, w1) and close(w0, max(b0, b1))
    band = (0.5, 2.0)
    case = None
    if maxw:
        case = 1
    elif coeffw and lam < 1.0 and b1 <= b0:
        case = 2
    elif coeffw and lam > 1.0 and b0 <= b1:
        case = 3
    elif coeffw and b0 > 0 and band[0] <= b1 / b0 <= band[1]:
        case = 4

    kt = kappa_theta(l, t, w)
    ka = kappa_a(l, t, w)
    ka_bound = 1.0 + lam * lam
    if lam > 0:
        kr = kappa_r(l, t, w)
        kr_bound = ka_bound / lam
        kr_ok = kr >= kr_bound * (1.0 - slack)
    else:
        kr = kr_bound = kr_ok = None
    return PencilBounds(
        case=case,
        theta_lower_bound=theta_lb,
        kappa_theta=kt,
        theta_bound_ok=kt >= theta_lb * (1.0 - slack),
        kappa_a=ka,
        kappa_a_bound=ka_bound,
        kappa_a_ok=ka >= ka_bound * (1.0 - slack),
        kappa_r=kr,
        kappa_r_bound=kr_bound,
        kappa_r_ok=kr_ok,
        similar_ratio_band=band,
    )

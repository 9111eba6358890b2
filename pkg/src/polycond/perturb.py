"""Empirical validation of the condition numbers' limit-supremum definitions.

The chordal-metric condition number is the limit of sup chi(old, new)/eps over
perturbations dB_i with ||dB_i||_2 <= eps * omega_i. The supremum is attained
to first order by a family of rank-one perturbations aligned with the left and
right eigenvectors; random unit-norm perturbations give lower estimates. Both
are implemented here, together with the two-eigenvalue parametric pencil

    L(lambda) = lambda [[1/e, 1/e], [1/e, 1]] + [[e, 1], [1, 1]],  0 < e < 1,

whose eigenvalues have modulus of order e while their relative condition
numbers stay O(1): small eigenvalues that are nevertheless computable.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .cond import kappa_a, kappa_r, kappa_theta
from .eig import EigenTriple, ProjectivePoint, eigentriple, eigenvalues
from .errors import (
    AmbiguousMatch,
    InvalidInput,
    NonFinite,
    NotRegular,
    NotSimple,
    NumericalError,
    UndefinedForInfinite,
    UndefinedForZeroOrInfinite,
)
from .numlin import spectral_norm
from .poly import MatrixPolynomial, WeightScheme

TARGET_A = "kappa_a"
TARGET_R = "kappa_r"
TARGET_THETA = "kappa_theta"
_TARGETS = (TARGET_A, TARGET_R, TARGET_THETA)


@dataclass(frozen=True)
class PerturbationSpec:
    """Size, weights, sample count and seed of a perturbation experiment."""

    epsilon: float
    weights: WeightScheme
    samples: int
    seed: int

    def __post_init__(self):
        if not (self.epsilon > 0 and math.isfinite(self.epsilon)):
            raise InvalidInput("epsilon must be a positive finite real")
        if self.samples < 1:
            raise InvalidInput("samples must be positive")
        if not (0 <= self.seed < 2**64):
            raise InvalidInput("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class EmpiricalEstimate:
    """Measured perturbation ratios next to the formula value they estimate."""

    target: str
    formula_value: float
    extremal_ratio: float
    mc_max_ratio: float
    epsilon_used: float
    samples: int

    @property
    def extremal_gap(self) -> float:
        """Relative gap |extremal_ratio / formula_value - 1|."""
        return abs(self.extremal_ratio / self.formula_value - 1.0)


def _sgn(z: complex) -> complex:
    return 0j if z == 0 else z / abs(z)


def extremal_perturbation(
    p: MatrixPolynomial, t: EigenTriple, w: WeightScheme, epsilon: float
) -> MatrixPolynomial:
    """The rank-one perturbation family attaining the chordal condition number.

    dB_i = sgn(conj(a0)^i) sgn(conj(b0)^{k-i}) eps omega_i y x^* / (||x|| ||y||),
    so each nonzero dB_i has spectral norm exactly eps * omega_i, and all terms
    of y^* dP(a0, b0) x add up with a common phase.
    """
    if not (epsilon > 0 and math.isfinite(epsilon)):
        raise InvalidInput("epsilon must be a positive finite real")
    if not t.simple:
        raise NotSimple("extremal perturbation is defined at simple eigenvalues")
    x, y = t.right, t.left
    outer = np.outer(y, x.conj()) / (np.linalg.norm(x) * np.linalg.norm(y))
    ua = _sgn(t.point.alpha.conjugate())
    ub = _sgn(t.point.beta.conjugate())
    k = p.k
    factors = ua ** np.arange(k + 1) * ub ** np.arange(k, -1, -1)
    mats = factors[:, None, None] * (epsilon * w.weights)[:, None, None] * outer
    return MatrixPolynomial(mats)


def perturbed_eigenvalue_shift(
    p: MatrixPolynomial,
    dp: MatrixPolynomial,
    point: ProjectivePoint,
    tol: float | None = None,
) -> tuple[ProjectivePoint, float]:
    """Recompute the spectrum of p + dp and track the eigenvalue nearest to `point`.

    Returns the matched perturbed eigenvalue and its chordal distance from
    `point`. If the second-nearest perturbed eigenvalue is within twice the
    nearest distance the match is ambiguous and an error is raised.
    """
    eigs = eigenvalues(p + dp, tol)
    dists: list[tuple[float, ProjectivePoint]] = []
    for e in eigs:
        d = e.point.chordal_to(point)
        dists.extend([(d, e.point)] * e.multiplicity)
    dists.sort(key=lambda pair: pair[0])
    d1, nearest = dists[0]
    if len(dists) > 1 and dists[1][0] <= 2.0 * d1:
        raise AmbiguousMatch(
            f"two perturbed eigenvalues at chordal distances {d1:.3e} and "
            f"{dists[1][0]:.3e} from the target"
        )
    return nearest, d1


def _shift_ratio(
    p: MatrixPolynomial,
    dp: MatrixPolynomial,
    t: EigenTriple,
    target: str,
    epsilon: float,
    tol: float | None,
) -> float:
    new_point, chi = perturbed_eigenvalue_shift(p, dp, t.point, tol)
    if target == TARGET_THETA:
        return chi / epsilon
    if new_point.is_infinite:
        return math.inf
    dlam = abs(new_point.lam - t.point.lam)
    if target == TARGET_A:
        return dlam / epsilon
    return dlam / (epsilon * t.point.abs_lambda)


def _random_direction(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return g / spectral_norm(g)


def empirical_condition(
    p: MatrixPolynomial, t: EigenTriple, spec: PerturbationSpec, target: str
) -> EmpiricalEstimate:
    """Estimate a condition number by measuring actual eigenvalue movement.

    Runs the extremal perturbation plus spec.samples random perturbations
    dB_i = eps * omega_i * U_i with U_i of unit spectral norm, and records the
    target ratio for each. Sample j draws from a generator seeded with
    seed XOR j, so results do not depend on evaluation order.
    """
    if target not in _TARGETS:
        raise InvalidInput(f"unknown target {target!r}")
    if not t.simple:
        raise NotSimple("empirical estimates are defined at simple eigenvalues")
    if target == TARGET_A and t.point.is_infinite:
        raise UndefinedForInfinite("kappa_a target needs a finite eigenvalue")
    if target == TARGET_R and (t.point.is_infinite or t.point.is_zero):
        raise UndefinedForZeroOrInfinite("kappa_r target needs a finite nonzero eigenvalue")

    w = spec.weights
    eps = spec.epsilon
    scale = p.scale
    if eps * float(np.max(w.weights)) > 0.1 * scale:
        warnings.warn(
            "perturbation size is not small against the polynomial scale; "
            "first-order ratios may be meaningless",
            stacklevel=2,
        )
    if target == TARGET_A:
        formula = kappa_a(p, t, w)
    elif target == TARGET_R:
        formula = kappa_r(p, t, w)
    else:
        formula = kappa_theta(p, t, w)

    try:
        extremal = _shift_ratio(p, extremal_perturbation(p, t, w, eps), t, target, eps, None)
        mc_max = -math.inf
        for j in range(1, spec.samples + 1):
            rng = np.random.default_rng(spec.seed ^ j)
            mats = np.stack([eps * wi * _random_direction(rng, p.n) for wi in w.weights])
            ratio = _shift_ratio(p, MatrixPolynomial(mats), t, target, eps, None)
            mc_max = max(mc_max, ratio)
    except NotRegular as exc:
        raise NonFinite("a perturbed polynomial lost regularity") from exc

    return EmpiricalEstimate(
        target=target,
        formula_value=formula,
        extremal_ratio=extremal,
        mc_max_ratio=mc_max,
        epsilon_used=eps,
        samples=spec.samples,
    )


def extremal_ratio_sequence(
    p: MatrixPolynomial,
    t: EigenTriple,
    w: WeightScheme,
    target: str,
    eps_values,
) -> list[float]:
    """Extremal-perturbation ratios over a decreasing sequence of eps values.

    Useful for consistency checks: the measured ratio approaches the formula
    value linearly in eps, so halving eps should roughly halve the error.
    """
    out = []
    for eps in eps_values:
        dp = extremal_perturbation(p, t, w, float(eps))
        out.append(_shift_ratio(p, dp, t, target, float(eps), None))
    return out


# ---------------------------------------------------------------------------
# The two-eigenvalue parametric pencil and its sweep.


def example_pencil(eps: float) -> MatrixPolynomial:
    """The pencil with well-conditioned, very differently sized coefficients."""
    if not (0 < eps < 1):
        raise InvalidInput("the parametric pencil needs 0 < eps < 1")
    b0 = np.array([[eps, 1.0], [1.0, 1.0]], dtype=complex)
    b1 = np.array([[1.0 / eps, 1.0 / eps], [1.0 / eps, 1.0]], dtype=complex)
    return MatrixPolynomial.from_coefficients([b0, b1])


def closed_form_eigenvalues(eps: float) -> tuple[complex, complex]:
    """Both eigenvalues of the parametric pencil, in closed form.

    They are the roots of lambda^2 + (eps^2 + eps) lambda + eps^2, a complex
    conjugate pair of modulus eps for small eps.
    """
    if not (0 < eps < 1):
        raise InvalidInput("the parametric pencil needs 0 < eps < 1")
    disc = eps**6 - 6.0 * eps**4 + 8.0 * eps**3 - 3.0 * eps**2
    sq = cmath.sqrt(complex(disc))
    den = 2.0 * eps - 2.0
    return (eps - eps**3 + sq) / den, (eps - eps**3 - sq) / den


@dataclass(frozen=True)
class SweepRecord:
    """Condition numbers of both pencil eigenvalues at one eps."""

    eps: float
    abs_lambda0: float
    kappa_theta: float
    kappa_r: float
    kappa_a: float
    abs_lambda1: float
    kappa_theta1: float
    kappa_r1: float
    kappa_a1: float
    closed_form_mismatch: float

    FIELDS = (
        "eps",
        "abs_lambda0",
        "kappa_theta",
        "kappa_r",
        "kappa_a",
        "abs_lambda1",
        "kappa_theta1",
        "kappa_r1",
        "kappa_a1",
    )

    def row(self) -> tuple[float, ...]:
        return tuple(getattr(self, name) for name in self.FIELDS)


def example_sweep(eps_grid) -> list[SweepRecord]:
    """Sweep the parametric pencil over eps and record both eigenvalues' numbers.

    For each eps the closed-form eigenvalues are cross-checked against the
    computed spectrum to 1e-8 in chordal distance; weights are the coefficient
    norms. As eps decreases, |lambda| and kappa_theta shrink like eps while
    kappa_r stays in an O(1) band.
    """
    records = []
    for eps in eps_grid:
        eps = float(eps)
        pencil = example_pencil(eps)
        w = WeightScheme.coefficient_norms(pencil)
        eigs = eigenvalues(pencil)
        per_eig = []
        mismatch = 0.0
        for lam in closed_form_eigenvalues(eps):
            target = ProjectivePoint.from_lambda(lam)
            nearest = min(eigs, key=lambda e: e.point.chordal_to(target))
            gap = nearest.point.chordal_to(target)
            if gap > 1e-8:
                raise NumericalError(
                    f"computed eigenvalue misses the closed form by {gap:.3e} at eps={eps:g}"
                )
            mismatch = max(mismatch, gap)
            t = eigentriple(pencil, nearest.point, known_eigenvalues=eigs)
            per_eig.append(
                (
                    nearest.point.abs_lambda,
                    kappa_theta(pencil, t, w),
                    kappa_r(pencil, t, w),
                    kappa_a(pencil, t, w),
                )
            )
        (l0, kt0, kr0, ka0), (l1, kt1, kr1, ka1) = per_eig
        records.append(
            SweepRecord(
                eps=eps,
                abs_lambda0=l0,
                kappa_theta=kt0,
                kappa_r=kr0,
                kappa_a=ka0,
                abs_lambda1=l1,
                kappa_theta1=kt1,
                kappa_r1=kr1,
                kappa_a1=ka1,
                closed_form_mismatch=mismatch,
            )
        )
    return records

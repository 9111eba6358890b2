"""Matrix-polynomial algebra: construction, evaluation, derivatives, reversal.

A matrix polynomial of grade k is P(lambda) = sum_{i=0..k} lambda^i B_i with
square complex coefficients B_i. The grade is declared, not inferred, so the
leading coefficient (and any other) may be the zero matrix; that is what makes
infinite eigenvalues representable.

The homogeneous form P(alpha, beta) = sum_i alpha^i beta^{k-i} B_i treats
eigenvalues as lines through the origin of C^2 and satisfies
P(alpha, beta) = beta^k P(alpha/beta) whenever beta != 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput, NumericalError
from .numlin import DEFAULT_TOL, ScalarPolynomial, as_matrix, spectral_norm

# Weight-scheme modes: per-coefficient perturbation scales omega_i.
WEIGHTS_COEFF = "coeff"  # omega_i = ||B_i||_2   (coefficient-wise relative)
WEIGHTS_MAX = "max"      # omega_i = max_j ||B_j||_2
WEIGHTS_ABS = "abs"      # omega_i = 1           (absolute perturbations)
WEIGHTS_CUSTOM = "custom"

_MODES = (WEIGHTS_COEFF, WEIGHTS_MAX, WEIGHTS_ABS, WEIGHTS_CUSTOM)


@dataclass(frozen=True, eq=False)
class MatrixPolynomial:
    """Immutable dense matrix polynomial, stored as a (k+1, n, n) stack."""

    coeffs: np.ndarray = field(repr=False)

    def __init__(self, coefficients):
        a = np.asarray(coefficients, dtype=complex)
        if a.ndim != 3 or a.shape[0] < 1 or a.shape[1] != a.shape[2] or a.shape[1] < 1:
            raise InvalidInput(
                f"expected k+1 square matrices of equal size, got shape {a.shape}"
            )
        if not np.all(np.isfinite(a)):
            raise InvalidInput("polynomial coefficients have non-finite entries")
        a = a.copy()
        a.flags.writeable = False
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def from_coefficients(cls, matrices) -> "MatrixPolynomial":
        """Build from a sequence B_0, ..., B_k of n-by-n matrices."""
        mats = [as_matrix(m) for m in matrices]
        if not mats:
            raise InvalidInput("need at least one coefficient matrix")
        n = mats[0].shape[0]
        for i, m in enumerate(mats):
            if m.shape != (n, n):
                raise InvalidInput(f"coefficient {i} has shape {m.shape}, expected ({n}, {n})")
        return cls(np.stack(mats))

    @classmethod
    def scalar(cls, coefficients) -> "MatrixPolynomial":
        """Scalar (n = 1) polynomial from plain coefficients."""
        c = np.asarray(coefficients, dtype=complex)
        return cls(c.reshape(-1, 1, 1))

    @property
    def n(self) -> int:
        return self.coeffs.shape[1]

    @property
    def k(self) -> int:
        return self.coeffs.shape[0] - 1

    def coefficient(self, i: int) -> np.ndarray:
        return self.coeffs[i]

    @property
    def coefficient_norms(self) -> np.ndarray:
        return np.array([spectral_norm(b) for b in self.coeffs])

    @property
    def scale(self) -> float:
        """max_i ||B_i||_2, the natural size of the polynomial."""
        return float(np.max(self.coefficient_norms))

    def __add__(self, other: "MatrixPolynomial") -> "MatrixPolynomial":
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        if other.coeffs.shape != self.coeffs.shape:
            raise InvalidInput("can only add polynomials of equal size and grade")
        return MatrixPolynomial(self.coeffs + other.coeffs)

    def __mul__(self, c) -> "MatrixPolynomial":
        return MatrixPolynomial(self.coeffs * complex(c))

    __rmul__ = __mul__

    def evaluate(self, lam: complex) -> np.ndarray:
        """P(lambda) by Horner's rule."""
        lam = complex(lam)
        acc = np.array(self.coeffs[-1])
        for b in self.coeffs[-2::-1]:
            acc = acc * lam + b
        return acc

    def evaluate_homogeneous(self, alpha: complex, beta: complex) -> np.ndarray:
        """P(alpha, beta) = sum_i alpha^i beta^{k-i} B_i."""
        alpha, beta = complex(alpha), complex(beta)
        if alpha == 0 and beta == 0:
            raise InvalidInput("(alpha, beta) = (0, 0) is not a point of the projective line")
        w = _homogeneous_monomials(alpha, beta, self.k)
        return np.einsum("i,iab->ab", w, self.coeffs)

    def derivative_eval(self, lam: complex) -> np.ndarray:
        """P'(lambda) = sum_{i>=1} i lambda^{i-1} B_i."""
        lam = complex(lam)
        if self.k == 0:
            return np.zeros((self.n, self.n), dtype=complex)
        acc = np.array(self.coeffs[-1]) * self.k
        for i in range(self.k - 1, 0, -1):
            acc = acc * lam + self.coeffs[i] * i
        return acc

    def partials_homogeneous(self, alpha: complex, beta: complex) -> tuple[np.ndarray, np.ndarray]:
        """Partial derivatives (d/dalpha P, d/dbeta P) at (alpha, beta)."""
        alpha, beta = complex(alpha), complex(beta)
        if alpha == 0 and beta == 0:
            raise InvalidInput("(alpha, beta) = (0, 0) is not a point of the projective line")
        k = self.k
        zero = np.zeros((self.n, self.n), dtype=complex)
        if k == 0:
            return zero, zero
        # d/dalpha: sum_{i=1..k} i alpha^{i-1} beta^{k-i} B_i
        wa = np.arange(1, k + 1) * _homogeneous_monomials(alpha, beta, k - 1)
        da = np.einsum("i,iab->ab", wa, self.coeffs[1:])
        # d/dbeta: sum_{i=0..k-1} (k-i) alpha^i beta^{k-1-i} B_i
        wb = np.arange(k, 0, -1) * _homogeneous_monomials(alpha, beta, k - 1)
        db = np.einsum("i,iab->ab", wb, self.coeffs[:-1])
        return da, db

    def reversal(self) -> "MatrixPolynomial":
        """The grade-k reversal lambda^k P(1/lambda): coefficients in reverse order."""
        return MatrixPolynomial(self.coeffs[::-1])

    def det_poly(self) -> ScalarPolynomial:
        """Determinant of P(lambda) as a scalar polynomial of grade n*k.

        Computed by sampling det(P) at n*k+1 equispaced points on a circle and
        solving the resulting interpolation system with an FFT. The circle
        radius follows the coefficient scaling so that the samples are
        well-balanced; exactness is spot-checked at extra nodes afterwards.
        """
        n, k = self.n, self.k
        m = n * k + 1
        if m == 1:
            return ScalarPolynomial([np.linalg.det(self.coeffs[0])])
        r = self.interpolation_radius()
        nodes = r * np.exp(2j * np.pi * np.arange(m) / m)
        vals = np.linalg.det(self._evaluate_many(nodes))
        coeff = np.fft.fft(vals) / m
        coeff /= r ** np.arange(m)
        det = ScalarPolynomial(coeff)
        self._check_interpolant(det, r)
        return det

    def interpolation_radius(self) -> float:
        """Sampling radius for determinant interpolation, from coefficient scaling."""
        norms = self.coefficient_norms
        lead = norms[-1]
        if self.k >= 1 and lead > 0:
            return max(1.0, float((np.max(norms) / lead) ** (1.0 / self.k)))
        return 1.0

    def _evaluate_many(self, lams: np.ndarray) -> np.ndarray:
        pows = lams[:, None] ** np.arange(self.k + 1)[None, :]
        return np.einsum("ji,iab->jab", pows, self.coeffs)

    def _check_interpolant(self, det: ScalarPolynomial, r: float) -> None:
        probe = r * np.exp(1j * np.array([0.7, 2.1]))
        direct = np.linalg.det(self._evaluate_many(probe))
        interp = np.polynomial.polynomial.polyval(probe, det.coefficients)
        ref = max(float(np.max(np.abs(direct))), float(np.sum(np.abs(det.coefficients))) * r ** det.grade)
        if ref > 0 and float(np.max(np.abs(direct - interp))) > 1e-6 * ref:
            raise NumericalError("determinant interpolation failed its consistency check")

    def is_regular(self, tol: float | None = None) -> "Regularity":
        """Whether det P(lambda) is not identically zero, with the determinant attached.

        The test is scale-invariant: some determinant coefficient must exceed
        tol * (max_i ||B_i||_2)^n.
        """
        tol = DEFAULT_TOL if tol is None else float(tol)
        det = self.det_poly()
        threshold = tol * self.scale**self.n
        return Regularity(
            regular=bool(np.max(np.abs(det.coefficients)) > threshold),
            det=det,
            threshold=threshold,
        )


def _homogeneous_monomials(alpha: complex, beta: complex, k: int) -> np.ndarray:
    """[alpha^i beta^{k-i} for i = 0..k] with the 0^0 = 1 convention."""
    return alpha ** np.arange(k + 1) * beta ** np.arange(k, -1, -1)


@dataclass(frozen=True)
class Regularity:
    regular: bool
    det: ScalarPolynomial
    threshold: float

    def __bool__(self) -> bool:
        return self.regular


@dataclass(frozen=True, eq=False)
class WeightScheme:
    """Nonnegative weights omega_0..omega_k fixing how perturbations are measured.

    A perturbation dP = sum lambda^i dB_i is admissible at level eps when
    ||dB_i||_2 <= eps * omega_i for every i.
    """

    mode: str
    weights: np.ndarray = field(repr=False)

    def __init__(self, mode: str, weights):
        if mode not in _MODES:
            raise InvalidInput(f"unknown weight mode {mode!r}")
        w = np.atleast_1d(np.asarray(weights, dtype=float))
        if w.ndim != 1 or w.size < 1:
            raise InvalidInput("weights must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise InvalidInput("weights must be finite and nonnegative")
        if not np.any(w > 0):
            raise InvalidInput("at least one weight must be positive")
        w = w.copy()
        w.flags.writeable = False
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "weights", w)

    @classmethod
    def coefficient_norms(cls, p: MatrixPolynomial) -> "WeightScheme":
        return cls(WEIGHTS_COEFF, p.coefficient_norms)

    @classmethod
    def max_norm(cls, p: MatrixPolynomial) -> "WeightScheme":
        return cls(WEIGHTS_MAX, np.full(p.k + 1, p.scale))

    @classmethod
    def absolute(cls, p: MatrixPolynomial) -> "WeightScheme":
        return cls(WEIGHTS_ABS, np.ones(p.k + 1))

    @classmethod
    def custom(cls, values) -> "WeightScheme":
        return cls(WEIGHTS_CUSTOM, values)

    @classmethod
    def for_mode(cls, p: MatrixPolynomial, mode: str, values=None) -> "WeightScheme":
        if mode == WEIGHTS_COEFF:
            return cls.coefficient_norms(p)
        if mode == WEIGHTS_MAX:
            return cls.max_norm(p)
        if mode == WEIGHTS_ABS:
            return cls.absolute(p)
        if mode == WEIGHTS_CUSTOM:
            if values is None:
                raise InvalidInput("custom weight mode needs explicit values")
            return cls.custom(values)
        raise InvalidInput(f"unknown weight mode {mode!r}")

    def reversed_(self) -> "WeightScheme":
        """Weights transported to the reversal: omega_i follows B_i to slot k-i."""
        return WeightScheme(self.mode, self.weights[::-1])

    def matches(self, p: MatrixPolynomial, rtol: float = 1e-12) -> bool:
        """Whether the stored values agree with the mode recomputed on p."""
        if self.weights.size != p.k + 1:
            return False
        if self.mode == WEIGHTS_CUSTOM:
            return True
        ref = WeightScheme.for_mode(p, self.mode).weights
        return bool(np.allclose(self.weights, ref, rtol=rtol, atol=0.0))

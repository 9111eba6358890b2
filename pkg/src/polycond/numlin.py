"""Dense complex linear-algebra kernels for desk-scale problems.

Matrices and vectors are plain numpy arrays (complex128). Dimensions are
expected to stay small (matrix size <= 32, polynomial degree <= 64), so
everything below is a thin, validated layer over LAPACK-backed numpy calls.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput

# Default relative tolerance used by regularity / zero tests. Callers may
# override per call; the CLI also honours the POLYCOND_TOL environment variable.
DEFAULT_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Validate and convert to a finite complex 2-D array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise InvalidInput(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInput("matrix has non-finite entries")
    return a


def as_vector(v) -> np.ndarray:
    a = np.asarray(v, dtype=complex)
    if a.ndim != 1 or a.shape[0] < 1:
        raise InvalidInput(f"expected a 1-D vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInput("vector has non-finite entries")
    return a


def spectral_norm(m) -> float:
    """Largest singular value of a matrix (the 2-norm)."""
    a = as_matrix(m)
    return float(np.linalg.norm(a, 2))


def smallest_singular_triplet(m) -> tuple[float, np.ndarray, np.ndarray]:
    """Smallest singular value of a square matrix with its singular vectors.

    Returns (sigma_min, left, right) where both vectors have unit 2-norm,
    ||m @ right|| = sigma_min and ||left^* @ m|| = sigma_min. The vectors are
    determined only up to unit phase.
    """
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise InvalidInput("smallest_singular_triplet requires a square matrix")
    u, s, vh = np.linalg.svd(a)
    return float(s[-1]), u[:, -1].copy(), vh[-1].conj().copy()


@dataclass(frozen=True, eq=False)
class ScalarPolynomial:
    """Scalar polynomial with ascending-power coefficients and declared grade.

    The grade may exceed the degree: trailing coefficients are allowed to be
    zero, which is how degree deficiency (infinite eigenvalues upstream) is
    represented.
    """

    coefficients: np.ndarray = field(repr=False)
    grade: int = 0

    def __init__(self, coefficients, grade: int | None = None):
        c = np.atleast_1d(np.asarray(coefficients, dtype=complex))
        if c.ndim != 1 or c.size < 1:
            raise InvalidInput("coefficients must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(c)):
            raise InvalidInput("coefficients must be finite")
        if grade is None:
            grade = c.size - 1
        if grade != c.size - 1:
            raise InvalidInput(f"grade {grade} inconsistent with {c.size} coefficients")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coefficients", c)
        object.__setattr__(self, "grade", int(grade))

    @property
    def degree(self) -> int:
        """Index of the highest exactly nonzero coefficient (-1 for the zero polynomial)."""
        nz = np.nonzero(self.coefficients)[0]
        return int(nz[-1]) if nz.size else -1

    def __call__(self, z: complex) -> complex:
        return complex(np.polynomial.polynomial.polyval(z, self.coefficients))

    def derivative(self) -> "ScalarPolynomial":
        if self.grade == 0:
            return ScalarPolynomial([0.0])
        c = self.coefficients[1:] * np.arange(1, self.grade + 1)
        return ScalarPolynomial(c)

    def reversed_coefficients(self) -> "ScalarPolynomial":
        return ScalarPolynomial(self.coefficients[::-1])


def poly_roots(p: ScalarPolynomial | np.ndarray | list) -> np.ndarray:
    """All roots of a scalar polynomial, via eigenvalues of the companion matrix.

    The degree is the index of the highest exactly nonzero coefficient; exactly
    that many roots are returned. Zero constant-term coefficients are stripped
    first and reinstated as exact zero roots.
    """
    if not isinstance(p, ScalarPolynomial):
        p = ScalarPolynomial(p)
    d = p.degree
    if d < 0:
        raise InvalidInput("the zero polynomial has no well-defined roots")
    if d == 0:
        return np.zeros(0, dtype=complex)
    c = p.coefficients[: d + 1]
    # Exact zero roots from trailing low-order zeros; np.roots handles the rest.
    t = 0
    while c[t] == 0:
        t += 1
    zeros = np.zeros(t, dtype=complex)
    core = c[t:]
    if core.size <= 1:
        return zeros
    roots = np.roots(core[::-1])
    return np.concatenate([zeros, roots.astype(complex)])


def refine_roots(p: ScalarPolynomial, roots: np.ndarray, steps: int = 2) -> np.ndarray:
    """Polish approximate roots with a few guarded Newton steps.

    A step is taken only while it reduces |p(root)|; roots near a critical
    point of p are left untouched.
    """
    c = p.coefficients
    dp = p.derivative()
    scale = float(np.max(np.abs(c))) or 1.0
    out = np.array(roots, dtype=complex)
    for i, z in enumerate(out):
        best = z
        best_val = abs(np.polynomial.polynomial.polyval(z, c))
        for _ in range(steps):
            der = np.polynomial.polynomial.polyval(best, dp.coefficients)
            if abs(der) <= 1e-14 * scale:
                break
            cand = best - np.polynomial.polynomial.polyval(best, c) / der
            cand_val = abs(np.polynomial.polynomial.polyval(cand, c))
            if not np.isfinite(cand_val) or cand_val >= best_val:
                break
            best, best_val = cand, cand_val
        out[i] = best
    return out

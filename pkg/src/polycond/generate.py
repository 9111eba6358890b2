"""Seeded construction of test polynomials."""

from __future__ import annotations

import numpy as np

from .errors import NumericalError
from .poly import MatrixPolynomial


def _complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish random unitary from the QR factorization of a Gaussian matrix."""
    q, r = np.linalg.qr(_complex_normal(rng, (n, n)))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_regular(n: int, k: int, seed: int) -> MatrixPolynomial:
    """Random dense complex polynomial; generically regular with simple eigenvalues."""
    rng = np.random.default_rng(seed)
    for _ in range(8):
        p = MatrixPolynomial(_complex_normal(rng, (k + 1, n, n)))
        if p.is_regular():
            return p
    raise NumericalError("could not draw a regular polynomial (vanishingly unlikely)")


def known_spectrum_polynomial(roots: np.ndarray, seed: int) -> MatrixPolynomial:
    """Polynomial with prescribed finite spectrum.

    `roots` has shape (k, n); the result is U (prod_j (lambda I - diag(roots[j]))) V
    with U, V random unitary, so its n*k eigenvalues are exactly the given roots.
    """
    roots = np.asarray(roots, dtype=complex)
    k, n = roots.shape
    rng = np.random.default_rng(seed)
    u = random_unitary(rng, n)
    v = random_unitary(rng, n)
    # Diagonal factors commute entrywise: entry (i, i) is prod_j (lambda - roots[j, i]).
    coeffs = np.zeros((k + 1, n, n), dtype=complex)
    for i in range(n):
        c = np.polynomial.polynomial.polyfromroots(roots[:, i])
        coeffs[:, i, i] = c
    coeffs = np.einsum("ab,ibc,cd->iad", u, coeffs, v)
    return MatrixPolynomial(coeffs)

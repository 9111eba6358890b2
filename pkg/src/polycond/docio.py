"""Reading and writing polynomial documents.

A document is JSON of the form

    {
      "n": 2,
      "k": 1,
      "coefficients": [B_0, ..., B_k],
      "weights": {"mode": "coeff" | "max" | "abs" | "custom", "values": [...]}
    }

where each B_i is a list of n rows of n entries and every entry is a two
element [re, im] array. The optional weights block is validated against the
polynomial (custom mode requires explicit values). Validation failures name
the offending field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DocumentError
from .poly import (
    WEIGHTS_CUSTOM,
    MatrixPolynomial,
    WeightScheme,
)

_MODES = ("coeff", "max", "abs", "custom")


@dataclass(frozen=True)
class PolynomialDocument:
    polynomial: MatrixPolynomial
    weights: WeightScheme | None = None

    @property
    def n(self) -> int:
        return self.polynomial.n

    @property
    def k(self) -> int:
        return self.polynomial.k


def _fail(path: str, message: str) -> DocumentError:
    return DocumentError(f"{path}: {message}")


def _as_number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _fail(path, f"expected a number, got {type(value).__name__}")
    if not math.isfinite(value):
        raise _fail(path, "number must be finite")
    return float(value)


def _as_entry(value, path: str) -> complex:
    if not isinstance(value, list) or len(value) != 2:
        raise _fail(path, "expected a two-element [re, im] array")
    return complex(_as_number(value[0], path + "[0]"), _as_number(value[1], path + "[1]"))


def from_dict(doc) -> PolynomialDocument:
    if not isinstance(doc, dict):
        raise _fail("$", "document must be a JSON object")
    for key in ("n", "k", "coefficients"):
        if key not in doc:
            raise _fail(key, "missing required field")
    n, k = doc["n"], doc["k"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise _fail("n", "expected a positive integer")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise _fail("k", "expected a nonnegative integer")

    mats = doc["coefficients"]
    if not isinstance(mats, list) or len(mats) != k + 1:
        raise _fail("coefficients", f"expected a list of k+1 = {k + 1} matrices")
    coeffs = np.zeros((k + 1, n, n), dtype=complex)
    for i, mat in enumerate(mats):
        mpath = f"coefficients[{i}]"
        if not isinstance(mat, list) or len(mat) != n:
            raise _fail(mpath, f"expected {n} rows")
        for r, row in enumerate(mat):
            rpath = f"{mpath}[{r}]"
            if not isinstance(row, list) or len(row) != n:
                raise _fail(rpath, f"expected {n} entries")
            for c, entry in enumerate(row):
                coeffs[i, r, c] = _as_entry(entry, f"{rpath}[{c}]")
    poly = MatrixPolynomial(coeffs)

    weights = None
    if "weights" in doc and doc["weights"] is not None:
        wblock = doc["weights"]
        if not isinstance(wblock, dict) or "mode" not in wblock:
            raise _fail("weights", "expected an object with a 'mode' field")
        mode = wblock["mode"]
        if mode not in _MODES:
            raise _fail("weights.mode", f"expected one of {_MODES}, got {mode!r}")
        values = wblock.get("values")
        if mode == WEIGHTS_CUSTOM:
            if not isinstance(values, list) or len(values) != k + 1:
                raise _fail("weights.values", f"custom mode needs k+1 = {k + 1} values")
            vals = [_as_number(v, f"weights.values[{j}]") for j, v in enumerate(values)]
            if any(v < 0 for v in vals):
                raise _fail("weights.values", "weights must be nonnegative")
            if not any(v > 0 for v in vals):
                raise _fail("weights.values", "at least one weight must be positive")
            weights = WeightScheme.custom(vals)
        else:
            weights = WeightScheme.for_mode(poly, mode)
    return PolynomialDocument(polynomial=poly, weights=weights)


def to_dict(poly: MatrixPolynomial, weights: WeightScheme | None = None) -> dict:
    doc = {
        "n": poly.n,
        "k": poly.k,
        "coefficients": [
            [[[z.real, z.imag] for z in row] for row in mat] for mat in poly.coeffs
        ],
    }
    if weights is not None:
        doc["weights"] = {"mode": weights.mode, "values": [float(v) for v in weights.weights]}
    return doc


def read_document(path) -> PolynomialDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from exc
    return from_dict(doc)


def write_document(path, poly: MatrixPolynomial, weights: WeightScheme | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_dict(poly, weights), fh, indent=1)
        fh.write("\n")

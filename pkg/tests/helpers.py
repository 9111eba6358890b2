"""Shared scaffolding for the test suite."""

import numpy as np

import polycond as pc


def complex_normal(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def simple_triples(p, tol=None):
    """Triples of all certified-simple eigenvalues of p."""
    eigs = pc.eigenvalues(p, tol)
    out = []
    for e in eigs:
        t = pc.eigentriple(p, e.point, tol, known_eigenvalues=eigs)
        if t.simple:
            out.append(t)
    return out


def best_isolated_triple(p):
    """The simple eigenvalue farthest (chordally) from the rest of the spectrum."""
    eigs = pc.eigenvalues(p)
    best, best_gap = None, -1.0
    for e in eigs:
        others = [f.point.chordal_to(e.point) for f in eigs if f is not e]
        gap = min(others) if others else 1.0
        t = pc.eigentriple(p, e.point, known_eigenvalues=eigs)
        if t.simple and gap > best_gap:
            best, best_gap = t, gap
    assert best is not None, "instance has no simple eigenvalue"
    return best


def assert_multiset_close(found, expected, tol):
    """Greedy nearest matching of two complex multisets."""
    found = list(found)
    expected = list(expected)
    assert len(found) == len(expected)
    for want in expected:
        j = min(range(len(found)), key=lambda i: abs(found[i] - complex(want)))
        got = found.pop(j)
        assert abs(got - complex(want)) <= tol, f"no root near {want}; closest was {got}"


def separated_roots(rng, count, rmin=0.3, rmax=3.0, min_gap=0.15):
    """Random complex points in an annulus with pairwise separation >= min_gap."""
    pts = []
    while len(pts) < count:
        r = rng.uniform(rmin, rmax)
        phi = rng.uniform(0.0, 2.0 * np.pi)
        z = r * np.exp(1j * phi)
        if all(abs(z - q) >= min_gap for q in pts):
            pts.append(z)
    return np.array(pts)


def rel_err(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)

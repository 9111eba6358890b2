import dataclasses
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import polycond as pc

from helpers import complex_normal, rel_err, simple_triples

INF = pc.ProjectivePoint.infinity()
ZERO = pc.ProjectivePoint.zero()


def scalar_fixture():
    """P = lambda - 2 with absolute weights; all four numbers known by hand."""
    p = pc.MatrixPolynomial.scalar([-2.0, 1.0])
    w = pc.WeightScheme.absolute(p)
    t = pc.eigentriple(p, pc.ProjectivePoint.from_lambda(2.0))
    return p, t, w


complex_st = st.builds(
    complex,
    st.floats(-10, 10, allow_nan=False),
    st.floats(-10, 10, allow_nan=False),
)


def nonzero_pairs():
    return st.tuples(complex_st, complex_st).filter(lambda ab: abs(ab[0]) + abs(ab[1]) > 1e-6)


class TestChordalMetric:
    def test_orthogonal_lines(self):
        assert pc.chordal_distance(INF, ZERO) == pytest.approx(1.0)

    def test_distance_to_self_is_zero(self):
        p = pc.ProjectivePoint.from_pair(1.3 - 0.4j, 2.0)
        assert pc.chordal_distance(p, p) <= 1e-15

    def test_hand_value(self):
        p = pc.ProjectivePoint.from_pair(2.0, 1.0)
        assert pc.chordal_distance(p, INF) == pytest.approx(1.0 / math.sqrt(5.0), rel=1e-12)

    def test_representative_independence(self):
        p = pc.ProjectivePoint.from_pair(2.0, 1.0)
        q = pc.ProjectivePoint.from_pair(4.0, 2.0)
        r = pc.ProjectivePoint.from_pair(-2.0j, -1.0j)
        assert pc.chordal_distance(p, q) <= 1e-15
        assert pc.chordal_distance(p, r) <= 1e-15

    @settings(max_examples=150, deadline=None)
    @given(nonzero_pairs(), nonzero_pairs(), nonzero_pairs())
    def test_metric_properties(self, ab, cd, ef):
        p = pc.ProjectivePoint.from_pair(*ab)
        q = pc.ProjectivePoint.from_pair(*cd)
        r = pc.ProjectivePoint.from_pair(*ef)
        dpq = pc.chordal_distance(p, q)
        assert 0.0 <= dpq <= 1.0
        assert dpq == pytest.approx(pc.chordal_distance(q, p), abs=1e-15)
        assert dpq <= pc.chordal_distance(p, r) + pc.chordal_distance(r, q) + 1e-12

    def test_line_angle_examples(self):
        assert pc.line_angle(INF, ZERO) == pytest.approx(math.pi / 2.0, rel=1e-14)
        diag = pc.ProjectivePoint.from_pair(1.0, 1.0)
        assert pc.line_angle(diag, INF) == pytest.approx(math.pi / 4.0, rel=1e-14)
        p = pc.ProjectivePoint.from_pair(2.0, 1.0)
        assert pc.line_angle(p, INF) == pytest.approx(math.asin(1.0 / math.sqrt(5.0)), rel=1e-14)

    @settings(max_examples=100, deadline=None)
    @given(nonzero_pairs(), nonzero_pairs())
    def test_sine_of_angle_is_chordal_distance(self, ab, cd):
        p = pc.ProjectivePoint.from_pair(*ab)
        q = pc.ProjectivePoint.from_pair(*cd)
        assert math.sin(pc.line_angle(p, q)) == pytest.approx(
            pc.chordal_distance(p, q), abs=1e-14
        )


class TestKappaFormulas:
    def test_hand_values(self):
        p, t, w = scalar_fixture()
        assert pc.kappa_a(p, t, w) == pytest.approx(3.0, rel=1e-12)
        assert pc.kappa_r(p, t, w) == pytest.approx(1.5, rel=1e-12)
        assert pc.kappa_theta(p, t, w) == pytest.approx(0.6, rel=1e-12)
        assert pc.kappa_h(p, t, w) == pytest.approx(5.0**-0.5, rel=1e-12)

    def test_zero_eigenvalue_absolute_number(self):
        # P = lambda: kappa_a at 0 reduces to omega_0
        p = pc.MatrixPolynomial.scalar([0.0, 1.0])
        t = pc.eigentriple(p, pc.ProjectivePoint.zero())
        w = pc.WeightScheme.absolute(p)
        assert pc.kappa_a(p, t, w) == pytest.approx(1.0, rel=1e-12)
        with pytest.raises(pc.UndefinedForZeroOrInfinite):
            pc.kappa_r(p, t, w)

    def test_infinite_eigenvalue_raises_for_nonhomogeneous(self):
        p = pc.MatrixPolynomial.from_coefficients([np.eye(2), np.diag([1.0, 0.0])])
        t = pc.eigentriple(p, pc.ProjectivePoint.infinity())
        w = pc.WeightScheme.absolute(p)
        with pytest.raises(pc.UndefinedForInfinite):
            pc.kappa_a(p, t, w)
        with pytest.raises(pc.UndefinedForZeroOrInfinite):
            pc.kappa_r(p, t, w)
        assert pc.kappa_theta(p, t, w) == pytest.approx(1.0, rel=1e-12)

    def test_non_simple_raises(self):
        p = pc.MatrixPolynomial.from_coefficients([-np.eye(2), np.eye(2)])
        eigs = pc.eigenvalues(p)
        t = pc.eigentriple(p, eigs[0].point, known_eigenvalues=eigs)
        w = pc.WeightScheme.absolute(p)
        for fn in (pc.kappa_a, pc.kappa_r, pc.kappa_h, pc.kappa_theta):
            with pytest.raises(pc.NotSimple):
                fn(p, t, w)

    def test_absolute_equals_relative_times_modulus(self):
        pencil = pc.example_pencil(0.1)
        w = pc.WeightScheme.coefficient_norms(pencil)
        for t in simple_triples(pencil):
            ka = pc.kappa_a(pencil, t, w)
            kr = pc.kappa_r(pencil, t, w)
            assert rel_err(ka, kr * t.point.abs_lambda) <= 1e-12

    def test_representative_invariance(self):
        rng = np.random.default_rng(50)
        p = pc.random_regular(3, 3, 314)
        w = pc.WeightScheme.coefficient_norms(p)
        for t in simple_triples(p)[:4]:
            kh, kt = pc.kappa_h(p, t, w), pc.kappa_theta(p, t, w)
            for _ in range(3):
                c = complex(rng.normal(), rng.normal())
                point2 = pc.ProjectivePoint.from_pair(c * t.point.alpha, c * t.point.beta)
                t2 = pc.eigentriple(p, point2)
                assert rel_err(pc.kappa_h(p, t2, w), kh) <= 1e-13
                assert rel_err(pc.kappa_theta(p, t2, w), kt) <= 1e-13

    def test_eigenvector_scaling_invariance(self):
        rng = np.random.default_rng(51)
        p = pc.random_regular(3, 2, 217)
        w = pc.WeightScheme.coefficient_norms(p)
        da_db = {}
        for t in simple_triples(p)[:4]:
            base = (
                pc.kappa_a(p, t, w),
                pc.kappa_r(p, t, w),
                pc.kappa_h(p, t, w),
                pc.kappa_theta(p, t, w),
            )
            a = complex(rng.normal(), rng.normal())
            b = complex(rng.normal(), rng.normal())
            da, db = p.partials_homogeneous(t.point.alpha, t.point.beta)
            pairing = t.point.beta.conjugate() * da - t.point.alpha.conjugate() * db
            left, right = b * t.left, a * t.right
            denom = float(abs(left.conj() @ pairing @ right))
            t2 = dataclasses.replace(t, left=left, right=right, denom=denom)
            scaled = (
                pc.kappa_a(p, t2, w),
                pc.kappa_r(p, t2, w),
                pc.kappa_h(p, t2, w),
                pc.kappa_theta(p, t2, w),
            )
            for x, y in zip(base, scaled):
                assert rel_err(x, y) <= 1e-13


class TestCotangentConditionNumbers:
    def test_unit_modulus(self):
        ct = pc.cotangent_condition_numbers(pc.ProjectivePoint.from_lambda(1.0j))
        assert ct.kappa_a_ct == pytest.approx(2.0, rel=1e-12)
        assert ct.kappa_r_ct == pytest.approx(2.0, rel=1e-12)
        assert ct.kappa_a_t == pytest.approx(2.0, rel=1e-12)

    def test_modulus_two(self):
        ct = pc.cotangent_condition_numbers(pc.ProjectivePoint.from_lambda(2.0))
        assert ct.kappa_a_ct == pytest.approx(5.0, rel=1e-12)
        assert ct.kappa_r_ct == pytest.approx(2.5, rel=1e-12)
        assert ct.kappa_a_t == pytest.approx(1.25, rel=1e-12)

    def test_zero_point(self):
        ct = pc.cotangent_condition_numbers(ZERO)
        assert ct.kappa_a_ct == pytest.approx(1.0)
        assert ct.kappa_r_ct is None and ct.kappa_a_t is None

    def test_infinite_point(self):
        ct = pc.cotangent_condition_numbers(INF)
        assert ct.kappa_a_ct is None and ct.kappa_r_ct is None
        assert ct.kappa_a_t == pytest.approx(1.0)


class TestRelationReport:
    def test_scalar_fixture_values_and_residuals(self):
        p, t, w = scalar_fixture()
        rep = pc.relation_report(p, t, w)
        assert rep.kappa_a == pytest.approx(3.0, rel=1e-14)
        assert rep.kappa_r == pytest.approx(1.5, rel=1e-14)
        assert rep.kappa_theta == pytest.approx(0.6, rel=1e-14)
        assert rep.kappa_h == pytest.approx(5.0**-0.5, rel=1e-14)
        assert rep.worst_residual <= 1e-14

    def test_infinite_eigenvalue_report(self):
        p = pc.MatrixPolynomial.from_coefficients([np.eye(2), np.diag([1.0, 0.0])])
        t = pc.eigentriple(p, pc.ProjectivePoint.infinity())
        rep = pc.relation_report(p, t, pc.WeightScheme.absolute(p))
        assert rep.kappa_a is None and rep.kappa_r is None
        assert rep.lambda_abs == math.inf
        # at infinity the chordal number coincides with the reversal's absolute
        # number at 0 (cos^2 factor is exactly 1)
        assert rel_err(rep.kappa_theta, rep.kappa_a_rev) <= 1e-12
        assert rep.worst_residual <= 1e-12

    def test_zero_eigenvalue_report(self):
        p = pc.MatrixPolynomial.scalar([0.0, 1.0])
        t = pc.eigentriple(p, pc.ProjectivePoint.zero())
        rep = pc.relation_report(p, t, pc.WeightScheme.absolute(p))
        assert rep.kappa_r is None and rep.kappa_a_rev is None
        assert rel_err(rep.kappa_theta, rep.kappa_a) <= 1e-13  # sin^2 = 1 at zero
        assert rep.worst_residual <= 1e-12

    def test_unit_modulus_halving(self):
        # at |lambda| = 1 the chordal number is exactly half the others
        p = pc.MatrixPolynomial.scalar([-1.0j, 1.0])
        t = pc.eigentriple(p, pc.ProjectivePoint.from_lambda(1.0j))
        w = pc.WeightScheme.absolute(p)
        rep = pc.relation_report(p, t, w)
        assert rel_err(rep.kappa_theta, rep.kappa_a / 2.0) <= 1e-13
        assert rel_err(rep.kappa_theta, rep.kappa_r / 2.0) <= 1e-13

    def test_randomized_self_consistency(self):
        worst = 0.0
        checked = 0
        for seed in range(25):
            n = 1 + seed % 4
            k = 1 + seed % 5
            p = pc.random_regular(n, k, 7000 + seed)
            mode = ("coeff", "max", "abs")[seed % 3]
            w = pc.WeightScheme.for_mode(p, mode)
            for t in simple_triples(p):
                rep = pc.relation_report(p, t, w)
                worst = max(worst, rep.worst_residual)
                checked += 1
        assert checked > 50
        assert worst <= 1e-9

    def test_fault_injection_is_detected(self):
        p, t, w = scalar_fixture()
        rep = pc.relation_report(p, t, w, _kappa_theta_scale=1.0 + 1e-5)
        assert rep.worst_residual > 1e-6

    def test_ordering_inequalities(self):
        for seed in range(8):
            p = pc.random_regular(2, 3, 880 + seed)
            w = pc.WeightScheme.coefficient_norms(p)
            for t in simple_triples(p):
                rep = pc.relation_report(p, t, w)
                kt = rep.kappa_theta
                if rep.kappa_a is not None:
                    assert kt <= rep.kappa_a * (1.0 + 1e-12)
                if rep.kappa_r is not None:
                    assert kt <= rep.kappa_r * (1.0 + 1e-12)
                ratio = rep.kappa_h / kt
                assert 1.0 / math.sqrt(p.k + 1) - 1e-12 <= ratio <= 1.0 + 1e-12


class TestComputabilityBounds:
    def test_max_norm_weights_always_bound(self):
        for seed in range(10):
            rng = np.random.default_rng(4000 + seed)
            p = pc.MatrixPolynomial(complex_normal(rng, (2, 3, 3)))
            if not p.is_regular():
                continue
            w = pc.WeightScheme.max_norm(p)
            for t in simple_triples(p):
                if t.point.is_infinite:
                    continue
                b = pc.computability_bounds(p, t, w)
                assert b.case == 1
                assert b.theta_bound_ok
                assert b.theta_lower_bound >= 1.0 - 1e-12
                assert b.kappa_a_ok
                if b.kappa_r is not None:
                    assert b.kappa_r_ok

    def test_coefficient_weights_small_lambda_case(self):
        rng = np.random.default_rng(4100)
        found = 0
        for seed in range(30):
            b1 = complex_normal(rng, (3, 3))
            b0 = complex_normal(rng, (3, 3))
            b1 *= 0.9 / pc.spectral_norm(b1)
            b0 *= 1.0 / pc.spectral_norm(b0)  # ||B1|| <= ||B0||
            p = pc.MatrixPolynomial.from_coefficients([b0, b1])
            w = pc.WeightScheme.coefficient_norms(p)
            for t in simple_triples(p):
                if t.point.is_infinite or t.point.abs_lambda >= 1.0:
                    continue
                b = pc.computability_bounds(p, t, w)
                assert b.case == 2
                assert b.kappa_a_ok and (b.kappa_r_ok or b.kappa_r is None)
                found += 1
        assert found > 15

    def test_parametric_pencil_escapes_every_case(self):
        # tiny eigenvalues, ||B0|| << ||B1||: no case applies and kappa_r stays
        # far below the would-be lower bound
        pencil = pc.example_pencil(1e-3)
        w = pc.WeightScheme.coefficient_norms(pencil)
        t = simple_triples(pencil)[0]
        b = pc.computability_bounds(pencil, t, w)
        assert b.case is None
        assert b.theta_bound_ok
        assert b.kappa_r is not None and not b.kappa_r_ok
        assert b.kappa_r < 10.0 < b.kappa_r_bound

    def test_rejects_higher_grade(self):
        p = pc.random_regular(2, 2, 5)
        w = pc.WeightScheme.absolute(p)
        t = simple_triples(p)[0]
        with pytest.raises(pc.PencilOnly):
            pc.computability_bounds(p, t, w)

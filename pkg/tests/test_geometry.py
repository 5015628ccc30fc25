import math

import numpy as np
import pytest

from jacobi_cs import (
    BoundaryProximity,
    HermitianMetric2,
    ModelParams,
    TangentVector,
    WirtingerStencil,
    kahler_condition_check,
    make_jacobi_point,
    metric,
    metric_det,
    metric_fd,
    ricci,
    ricci_fd,
    scalar_curvature,
    tangent_norm,
    tilde_metric,
    volume_density,
)
from jacobi_cs.geometry import (
    hermitian_to_real,
    hermitian_to_symplectic,
    real_to_hermitian,
    symplectic_to_hermitian,
)
from conftest import random_points

P1 = ModelParams(1.0, 1.0)
GRID = [ModelParams(k, mu) for k in (1.0, 1.5, 2.0) for mu in (0.5, 1.0, 2.0)]


def metric_gap(h1, h2):
    return max(abs(h1.h_zz - h2.h_zz), abs(h1.h_zw - h2.h_zw),
               abs(h1.h_ww - h2.h_ww))


class TestMetric:
    def test_origin(self):
        h = metric(make_jacobi_point(0, 0), P1)
        assert (h.h_zz, h.h_zw, h.h_ww) == (1.0, 0.0, 2.0)

    def test_hand_value(self):
        h = metric(make_jacobi_point(1.0, 0.5), P1)
        assert h.h_zz == pytest.approx(4 / 3)
        assert h.h_zw == pytest.approx(8 / 3)
        assert h.h_ww == pytest.approx(80 / 9)

    def test_positive_definite_everywhere(self, rng):
        # constructor enforces positivity, so surviving construction is the assert
        for p in random_points(rng, 10_000, z_scale=2.0, w_radius=0.95):
            metric(p, P1)


class TestMetricFiniteDifference:
    def test_matches_at_origin(self):
        gap = metric_gap(metric_fd(make_jacobi_point(0, 0), P1),
                         metric(make_jacobi_point(0, 0), P1))
        assert gap <= 1e-6

    def test_matches_hand_value(self):
        p = make_jacobi_point(1.0, 0.5)
        hf = metric_fd(p, P1)
        assert hf.h_zz == pytest.approx(4 / 3, rel=1e-6)
        assert hf.h_zw == pytest.approx(8 / 3, rel=1e-6)
        assert hf.h_ww == pytest.approx(80 / 9, rel=1e-6)

    def test_agreement_on_grid(self, rng):
        for params in GRID:
            for p in random_points(rng, 12, z_scale=1.0, w_radius=0.6):
                h, hf = metric(p, params), metric_fd(p, params)
                scale = max(h.h_zz, abs(h.h_zw), h.h_ww)
                assert metric_gap(h, hf) <= 1e-6 * scale

    def test_boundary_proximity(self):
        p = make_jacobi_point(0.0, 0.999997)
        with pytest.raises(BoundaryProximity):
            metric_fd(p, P1, WirtingerStencil(1e-4))

    def test_step_validation(self):
        with pytest.raises(ValueError):
            WirtingerStencil(0.1)
        with pytest.raises(ValueError):
            WirtingerStencil(1e-9)


class TestDeterminant:
    def test_origin(self):
        assert metric_det(make_jacobi_point(0, 0), P1) == pytest.approx(2.0)

    def test_hand_value(self):
        got = metric_det(make_jacobi_point(1.0, 0.5), P1)
        assert got == pytest.approx(128 / 27, rel=1e-12)

    def test_closed_form_and_z_independence(self, rng):
        for p in random_points(rng, 50, z_scale=2.0, w_radius=0.8):
            det = metric_det(p, P1)
            assert det == pytest.approx(2 / p.p**3, rel=1e-12)
            at_zero_z = metric_det(make_jacobi_point(0.0, p.w), P1)
            assert det == pytest.approx(at_zero_z, rel=1e-12)


class TestRicci:
    def test_at_origin(self):
        r = ricci(make_jacobi_point(0, 0), P1)
        assert (r.r_zz, r.r_zw, r.r_ww) == (0.0, 0.0, -3.0)

    def test_hand_value(self):
        r = ricci(make_jacobi_point(0.3j, 0.5), P1)
        assert r.r_ww == pytest.approx(-3 / 0.5625)

    def test_only_disk_component(self, rng):
        for p in random_points(rng, 50, z_scale=2.0, w_radius=0.9):
            r = ricci(p, ModelParams(1.5, 0.7))
            assert r.r_zz == 0.0 and r.r_zw == 0.0 and r.r_ww < 0.0

    def test_matches_log_det_hessian(self, rng):
        for p in random_points(rng, 10, z_scale=1.0, w_radius=0.6):
            rc, rf = ricci(p, P1), ricci_fd(p, P1)
            assert abs(rc.r_zz - rf.r_zz) <= 1e-6
            assert abs(rc.r_zw - rf.r_zw) <= 1e-6
            assert abs(rc.r_ww - rf.r_ww) <= 1e-6 * abs(rc.r_ww)


class TestScalarCurvature:
    @pytest.mark.parametrize("k,want", [(1.0, -1.5), (2.0, -0.75)])
    def test_reference_values(self, k, want):
        p = make_jacobi_point(0.7 - 0.1j, 0.2 + 0.4j)
        assert scalar_curvature(p, ModelParams(k, 1.0)) == pytest.approx(want)

    def test_constant_over_points_and_mu(self):
        a = scalar_curvature(make_jacobi_point(0, 0), ModelParams(1.0, 1.0))
        b = scalar_curvature(make_jacobi_point(1 + 1j, 0.4 - 0.2j),
                             ModelParams(1.0, 2.0))
        assert a == pytest.approx(b, abs=1e-12)

    def test_variance_over_sample(self, rng):
        values = [scalar_curvature(p, ModelParams(1.5, 0.5))
                  for p in random_points(rng, 100, z_scale=1.5, w_radius=0.8)]
        assert np.var(values) < 1e-18
        assert np.mean(values) == pytest.approx(-1.0)


class TestTildeMetric:
    def test_origin(self):
        h = tilde_metric(make_jacobi_point(0, 0), P1)
        assert (h.h_zz, h.h_zw, h.h_ww) == (3.0, 0.0, 9.0)

    def test_positive_definite(self, rng):
        for p in random_points(rng, 200, z_scale=1.5, w_radius=0.9):
            tilde_metric(p, P1)   # constructor asserts positivity

    def test_shifted_weight_identity(self, rng):
        # pure-w block equals 3x the metric with k -> k + 1/2
        for p in random_points(rng, 20, z_scale=1.5, w_radius=0.8):
            t = tilde_metric(p, P1)
            shifted = metric(p, ModelParams(P1.k + 0.5, P1.mu))
            assert t.h_ww == pytest.approx(3 * shifted.h_ww, rel=1e-12)
            assert t.h_zz == pytest.approx(3 * shifted.h_zz, rel=1e-12)
            assert t.h_zw == pytest.approx(3 * shifted.h_zw, rel=1e-12)


class TestVolume:
    def test_origin(self):
        assert volume_density(make_jacobi_point(0, 0), P1) == pytest.approx(4.0)

    def test_hand_value(self):
        got = volume_density(make_jacobi_point(2 - 1j, 0.5), P1)
        assert got == pytest.approx(4 / 0.75**3)

    def test_twice_determinant(self, rng):
        for p in random_points(rng, 50, z_scale=2.0, w_radius=0.9):
            assert volume_density(p, P1) == pytest.approx(
                2 * metric_det(p, P1), rel=1e-12)


class TestTangentNorm:
    def test_zero_vector(self):
        p = make_jacobi_point(0.5, 0.5j)
        assert tangent_norm(p, TangentVector(0, 0), P1) == 0.0

    def test_unit_directions_at_origin(self):
        p = make_jacobi_point(0, 0)
        assert tangent_norm(p, TangentVector(1, 0), P1) == pytest.approx(1.0)
        assert tangent_norm(p, TangentVector(0, 1), P1) == pytest.approx(math.sqrt(2))

    def test_matches_quadratic_form(self, rng):
        for p in random_points(rng, 20):
            v = TangentVector(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                              complex(rng.uniform(-1, 1), rng.uniform(-1, 1)))
            h = metric(p, P1)
            want = (h.h_zz * abs(v.dz) ** 2
                    + 2 * (h.h_zw * v.dz * v.dw.conjugate()).real
                    + h.h_ww * abs(v.dw) ** 2)
            assert tangent_norm(p, v, P1) ** 2 == pytest.approx(want, rel=1e-12)


class TestKahlerCondition:
    def test_holds_at_origin(self):
        assert kahler_condition_check(make_jacobi_point(0, 0), P1) < 1e-6

    def test_holds_off_origin(self):
        got = kahler_condition_check(make_jacobi_point(1 + 1j, 0.3 + 0.2j),
                                     ModelParams(2.0, 0.5))
        assert got < 1e-6

    def test_negative_control(self):
        # corrupt the mixed coefficient with a holomorphic w-term: its
        # w-derivative no longer matches anything in the pure-w column
        def corrupted(pt, params):
            h = metric(pt, params)
            return HermitianMetric2(h.h_zz, h.h_zw + 0.3 * pt.w, h.h_ww)

        got = kahler_condition_check(make_jacobi_point(0.4, 0.2), P1,
                                     metric_fn=corrupted)
        assert got > 0.01


class TestNonEinstein:
    def test_witness_everywhere(self, rng):
        for p in random_points(rng, 100, z_scale=1.5, w_radius=0.9):
            h = metric(p, P1)
            r = ricci(p, P1)
            assert r.r_zz == 0.0
            assert h.h_zz > 0.0
            assert r.r_ww < 0.0


class TestFormPackaging:
    def test_real_roundtrip(self, rng):
        for _ in range(20):
            h = HermitianMetric2(rng.uniform(0.5, 2),
                                 complex(rng.uniform(-0.4, 0.4),
                                         rng.uniform(-0.4, 0.4)),
                                 rng.uniform(1, 3))
            h_zz, h_zw, h_ww, defect = real_to_hermitian(hermitian_to_real(h))
            assert (h_zz, h_zw, h_ww) == (h.h_zz, h.h_zw, h.h_ww)
            assert defect == 0.0

    def test_symplectic_roundtrip(self, rng):
        for _ in range(20):
            h = HermitianMetric2(rng.uniform(0.5, 2),
                                 complex(rng.uniform(-0.4, 0.4),
                                         rng.uniform(-0.4, 0.4)),
                                 rng.uniform(1, 3))
            omega = hermitian_to_symplectic(h)
            assert np.allclose(omega, -omega.T)
            h_zz, h_zw, h_ww, defect = symplectic_to_hermitian(omega)
            assert (h_zz, h_zw, h_ww) == (h.h_zz, h.h_zw, h.h_ww)
            assert defect == 0.0

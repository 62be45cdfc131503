import cmath
import math

import numpy as np
import pytest

from triladder import coherent, fock


class TestTruncationRule:
    def test_alpha_zero_is_extremal_size(self):
        for j in range(3):
            assert coherent.adequate_truncation(j, 0.0) == j + 1

    def test_mod_three_alignment(self):
        for j in range(3):
            for a in (0.5, 2.0, 5.0):
                n = coherent.adequate_truncation(j, a)
                assert (n - 1) % 3 == j

    def test_monotone_in_alpha(self):
        sizes = [coherent.adequate_truncation(0, a) for a in (0.0, 1.0, 3.0, 5.0)]
        assert sizes == sorted(sizes)

    def test_dropped_tail_is_negligible(self):
        # norm^2 of the dropped coefficients, relative, stays below 1e-24
        for j, a in [(0, 5.0), (1, 3.3), (2, 4.8)]:
            n = coherent.adequate_truncation(j, a)
            m_kept = (n - 1 - j) // 3 + 1
            x = a * a
            term = 1.0 / math.factorial(j)
            total = 0.0
            tail = 0.0
            for m in range(m_kept + 60):
                if m < m_kept:
                    total += term
                else:
                    tail += term
                k = 3 * m + j
                term *= x / ((k + 1) * (k + 2) * (k + 3))
            assert tail / total < 1e-24

    def test_spec_auto_and_explicit(self):
        spec = coherent.CoherentSpec(1, 2.0)
        assert spec.truncation == coherent.adequate_truncation(1, 2.0)
        probe = coherent.CoherentSpec(1, 2.0, truncation=5)
        assert probe.truncation == 5
        with pytest.raises(ValueError):
            coherent.CoherentSpec(2, 1.0, truncation=2)


class TestBuildCS:
    def test_alpha_zero_gives_extremal_states(self):
        v0 = coherent.build_cs(coherent.CoherentSpec(0, 0.0))
        assert v0.coeffs.tolist() == [1.0 + 0.0j]
        v2 = coherent.build_cs(coherent.CoherentSpec(2, 0.0))
        np.testing.assert_allclose(v2.coeffs, [0, 0, 1.0])

    def test_coefficient_ratio(self):
        v = coherent.build_cs(coherent.CoherentSpec(0, 1.0))
        assert v.coeffs[3] / v.coeffs[0] == pytest.approx(1 / math.sqrt(6), abs=1e-15)

    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_unit_norm_and_support(self, j):
        v = coherent.build_cs(coherent.CoherentSpec(j, 2.5 - 1.5j))
        assert abs(v.norm() - 1.0) < 1e-12
        off = np.arange(v.truncation) % 3 != j
        assert np.all(v.coeffs[off] == 0)

    def test_truncation_error_carries_required_size(self):
        spec = coherent.CoherentSpec(0, 4.0, truncation=5)
        with pytest.raises(coherent.TruncationError) as info:
            coherent.build_cs(spec)
        assert info.value.required == coherent.adequate_truncation(0, 4.0)
        assert info.value.given == 5

    def test_explicit_adequate_truncation_accepted(self):
        needed = coherent.adequate_truncation(1, 2.0)
        v = coherent.build_cs(coherent.CoherentSpec(1, 2.0, truncation=needed + 6))
        assert v.truncation == needed + 6


class TestEigenResidual:
    def test_vacuum_exact(self):
        assert coherent.eigen_residual(coherent.CoherentSpec(0, 0.0)) == 0.0

    def test_adequate_truncation_small_residual(self):
        assert coherent.eigen_residual(coherent.CoherentSpec(1, 2.0)) < 1e-10

    def test_random_eigenvalues(self):
        rng = np.random.default_rng(11)
        for _ in range(15):
            j = int(rng.integers(0, 3))
            alpha = rng.uniform(0, 5) * np.exp(2j * np.pi * rng.uniform())
            spec = coherent.CoherentSpec(j, alpha)
            res = coherent.eigen_residual(spec)
            assert res < 1e-10
            # the residual is dominated by the top kept coefficient
            top = abs(coherent.build_cs(spec).coeffs[-1])
            assert res <= 10 * abs(alpha) * top + 1e-14

    def test_undersized_truncation_flagged(self):
        res = coherent.eigen_residual(coherent.CoherentSpec(2, 5.0, truncation=9))
        assert res > 1e-3


class TestMeanOccupationSeries:
    def test_values_at_zero(self):
        assert coherent.a_norm_squared(0, 0.0) == 0.0
        assert coherent.a_norm_squared(1, 0.0) == pytest.approx(1.0, abs=1e-15)
        assert coherent.a_norm_squared(2, 0.0) == pytest.approx(2.0, abs=1e-15)

    @pytest.mark.parametrize("j", [0, 1, 2])
    @pytest.mark.parametrize("abs_alpha", [0.3, 1.0, 2.7, 5.0])
    def test_matches_quadratic_form(self, j, abs_alpha):
        spec = coherent.CoherentSpec(j, abs_alpha)
        v = coherent.build_cs(spec).coeffs
        n_op = spec.truncation + 3
        vec = np.zeros(n_op, dtype=complex)
        vec[: v.size] = v
        a = fock.build_annihilation(n_op).matrix
        number = float(np.vdot(vec, (a.conj().T @ a) @ vec).real)
        assert coherent.a_norm_squared(j, abs_alpha) == pytest.approx(
            number, abs=1e-10
        )

    def test_growth_without_bound(self):
        assert coherent.a_norm_squared(0, 10.0) > coherent.a_norm_squared(0, 1.0)


class TestStatistics:
    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_minima(self, j):
        st = coherent.statistics(coherent.CoherentSpec(j, 0.0))
        assert st.uncertainty_product == pytest.approx(j + 0.5, abs=1e-12)

    @pytest.mark.parametrize(
        "j,alpha",
        [(0, 1 + 1j), (1, 2.0), (2, 0.5 - 2.5j), (0, 4.9j), (1, 3.3 + 0.1j)],
    )
    def test_identity_chain(self, j, alpha):
        st = coherent.statistics(coherent.CoherentSpec(j, alpha))
        assert abs(st.mean_x) < 1e-12
        assert abs(st.mean_p) < 1e-12
        assert st.mean_x2 == pytest.approx(st.mean_p2, abs=1e-12)
        assert st.mean_x2 == pytest.approx(st.mean_H, abs=1e-12)
        assert st.mean_x2 == pytest.approx(st.uncertainty_product, abs=1e-12)

    def test_series_cross_check(self):
        st = coherent.statistics(coherent.CoherentSpec(0, 1 + 1j))
        series = coherent.a_norm_squared(0, math.sqrt(2.0)) + 0.5
        assert st.uncertainty_product == pytest.approx(series, abs=1e-12)

    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_squared_lowering_mean_vanishes(self, j):
        # <a^2> couples residues two apart, so it is exactly zero on a ladder
        spec = coherent.CoherentSpec(j, 1.7 - 0.4j)
        v = coherent.build_cs(spec).coeffs
        n_op = spec.truncation + 3
        vec = np.zeros(n_op, dtype=complex)
        vec[: v.size] = v
        a = fock.build_annihilation(n_op).matrix
        assert complex(np.vdot(vec, (a @ a) @ vec)) == 0.0


class TestEvolution:
    def test_identity_at_zero(self):
        spec = coherent.CoherentSpec(1, 1.5)
        phase, evolved = coherent.evolve(spec, 0.0)
        assert phase == 1.0
        assert evolved == spec

    def test_third_period_restores_alpha(self):
        spec = coherent.CoherentSpec(2, 1.0 + 0.5j)
        t = 2 * math.pi / 3
        phase, evolved = coherent.evolve(spec, t)
        assert evolved.alpha == pytest.approx(spec.alpha, abs=1e-14)
        assert phase == pytest.approx(cmath.exp(-1j * 2.5 * t), abs=1e-14)

    def test_sixth_period_negates_alpha(self):
        _, evolved = coherent.evolve(coherent.CoherentSpec(0, 1.0), math.pi / 3)
        assert evolved.alpha == pytest.approx(-1.0, abs=1e-14)

    def test_coefficientwise_consistency(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            j = int(rng.integers(0, 3))
            alpha = rng.uniform(0, 4) * np.exp(2j * np.pi * rng.uniform())
            t = rng.uniform(0, 4 * np.pi)
            spec = coherent.CoherentSpec(j, alpha)
            before = coherent.build_cs(spec).coeffs
            phase, evolved = coherent.evolve(spec, t)
            after = coherent.build_cs(evolved).coeffs
            n = np.arange(spec.truncation)
            direct = before * np.exp(-1j * (n + 0.5) * t)
            assert np.max(np.abs(direct - phase * after)) < 1e-12


class TestStandardCS:
    def test_vacuum(self):
        v = coherent.standard_cs_nonnorm(0.0)
        assert v.coeffs.tolist() == [1.0 + 0.0j]

    def test_coefficient_value(self):
        v = coherent.standard_cs_nonnorm(1.0)
        assert v.coeffs[2] == pytest.approx(1 / math.sqrt(2), abs=1e-15)

    def test_norm_squared_is_exponential(self):
        v = coherent.standard_cs_nonnorm(2.0)
        assert v.norm() ** 2 == pytest.approx(math.exp(4.0), rel=1e-10)

    def test_truncation_error(self):
        with pytest.raises(coherent.TruncationError):
            coherent.standard_cs_nonnorm(3.0, n_trunc=10)


class TestDeformedNonnorm:
    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_slice_of_standard(self, j):
        z = 1.3 - 0.6j
        n = max(
            coherent.adequate_truncation_standard(abs(z)),
            coherent.adequate_truncation(j, abs(z) ** 3),
        )
        full = coherent.standard_cs_nonnorm(z, n).coeffs
        part = coherent.deformed_cs_nonnorm(z, j, n).coeffs
        mask = np.arange(n) % 3 == j
        np.testing.assert_allclose(part[mask], full[mask], atol=1e-14)
        assert np.all(part[~mask] == 0)

    def test_mod_three_partition_of_exponential(self):
        for z in (1.0, 1.8, 3.0):
            n = max(
                [coherent.adequate_truncation_standard(z)]
                + [coherent.adequate_truncation(j, z**3) for j in range(3)]
            )
            total = sum(
                np.linalg.norm(coherent.deformed_cs_nonnorm(z, j, n).coeffs) ** 2
                for j in range(3)
            )
            assert total == pytest.approx(math.exp(z * z), rel=1e-10)


class TestTriangleDecomposition:
    def test_weights_third_roots_filter(self):
        omega = cmath.exp(2j * math.pi / 3)
        tri0 = coherent.triangle_decompose(1.0, 0)
        np.testing.assert_allclose(tri0.weights, [1 / 3, 1 / 3, 1 / 3], atol=1e-15)
        tri2 = coherent.triangle_decompose(1.0, 2)
        np.testing.assert_allclose(
            tri2.weights, [1 / 3, omega / 3, omega**2 / 3], atol=1e-15
        )
        for j in range(3):
            tri = coherent.triangle_decompose(2.0, j)
            assert all(abs(abs(w) - 1 / 3) < 1e-15 for w in tri.weights)

    def test_labels_form_triangle(self):
        tri = coherent.triangle_decompose(2.0, 1)
        mags = [abs(lab) for lab in tri.labels]
        np.testing.assert_allclose(mags, 2.0)
        # pairwise distances equal: equilateral
        d01 = abs(tri.labels[0] - tri.labels[1])
        d12 = abs(tri.labels[1] - tri.labels[2])
        d20 = abs(tri.labels[2] - tri.labels[0])
        assert d01 == pytest.approx(d12, abs=1e-14)
        assert d12 == pytest.approx(d20, abs=1e-14)

    def test_reconstruction_oracle_small_truncation(self):
        # direct coefficient comparison at n = 30, the filter keeps n = 3k
        tri = coherent.triangle_decompose(1.0, 0)
        err = np.max(np.abs(tri.reconstruction(30).coeffs - tri.target(30).coeffs))
        assert err < 1e-12

    def test_filter_property(self):
        tri = coherent.triangle_decompose(1.0, 1)
        rec = tri.reconstruction(30).coeffs
        off = np.arange(30) % 3 != 1
        assert np.max(np.abs(rec[off])) < 1e-12

    @pytest.mark.parametrize("j", [0, 1, 2])
    @pytest.mark.parametrize("z", [0.5, 1.5, 3.0, 2.1 + 2.1j])
    def test_reconstruction_matches_target(self, j, z):
        tri = coherent.triangle_decompose(z, j)
        n = tri.default_truncation()
        err = np.max(np.abs(tri.reconstruction(n).coeffs - tri.target(n).coeffs))
        assert err < 1e-12

    def test_degenerate_label(self):
        tri = coherent.triangle_decompose(0.0, 0)
        rec = tri.reconstruction(4).coeffs
        np.testing.assert_allclose(rec, [1, 0, 0, 0], atol=1e-15)

    def test_cross_family_orthogonality_exact(self):
        n = coherent.adequate_truncation(2, 8.0)
        states = [
            coherent.cs_coefficients(j, 2.0 * cmath.exp(0.3j), n) for j in range(3)
        ]
        for j in range(3):
            for k in range(j + 1, 3):
                assert complex(np.vdot(states[j], states[k])) == 0.0


class TestMomentCheck:
    @staticmethod
    def exp_weight_samples(step=0.01, top=60.0):
        x = np.arange(0.0, top + step, step)
        return np.column_stack([x, np.exp(-x)])

    def test_wrong_weight_pattern(self):
        rows = coherent.moment_check(0, self.exp_weight_samples(), 2)
        # analytic moments of e^-x are (n-1)!: matches at n=1, misses 6 at n=2
        assert rows[0].computed == pytest.approx(1.0, rel=1e-4)
        assert rows[0].target == 1
        assert rows[0].rel_error < 1e-3
        assert rows[1].computed == pytest.approx(1.0, rel=1e-4)
        assert rows[1].target == 6
        assert rows[1].rel_error > 0.5

    def test_first_targets_are_small_factorials(self):
        for j, want in [(0, 1), (1, 1), (2, 2)]:
            rows = coherent.moment_check(j, self.exp_weight_samples(0.1, 10.0), 1)
            assert rows[0].target == want

    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_targets_exact_factorials_up_to_ten(self, j):
        rows = coherent.moment_check(j, self.exp_weight_samples(0.5, 10.0), 10)
        for row in rows:
            assert row.target == math.factorial(3 * (row.n - 1) + j)
            assert isinstance(row.target, int)

    def test_third_moment_target(self):
        # j=1 targets run 1!, 4!, 7!, i.e. the gamma values at 2, 5, 8
        rows = coherent.moment_check(1, self.exp_weight_samples(0.5, 10.0), 3)
        assert rows[2].target == math.factorial(7)

    def test_invalid_samples(self):
        with pytest.raises(ValueError):
            coherent.moment_check(0, [], 2)
        with pytest.raises(ValueError):
            coherent.moment_check(0, [(0.0, 1.0), (1.0, -0.5)], 2)
        with pytest.raises(ValueError):
            coherent.moment_check(0, [(0.0, 1.0), (0.0, 1.0)], 2)
        with pytest.raises(ValueError):
            coherent.moment_check(0, [(-1.0, 1.0), (1.0, 1.0)], 2)
        with pytest.raises(ValueError):
            coherent.moment_check(0, self.exp_weight_samples(0.5, 5.0), 0)

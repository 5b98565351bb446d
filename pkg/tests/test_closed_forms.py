import cmath
import math

import numpy as np
import pytest

from mglap import (
    EllipseSpec,
    alternating6_spectrum,
    alternating_measure,
    eigen_residual,
    eigenpair_tuples,
    ellipse_residual,
    ellipse_tuples,
    laplacian_matrix,
    spectrum,
    trig_vectors,
    two_atom_measure,
    two_atom_spectrum,
    uniform_eigenfunction,
    uniform_eigenfunction_values,
    uniform_eigenvalue,
    uniform_eigenvector,
    uniform_measure,
    uniform_spectrum,
)
from mglap.errors import ConstraintViolated, IndexOutOfRange, LengthMismatch, ShiftTooLarge, ZeroKappa
from oracles import cumulative_weights, dft_vector, eig2

H = math.sqrt(3) / 2


def random_alternating(rng):
    m1 = rng.uniform(0.01, 1 / 3 - 0.01)
    return m1, 1 / 3 - m1


class TestUniform:
    @pytest.mark.parametrize("n,l,lam", [(3, 1, -27.0), (6, 3, -144.0), (6, 1, -36.0), (6, 2, -108.0), (9, 0, 0.0)])
    def test_eigenvalue(self, n, l, lam):
        assert uniform_eigenvalue(n, l) == pytest.approx(lam, abs=1e-9)

    def test_matches_cosine_form(self):
        for n in range(3, 40):
            for l in range(n):
                assert uniform_eigenvalue(n, l) == pytest.approx(
                    -2 * n * n + 2 * n * n * math.cos(2 * math.pi * l / n), abs=1e-9 * n * n
                )

    def test_pairing_exact(self):
        for n in range(3, 65):
            for l in range(1, n):
                assert uniform_eigenvalue(n, l) == uniform_eigenvalue(n, n - l)

    def test_eigenvector(self):
        np.testing.assert_array_equal(uniform_eigenvector(5, 0), np.ones(5))
        np.testing.assert_allclose(uniform_eigenvector(3, 1), dft_vector(3, 1), atol=1e-15)
        np.testing.assert_allclose(uniform_eigenvector(6, 3), [1, -1, 1, -1, 1, -1], atol=1e-15)

    def test_residuals_all_sizes(self):
        for n in range(3, 65):
            bop = laplacian_matrix(uniform_measure(n))
            cf = uniform_spectrum(n)
            for lam, v in zip(cf.eigenvalues, cf.eigenvectors):
                assert eigen_residual(bop, lam, v) <= 1e-9 * bop.frobenius()
                assert eigen_residual(bop, lam, v.real if np.any(v.real) else v.imag) <= 1e-9 * bop.frobenius()

    def test_spectrum_agrees_with_solver(self):
        for n in (3, 4, 7, 12, 33):
            bn = laplacian_matrix(uniform_measure(n)).frobenius()
            got = spectrum(uniform_measure(n)).eigenvalues
            want = np.sort(uniform_spectrum(n).eigenvalues)[::-1]
            np.testing.assert_allclose(got, want, rtol=0, atol=1e-9 * bn)

    def test_index_errors(self):
        with pytest.raises(IndexOutOfRange):
            uniform_eigenvalue(2, 1)
        with pytest.raises(IndexOutOfRange):
            uniform_eigenvector(4, 4)
        with pytest.raises(IndexOutOfRange):
            uniform_eigenfunction_values(4, -1)

    def test_fourier_tuples_on_unit_circle(self):
        for n in (3, 6, 11):
            for l in range(n):
                v = uniform_eigenvector(n, l)
                np.testing.assert_allclose(v.real**2 + v.imag**2, 1.0, atol=1e-14)


class TestUniformEigenfunctions:
    def test_constant(self):
        np.testing.assert_array_equal(uniform_eigenfunction_values(3, 0), [1, 1, 1])

    def test_three_sine_branch(self):
        np.testing.assert_allclose(uniform_eigenfunction_values(3, 1), [0, H, -H], atol=1e-15)

    def test_six_cosine_branch(self):
        np.testing.assert_allclose(uniform_eigenfunction_values(6, 4), [1, -0.5, -0.5, 1, -0.5, -0.5], atol=1e-15)

    def test_six_alternates(self):
        np.testing.assert_allclose(uniform_eigenfunction_values(6, 3), [1, -1, 1, -1, 1, -1], atol=1e-15)

    def test_odd_branch_split(self):
        # for N = 5, l = 2 lies below N/2 (sine) and l = 3 above it (cosine)
        want = [math.cos(2 * math.pi * 2 * k / 5) for k in range(5)]
        np.testing.assert_allclose(uniform_eigenfunction_values(5, 3), [math.cos(2 * math.pi * 3 * k / 5) for k in range(5)], atol=1e-15)
        np.testing.assert_allclose(uniform_eigenfunction_values(5, 2), [math.sin(2 * math.pi * 2 * k / 5) for k in range(5)], atol=1e-15)
        assert not np.allclose(uniform_eigenfunction_values(5, 2), want)

    def test_step_function_and_residual(self):
        f = uniform_eigenfunction(6, 2)
        assert f.measure == uniform_measure(6)
        assert f(0.2) == pytest.approx(-H)
        bop = laplacian_matrix(f.measure)
        assert eigen_residual(bop, uniform_eigenvalue(6, 2), f.values) <= 1e-12 * bop.frobenius()


class TestTwoAtom:
    def test_equal(self):
        cf = two_atom_spectrum(0.5, 0.5)
        np.testing.assert_allclose(cf.eigenvalues, [0, -16], atol=1e-12)
        np.testing.assert_array_equal(cf.eigenvectors[1], [1, -1])

    def test_quarter(self):
        assert two_atom_spectrum(0.25, 0.75).eigenvalues[1] == pytest.approx(-320 / 9, rel=1e-14)

    def test_random_pairs(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            a1 = rng.uniform(0.01, 0.99)
            mu = two_atom_measure(a1, 1 - a1)
            bop = laplacian_matrix(mu)
            cf = two_atom_spectrum(*mu.weights)
            for lam, v in zip(cf.eigenvalues, cf.eigenvectors):
                assert eigen_residual(bop, lam, v) <= 1e-9 * bop.frobenius()
            want = eig2(bop.entries.tolist())
            np.testing.assert_allclose(cf.eigenvalues, want, rtol=0, atol=1e-9 * bop.frobenius())
            np.testing.assert_allclose(spectrum(mu).eigenvalues, want, rtol=0, atol=1e-9 * bop.frobenius())

    def test_constraint(self):
        with pytest.raises(ConstraintViolated):
            two_atom_spectrum(0.5, 0.6)


class TestAlternating:
    def test_reference_values(self):
        cf = alternating6_spectrum(1 / 4, 1 / 12)
        root = 16 * math.sqrt(73)
        np.testing.assert_allclose(
            cf.eigenvalues, [0, -160 + root, -160 - root, -320, -160 - root, -160 + root], atol=1e-9
        )
        assert cf.eigenvalues[1] == pytest.approx(-23.2959, abs=5e-5)
        assert cf.eigenvalues[2] == pytest.approx(-296.7041, abs=5e-5)
        np.testing.assert_array_equal(cf.eigenvectors[3], [1, -1, 1, -1, 1, -1])
        assert cf.params[2] == pytest.approx(1 / 3)

    def test_equal_weights_reduce_to_uniform(self):
        cf = alternating6_spectrum(1 / 6, 1 / 6)
        np.testing.assert_allclose(np.sort(cf.eigenvalues)[::-1], [0, -36, -36, -108, -108, -144], atol=1e-9)

    def test_random_pairs(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            m1, m2 = random_alternating(rng)
            bop = laplacian_matrix(alternating_measure(m1, m2))
            bn = bop.frobenius()
            cf = alternating6_spectrum(m1, m2)
            for lam, v in zip(cf.eigenvalues, cf.eigenvectors):
                assert eigen_residual(bop, lam, v) <= 1e-9 * bn
            got = spectrum(alternating_measure(m1, m2)).eigenvalues
            np.testing.assert_allclose(got, np.sort(cf.eigenvalues)[::-1], rtol=0, atol=1e-9 * bn)

    def test_constraint(self):
        with pytest.raises(ConstraintViolated):
            alternating6_spectrum(0.25, 0.25)


class TestEllipse:
    def test_third(self):
        spec = EllipseSpec(1 / 3)
        assert spec.left == pytest.approx(math.sqrt(73), rel=1e-14)
        assert spec.right == pytest.approx(-7.0, rel=1e-14)
        assert ellipse_residual(spec, 0.0, 1.0) == pytest.approx(0.0, abs=1e-14)
        assert ellipse_residual(spec, 0.0, 0.0) == -spec.left

    def test_r_one_is_not_the_unit_circle(self):
        spec = EllipseSpec(1.0)
        assert (spec.left, spec.right) == (1.0, 1.0)
        p = (math.sqrt(0.5), math.sqrt(0.5))
        assert ellipse_residual(spec, *p) == pytest.approx(-0.5)

    def test_tuples_reference(self):
        t = ellipse_tuples(1 / 4, 1 / 12)
        assert len(t["S15"]) == len(t["S24"]) == 6
        assert t["S15"][5] == (0.0, 1.0)
        spec = EllipseSpec(1 / 3)
        for x, y in t["S15"] + t["S24"]:
            assert abs(math.sqrt(73) * (x * x + y * y - 1) + 7 * x * y) <= 1e-9
            assert abs(ellipse_residual(spec, x, y)) <= 1e-9

    def test_random_pairs(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            m1, m2 = random_alternating(rng)
            spec = EllipseSpec(m2 / m1)
            for pts in ellipse_tuples(m1, m2).values():
                for x, y in pts:
                    assert abs(ellipse_residual(spec, x, y)) <= 1e-9

    def test_pairing(self):
        assert eigenpair_tuples([1, 2], [1, 2]) == [(1.0, 1.0), (2.0, 2.0)]
        with pytest.raises(LengthMismatch):
            eigenpair_tuples([1, 2], [1, 2, 3])


class TestTrigVectors:
    def test_uniform_four(self):
        w, u = trig_vectors(uniform_measure(4), 2.0)
        np.testing.assert_allclose(w, [1, 0, -1, 0], atol=1e-15)

    def test_even_multiples_give_ones(self):
        mu = uniform_measure(5)
        _, u = trig_vectors(mu, 10.0)
        np.testing.assert_allclose(u, 1.0, atol=1e-14)

    def test_alternating_brute_force(self):
        mu = alternating_measure(1 / 4, 1 / 12)
        cum = cumulative_weights(mu.weights)
        np.testing.assert_allclose(cum, [1 / 4, 1 / 3, 7 / 12, 2 / 3, 11 / 12, 1], atol=1e-15)
        w, u = trig_vectors(mu, 1.0)
        np.testing.assert_allclose(w, [math.sin(math.pi * c) for c in cum], atol=1e-15)
        np.testing.assert_allclose(u, [math.cos(math.pi * c) for c in cum], atol=1e-15)

    def test_shift(self):
        mu = alternating_measure(1 / 4, 1 / 12)
        cum = [0.0] + cumulative_weights(mu.weights)[:-1]
        w, _ = trig_vectors(mu, 1.0, 0.01)
        np.testing.assert_allclose(w, [math.sin(math.pi * c) for c in cum], atol=1e-15)

    def test_errors(self):
        with pytest.raises(ZeroKappa):
            trig_vectors(uniform_measure(3), 0.0)
        with pytest.raises(ShiftTooLarge):
            trig_vectors(alternating_measure(1 / 4, 1 / 12), 1.0, 0.5)


def test_dft_oracle_matches_library_phase_reduction():
    for n in (7, 64, 1000):
        l = n - 1
        np.testing.assert_allclose(uniform_eigenvector(n, l), [cmath.exp(2j * math.pi * k * l / n) for k in range(n)], atol=1e-12)

import unittest
import numpy as np
from blaschke.disk import frostman_map
from blaschke.errors import DomainError
from blaschke.indestructibility import m1_residual, m2_residual
from blaschke.products import (
    FiniteBlaschke, compose_finite, frostman_shift, random_finite_blaschke,
    product_from_dict
)
from blaschke.utils.misc import circle_points, disk_grid, random_disk_points


def cauchy_coeffs(f, count, radius=0.5, n_points=256):
    "Taylor coefficients by the discrete Cauchy integral on |z| = radius"
    z = circle_points(n_points, radius)
    values = f(z)
    return np.array([
        np.mean(values * z**(-k)) for k in range(count + 1)
    ])


class FiniteBlaschkeTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(0)
        self.grid = disk_grid(n_radii=5, n_angles=16, r_max=0.9)
        self.z = FiniteBlaschke(zeros=[0.])
        self.z2 = FiniteBlaschke(zeros=[0., 0.])
        self.z3 = FiniteBlaschke(zeros=[0., 0., 0.])

    def _test_function_pointwise(self, f, g, tol=1e-10, msg=None):
        gap = np.max(np.abs(f(self.grid) - g(self.grid)))
        self.assertLess(gap, tol, msg=msg)

    def test_evaluate(self):
        self.assertAlmostEqual(self.z(0.7j), 0.7j, places=15)
        B = FiniteBlaschke(zeros=[0.4, 0.1j])
        self.assertEqual(B(0.4), 0)
        B = FiniteBlaschke(zeros=[0., 0.5])
        expected = 0.25 * (0.25 - 0.5) / (1 - 0.5 * 0.25) * (-1)
        self.assertAlmostEqual(B(0.25), expected, places=15)

    def test_modulus(self):
        B = random_finite_blaschke(self.rng, 4)
        self.assertTrue(np.all(np.abs(B(self.grid)) < 1))
        circle = circle_points(50, 1.)
        self.assertLess(np.max(np.abs(np.abs(B(circle)) - 1)), 1e-12)
        with self.assertRaises(DomainError):
            B(1.5)

    def test_log_modulus(self):
        B = random_finite_blaschke(self.rng, 3)
        z = 0.3 - 0.2j
        self.assertAlmostEqual(B.log_modulus(z).value, np.log(abs(B(z))), places=12)
        self.assertTrue(B.log_modulus(B.zeros[0]).at_zero)

    def test_taylor_coeffs(self):
        np.testing.assert_allclose(self.z.taylor_coeffs(1), [0, 1], atol=1e-15)
        np.testing.assert_allclose(self.z2.taylor_coeffs(2), [0, 0, 1], atol=1e-15)
        B = FiniteBlaschke(zeros=[0., 0.5])
        coefs = B.taylor_coeffs(6)
        self.assertAlmostEqual(coefs[1], 0.5, places=14)
        np.testing.assert_allclose(coefs, cauchy_coeffs(B, 6), atol=1e-12)
        B = random_finite_blaschke(self.rng, 3)
        center = 0.2 + 0.1j
        coefs = B.taylor_coeffs(6, center)
        shifted = cauchy_coeffs(lambda t: B(center + t), 6, radius=0.3)
        np.testing.assert_allclose(coefs, shifted, atol=1e-10)
        with self.assertRaises(ValueError):
            B.taylor_coeffs(0)

    def test_first_nonconstant_index(self):
        n, b_n = self.z3.first_nonconstant_index()
        self.assertEqual(n, 3)
        self.assertAlmostEqual(b_n, 1, places=14)
        self.assertEqual(self.z.first_nonconstant_index()[0], 1)
        B = FiniteBlaschke(zeros=[0., 0., 0.4 + 0.2j, -0.3j])
        self.assertEqual(B.first_nonconstant_index()[0], 2)

    def test_preimages(self):
        xis = self.z2.preimages(0.25)
        np.testing.assert_allclose(np.sort_complex(xis.points), [-0.5, 0.5], atol=1e-12)
        B = random_finite_blaschke(self.rng, 5)
        np.testing.assert_array_equal(B.preimages(0).points, B.zeros)
        a = 0.3 + 0.2j
        xis = B.preimages(a)
        self.assertEqual(len(xis), 5)
        self.assertLess(np.max(np.abs(B(xis.points) - a)), 1e-9)
        expected = abs(frostman_map(a)(B(0)))
        self.assertAlmostEqual(xis.product_modulus(), expected, places=9)

    def test_critical_points(self):
        self.assertEqual(self.z.critical_points().size, 0)
        np.testing.assert_allclose(self.z2.critical_points(), [0], atol=1e-12)
        np.testing.assert_allclose(self.z3.critical_points(), [0, 0], atol=1e-5)
        p = 0.6
        B = FiniteBlaschke(zeros=[0., p])
        c = B.critical_points()
        self.assertEqual(c.size, 1)
        self.assertAlmostEqual(c[0].imag, 0, places=10)
        # B' changes sign on the real segment around c
        self.assertLess(B.derivative(c[0].real - 1e-3).real * B.derivative(c[0].real + 1e-3).real, 0)
        self.assertAlmostEqual(abs(B.derivative(c[0])), 0, places=10)
        B = random_finite_blaschke(self.rng, 4)
        crit = B.critical_points()
        self.assertEqual(crit.size, 3)
        self.assertLess(np.max(np.abs(B.derivative(crit))), 1e-9)

    def test_compose(self):
        A = compose_finite(self.z2, self.z2)
        self.assertEqual(A.degree, 4)
        self._test_function_pointwise(A, lambda z: z**4)
        B = random_finite_blaschke(self.rng, 3)
        self.assertTrue(compose_finite(B, self.z).is_close(B, tol=1e-9))
        B, C = random_finite_blaschke(self.rng, 2), random_finite_blaschke(self.rng, 3)
        A = compose_finite(B, C)
        self.assertEqual(A.degree, 6)
        self._test_function_pointwise(A, lambda z: B(C(z)))

    def test_frostman_shift(self):
        B = random_finite_blaschke(self.rng, 4)
        self._test_function_pointwise(frostman_shift(B, 0), B)
        a = 0.3 + 0.2j
        shifted = frostman_shift(self.z, a)
        np.testing.assert_allclose(shifted.zeros, [a], atol=1e-12)
        shifted = frostman_shift(B, a)
        self.assertEqual(shifted.degree, 4)
        self._test_function_pointwise(shifted, lambda z: frostman_map(a)(B(z)))

    def test_nonzero_level_points(self):
        self.assertEqual(self.z2.nonzero_level_points().size, 0)
        B = FiniteBlaschke(zeros=[0., 0.5])
        np.testing.assert_allclose(B.nonzero_level_points(), [0.5], atol=1e-12)
        B = random_finite_blaschke(self.rng, 5)
        n, _ = B.first_nonconstant_index()
        points = B.nonzero_level_points()
        self.assertEqual(points.size, 5 - n)
        self.assertLess(np.max(np.abs(B(points) - B(0))), 1e-9)

    def test_preimages_composed(self):
        for _ in range(3):
            B, C = random_finite_blaschke(self.rng, 5), random_finite_blaschke(self.rng, 5)
            A = compose_finite(B, C)
            a = complex(random_disk_points(self.rng, 1, 0.9)[0])
            xis = A.preimages(a)
            self.assertEqual(len(xis), 25, msg=f"A={A}")
            self.assertLess(np.max(np.abs(A(xis.points) - a)), 1e-9, msg=f"a={a}")
            self.assertLess(np.max(np.abs(xis.points)), 1)

    def test_subnormal_zero(self):
        B = FiniteBlaschke(zeros=[2.2e-309])
        self.assertTrue(np.isfinite(B(0)))
        self.assertTrue(np.isfinite(B(0.5)))
        self.assertLess(m1_residual(B, 0.5), 1e-12)
        self.assertLess(m2_residual(B), 1e-12)

    def test_dict(self):
        B = random_finite_blaschke(self.rng, 3)
        self.assertEqual(product_from_dict(B.to_dict()), B)


if __name__ == "__main__":
    unittest.main()

import unittest
import numpy as np
from blaschke.disk import (
    MoebiusMap, IDENTITY, moebius_apply, moebius_compose, moebius_invert,
    moebius_to_blaschke, pseudo_hyperbolic, pseudo_hyperbolic_distance, matching_distance,
    boundary_point
)
from blaschke.errors import DomainError
from blaschke.utils.misc import disk_grid, circle_points


def random_map(rng):
    a = 0.9 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
    eta = np.exp(2j * np.pi * rng.uniform())
    return MoebiusMap(a=a, eta=eta)


class MoebiusTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)
        self.grid = disk_grid(n_radii=5, n_angles=20, r_max=0.95)

    def _test_function_same_map(self, T1, T2, places=12):
        gap = np.max(np.abs(T1(self.grid) - T2(self.grid)))
        msg = f"T1={T1} T2={T2}"
        self.assertAlmostEqual(gap, 0, places=places, msg=msg)

    def test_apply(self):
        z = 0.3 + 0.1j
        self.assertEqual(moebius_apply(IDENTITY, z), z)
        T = MoebiusMap(a=0.5)
        self.assertEqual(moebius_apply(T, 0.5), 0)
        self.assertAlmostEqual(abs(moebius_apply(T, 1j)), 1, places=14)

    def test_apply_outside_disk(self):
        T = MoebiusMap(a=0.5)
        with self.assertRaises(DomainError):
            T(1.1)
        with self.assertRaises(DomainError):
            MoebiusMap(a=1.)

    def test_compose(self):
        T = random_map(self.rng)
        self._test_function_same_map(moebius_compose(T, IDENTITY), T)
        R = moebius_compose(T, moebius_invert(T))
        self.assertTrue(R.is_identity(tol=1e-12), msg=f"R={R}")
        for _ in range(5):
            T1, T2 = random_map(self.rng), random_map(self.rng)
            R = moebius_compose(T1, T2)
            z = self.rng.uniform(-0.7, 0.7, 100) + 1j * self.rng.uniform(-0.7, 0.7, 100)
            gap = np.max(np.abs(R(z) - T1(T2(z))))
            self.assertLess(gap, 1e-12, msg=f"T1={T1} T2={T2}")

    def test_compose_associative(self):
        z = self.rng.uniform(-0.7, 0.7, 50) + 1j * self.rng.uniform(-0.7, 0.7, 50)
        for _ in range(20):
            T1, T2, T3 = random_map(self.rng), random_map(self.rng), random_map(self.rng)
            left = moebius_compose(moebius_compose(T1, T2), T3)
            right = moebius_compose(T1, moebius_compose(T2, T3))
            gap = np.max(np.abs(left(z) - right(z)))
            self.assertLess(gap, 1e-12, msg=f"T1={T1} T2={T2} T3={T3}")

    def test_invert(self):
        self.assertTrue(moebius_invert(IDENTITY).is_identity())
        T_inv = moebius_invert(MoebiusMap(a=0, eta=1j))
        self.assertAlmostEqual(T_inv.eta, -1j, places=15)
        self.assertEqual(T_inv.a, 0)
        for _ in range(5):
            T = random_map(self.rng)
            gap = np.max(np.abs(T(moebius_invert(T)(self.grid)) - self.grid))
            self.assertLess(gap, 1e-12, msg=f"T={T}")

    def test_to_blaschke(self):
        for _ in range(5):
            T = random_map(self.rng)
            self._test_function_same_map(T, moebius_to_blaschke(T))
        self.assertEqual(moebius_to_blaschke(IDENTITY).zeros.tolist(), [0j])

    def test_dict(self):
        T = random_map(self.rng)
        self.assertEqual(MoebiusMap.from_dict(T.to_dict()), T)


class DistanceTest(unittest.TestCase):
    def test_pseudo_hyperbolic(self):
        w = 0.3 - 0.4j
        self.assertEqual(pseudo_hyperbolic(w, w), 0)
        self.assertAlmostEqual(pseudo_hyperbolic(0, w), abs(w), places=15)
        self.assertAlmostEqual(pseudo_hyperbolic(0.5, -0.5), 0.8, places=15)
        self.assertAlmostEqual(
            pseudo_hyperbolic(0.2j, w), pseudo_hyperbolic(w, 0.2j), places=15
        )
        with self.assertRaises(DomainError):
            pseudo_hyperbolic(1., 0.)

    def test_pseudo_hyperbolic_distance(self):
        z = np.array([0.1, 0.5j, -0.3 + 0.2j])
        w = 0.3 - 0.4j
        expected = [pseudo_hyperbolic(x, w) for x in z]
        np.testing.assert_allclose(pseudo_hyperbolic_distance(z, w), expected, atol=1e-15)
        # no domain check, used on iterates outside the disk
        self.assertAlmostEqual(float(pseudo_hyperbolic_distance(2., 0.)), 2, places=15)

    def test_matching_distance(self):
        xs = circle_points(5, 0.5)
        distance, matching = matching_distance(xs, xs[::-1])
        self.assertAlmostEqual(distance, 0, places=15)
        self.assertEqual(len(matching), 5)
        distance, _ = matching_distance([], [])
        self.assertEqual(distance, 0)
        with self.assertRaises(ValueError):
            matching_distance([0.1], [0.1, 0.2])

    def test_boundary_point(self):
        self.assertEqual(boundary_point(1j), 1j)
        with self.assertRaises(DomainError):
            boundary_point(0.5)


if __name__ == "__main__":
    unittest.main()

import unittest
import numpy as np
from blaschke.disk import matching_distance
from blaschke.maximal import (
    CriticalSet, solve_maximal, verify_maximal, maximal_degree_two, closure_check,
    chain_rule_critical_set, polynomial_start, scaled_equations, TrackPath,
    LogProgress, JoinCallback
)
from blaschke.products import FiniteBlaschke, compose_finite, random_finite_blaschke
from blaschke.utils.misc import random_disk_points


class CriticalSetTest(unittest.TestCase):
    def test_multiplicities(self):
        C = CriticalSet([0., 0., 0.3, 0.3, -0.2j])
        self.assertEqual(len(C), 5)
        self.assertEqual(C.order_at_origin, 2)
        clusters = sorted(C.clusters(), key=lambda cluster: cluster[1])
        self.assertEqual([m for _, m in clusters], [1, 2])
        self.assertAlmostEqual(clusters[1][0], 0.3, places=12)
        self.assertEqual(CriticalSet.from_dict(C.to_dict()).points.size, 5)

    def test_polynomial_start(self):
        # q' = z (z - p) gives q = z^3 / 3 - p z^2 / 2, moving zero 3p / 2
        p = 0.4
        u = polynomial_start([(p, 1)], n_origin=2)
        np.testing.assert_allclose(u, [1.5 * p], atol=1e-14)
        residual = scaled_equations(u, 0., [(p, 1)], 2)
        self.assertLess(np.max(np.abs(residual)), 1e-12)


class SolveMaximalTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(14)

    def test_trivial(self):
        F = solve_maximal(CriticalSet())
        self.assertEqual(F, FiniteBlaschke(zeros=[0.]))
        F = solve_maximal(CriticalSet([0., 0.]))
        self.assertEqual(F, FiniteBlaschke(zeros=[0., 0., 0.]))

    def test_degree_two(self):
        for p in [0.4, -0.3 + 0.5j, 0.7j]:
            F = solve_maximal(CriticalSet([p]))
            expected = maximal_degree_two(p)
            msg = f"p={p} F={F}"
            self.assertEqual(F.degree, 2, msg=msg)
            distance, _ = matching_distance(F.zeros, expected.zeros, "euclidean")
            self.assertLess(distance, 1e-8, msg=msg)
            self.assertAlmostEqual(F.eta, 1, places=15, msg=msg)

    def test_closed_form(self):
        p = 0.4
        F = maximal_degree_two(p)
        np.testing.assert_allclose(F.critical_points(), [p], atol=1e-12)

    def test_random(self):
        for size in [2, 3]:
            points = random_disk_points(self.rng, size, 0.6)
            C = CriticalSet(points)
            F = solve_maximal(C)
            report = verify_maximal(F, C)
            self.assertTrue(report.passed, msg=f"C={C} failures={report.failures}")

    def test_origin_and_nonzero(self):
        C = CriticalSet([0., 0.5 - 0.2j])
        F = solve_maximal(C)
        report = verify_maximal(F, C)
        self.assertTrue(report.passed, msg=f"failures={report.failures}")
        self.assertGreater(report.leading_coefficient.real, 0)

    def test_double_point(self):
        C = CriticalSet([0.3 + 0.1j, 0.3 + 0.1j])
        F = solve_maximal(C, tol=1e-6)
        self.assertEqual(F.degree, 3)
        self.assertLess(abs(F.derivative(0.3 + 0.1j)), 1e-8)

    def test_callbacks(self):
        path = TrackPath()
        callback = JoinCallback([path, LogProgress(every=5)])
        solve_maximal(CriticalSet([0.2, -0.5j]), callback=callback)
        df = path.get_dataframe()
        self.assertEqual(set(df.zero), {0, 1})
        self.assertEqual(df.s.iloc[0], 0)
        self.assertEqual(df.s.iloc[-1], 1)

    def test_deterministic(self):
        C = CriticalSet([0.1 + 0.2j, -0.4])
        self.assertEqual(solve_maximal(C), solve_maximal(C))


class VerifyMaximalTest(unittest.TestCase):
    def test_square(self):
        report = verify_maximal(FiniteBlaschke(zeros=[0., 0.]), CriticalSet([0.]))
        self.assertTrue(report.passed, msg=f"failures={report.failures}")
        self.assertEqual(report.certificate.verdict, "certified")

    def test_mismatch(self):
        report = verify_maximal(FiniteBlaschke(zeros=[0., 0.]), CriticalSet([0.3]))
        self.assertFalse(report.passed)
        self.assertIn("critical_match", report.failures)

    def test_origin_failure(self):
        F = FiniteBlaschke(zeros=[0.2, 0.3])
        report = verify_maximal(F, CriticalSet(F.critical_points()))
        self.assertIn("origin", report.failures)


class ClosureTest(unittest.TestCase):
    def test_chain_rule(self):
        rng = np.random.default_rng(15)
        B, C = random_finite_blaschke(rng, 3), random_finite_blaschke(rng, 2)
        critical_set = chain_rule_critical_set(B, C)
        A_critical = compose_finite(B, C).critical_points()
        distance, _ = matching_distance(critical_set.points, A_critical)
        self.assertLess(distance, 1e-7)

    def test_closure(self):
        report = closure_check(CriticalSet([0.3]), CriticalSet([-0.2 + 0.1j]))
        self.assertEqual(len(report.critical_set), 3)
        self.assertLess(report.residual, 1e-6)


if __name__ == "__main__":
    unittest.main()

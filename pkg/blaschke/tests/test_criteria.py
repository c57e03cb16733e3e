import unittest
import numpy as np
from blaschke.criteria import (
    radial_log_integral, jensen_integral, criteria_report, harmonic_majorant_at,
    majorant_transport_check, schwarz_sandwich_check, normalize_pair,
    extrapolate_limit, nudge_radius
)
from blaschke.disk import MoebiusMap
from blaschke.errors import CaseMismatchError, DomainError, ScheduleError
from blaschke.products import (
    FiniteBlaschke, AtomicSingular, InnerModel, random_finite_blaschke
)

TWO_PI = 2 * np.pi
SCHEDULE = [0.5, 0.9, 0.99, 0.999]


class RadialIntegralTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(3)
        self.quad_tol = 1e-8

    def test_identity(self):
        f = FiniteBlaschke(zeros=[0.])
        integral = radial_log_integral(f, 0.5, self.quad_tol)
        self.assertAlmostEqual(integral, TWO_PI * np.log(0.5), places=7)

    def test_atomic(self):
        f = AtomicSingular(mass=1., atom=1.)
        for r in [0.3, 0.9, 0.99]:
            integral = radial_log_integral(f, r, self.quad_tol)
            self.assertAlmostEqual(integral, -TWO_PI, places=6, msg=f"r={r}")

    def test_jensen(self):
        for _ in range(3):
            B = random_finite_blaschke(self.rng, 4, radius=0.95)
            r = nudge_radius(B, 0.9)
            integral = radial_log_integral(B, r, self.quad_tol)
            self.assertAlmostEqual(integral, jensen_integral(B, r), places=6, msg=f"B={B}")

    def test_additive(self):
        B = random_finite_blaschke(self.rng, 3, radius=0.8)
        C = random_finite_blaschke(self.rng, 2, radius=0.8)
        S = AtomicSingular(mass=0.6, atom=-1j)
        for f, g in [(B, S), (B, C)]:
            r = nudge_radius(InnerModel([f, g]), 0.9)
            product = radial_log_integral(InnerModel([f, g]), r, self.quad_tol)
            parts = radial_log_integral(f, r, self.quad_tol) + radial_log_integral(g, r, self.quad_tol)
            self.assertAlmostEqual(product, parts, places=6, msg=f"f={f} g={g}")

    def test_nudge(self):
        B = FiniteBlaschke(zeros=[0.5])
        r = nudge_radius(B, 0.5)
        self.assertGreater(abs(r - 0.5), 1e-8)
        with self.assertRaises(DomainError):
            radial_log_integral(B, 0.5)
        with self.assertRaises(DomainError):
            radial_log_integral(B, 1.)


class CriteriaReportTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(4)
        self.quad_tol = 1e-8

    def test_extrapolate_linear(self):
        radii = np.array(SCHEDULE)
        values = -1.5 - 3 * np.log(radii)
        limit, previous = extrapolate_limit(radii, values)
        self.assertAlmostEqual(limit, -1.5, places=12)
        self.assertAlmostEqual(previous, -1.5, places=12)

    def test_finite(self):
        B = random_finite_blaschke(self.rng, 3, radius=0.45)
        report = criteria_report(B, SCHEDULE, self.quad_tol)
        self.assertEqual(report.verdict, "blaschke", msg=f"report={report}")
        self.assertLess(abs(report.singular_mass), 1e-4)
        self.assertTrue(report.monotone)
        df = report.to_dataframe()
        self.assertEqual(list(df.columns), ["r", "I_r", "err_estimate"])
        self.assertEqual(len(df), 4)

    def test_atomic(self):
        report = criteria_report(AtomicSingular(mass=2.), SCHEDULE, self.quad_tol)
        self.assertAlmostEqual(report.singular_mass, 2, places=6)
        self.assertEqual(report.verdict, "not_blaschke")

    def test_product_with_atom(self):
        B = random_finite_blaschke(self.rng, 2, radius=0.45)
        f = InnerModel([B, AtomicSingular(mass=0.5, atom=1j)])
        report = criteria_report(f, SCHEDULE, self.quad_tol)
        self.assertGreaterEqual(report.singular_mass, 0.49)
        self.assertLessEqual(report.singular_mass, 0.51)
        self.assertEqual(report.verdict, "not_blaschke")

    def test_schedule(self):
        B = FiniteBlaschke(zeros=[0.])
        with self.assertRaises(ScheduleError):
            criteria_report(B, [0.5, 0.9])
        with self.assertRaises(ScheduleError):
            criteria_report(B, [0.5, 0.99, 0.9])
        with self.assertRaises(ScheduleError):
            criteria_report(B, [0.5, 0.9, 1.])


class MajorantTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(5)
        self.quad_tol = 1e-8

    def test_finite(self):
        B = random_finite_blaschke(self.rng, 3, radius=0.45)
        for z0 in [0, 0.2j, -0.15 + 0.1j]:
            h = harmonic_majorant_at(B, z0, SCHEDULE, self.quad_tol)
            self.assertAlmostEqual(h, 0, places=4, msg=f"z0={z0}")

    def test_atomic(self):
        S = AtomicSingular(mass=1., atom=1.)
        h = harmonic_majorant_at(S, 0, SCHEDULE, self.quad_tol)
        self.assertAlmostEqual(h, -1, places=6)
        h = harmonic_majorant_at(S, 0.5, [0.6, 0.9, 0.99], self.quad_tol)
        self.assertAlmostEqual(h, -3, places=5)
        with self.assertRaises(DomainError):
            harmonic_majorant_at(S, 0.7, [0.6, 0.9, 0.99], self.quad_tol)

    def test_transport(self):
        B = FiniteBlaschke(zeros=[0.2, -0.3j])
        C = FiniteBlaschke(zeros=[0.1 + 0.1j, -0.25])
        T = MoebiusMap(a=0.1)
        report = majorant_transport_check(B, C, T, 0.1, SCHEDULE, self.quad_tol, tol=1e-3)
        self.assertTrue(report.ordered, msg=f"report={report}")
        self.assertTrue(report.vanishing, msg=f"report={report}")


class SandwichTest(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(6)
        self.quad_tol = 1e-8
        self.schedule = [0.5, 0.9, 0.99]

    def test_identity_outer(self):
        C = random_finite_blaschke(self.rng, 3, radius=0.6)
        report = schwarz_sandwich_check(FiniteBlaschke(zeros=[0.]), C, self.schedule, self.quad_tol)
        for record in report.records:
            self.assertAlmostEqual(record["I_A"], record["I_C"], places=6)
        self.assertGreaterEqual(report.min_slack, -self.quad_tol)

    def test_square_outer(self):
        C = random_finite_blaschke(self.rng, 2, radius=0.6)
        report = schwarz_sandwich_check(FiniteBlaschke(zeros=[0., 0.]), C, self.schedule, self.quad_tol)
        self.assertGreaterEqual(report.min_slack, -self.quad_tol)
        self.assertGreaterEqual(report.schwarz_slack, 0)

    def test_normalized_pair(self):
        B = random_finite_blaschke(self.rng, 2, radius=0.6)
        C = random_finite_blaschke(self.rng, 2, radius=0.6)
        T = MoebiusMap(a=0.2 - 0.1j, eta=1j)
        B_tilde, C_tilde, S = normalize_pair(B, C, T)
        self.assertLess(abs(B_tilde(0)), 1e-9)
        grid = np.array([0.1, 0.3j, -0.5 + 0.2j])
        np.testing.assert_allclose(B_tilde(C_tilde(grid)), S(B(C(grid))), atol=1e-9)
        report = schwarz_sandwich_check(B_tilde, C_tilde, self.schedule, self.quad_tol)
        self.assertGreaterEqual(report.min_slack, -self.quad_tol)

    def test_outer_must_vanish(self):
        B = FiniteBlaschke(zeros=[0.5])
        with self.assertRaises(CaseMismatchError):
            schwarz_sandwich_check(B, B, self.schedule)


if __name__ == "__main__":
    unittest.main()

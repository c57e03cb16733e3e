import numpy as np
from math import factorial
from .continuation import CriticalSet, solve_maximal
from ..base import ReprMixin, CERT_TOL
from ..disk.metrics import matching_distance
from ..indestructibility.certificate import certify_indestructible
from ..products.finite_blaschke import FiniteBlaschke, compose_finite
from ..utils.misc import circle_points, complex2pair
import logging
logger = logging.getLogger(__name__)

ORIGIN_VALUE_TOL = 1e-10
PHASE_TOL = 1e-8
NORMALIZATION = "F(0) = 0 is assumed for the extremal function"


def maximal_degree_two(p):
    """Closed form for the critical set {p}.

    z -> ((z - p) / (1 - conj(p) z))^2 has its only critical point at p;
    post-composing with the Frostman map of p^2 restores F(0) = 0, which
    leaves the zeros 0 and 2p / (1 + |p|^2).
    """
    p = complex(p)
    return FiniteBlaschke(eta=1., zeros=[0., 2 * p / (1 + abs(p)**2)])


class MaximalReport(ReprMixin):
    """Checks of a candidate maximal Blaschke product.

    Parameters
    ----------
    - degree, expected_degree : deg(F) and |C| + 1
    - critical_distance : matching distance of the critical points to C
      (inf when the counts differ)
    - origin_value : |F(0)|
    - leading_coefficient : F^(N+1)(0) / (N+1)!
    - certificate : CertificateReport of F
    - tol : matching tolerance
    """

    def __init__(self, degree, expected_degree, critical_distance,
                 origin_value, leading_coefficient, certificate, tol):
        self.degree = degree
        self.expected_degree = expected_degree
        self.critical_distance = critical_distance
        self.origin_value = origin_value
        self.leading_coefficient = leading_coefficient
        self.certificate = certificate
        self.tol = tol
        self.repr_init(pad="\t")

    @property
    def checks(self):
        coef = self.leading_coefficient
        return dict(
            degree=self.degree == self.expected_degree,
            critical_match=self.critical_distance < self.tol,
            origin=self.origin_value < ORIGIN_VALUE_TOL,
            normalization=coef.real > 0 and abs(coef.imag) < PHASE_TOL * coef.real,
            certified=self.certificate.verdict == "certified"
        )

    @property
    def passed(self):
        return all(self.checks.values())

    @property
    def failures(self):
        return [key for key, ok in self.checks.items() if not ok]

    def to_dict(self):
        return dict(
            degree=self.degree, expected_degree=self.expected_degree,
            critical_distance=self.critical_distance,
            origin_value=self.origin_value,
            leading_coefficient=complex2pair(self.leading_coefficient),
            certificate=self.certificate.to_dict(), checks=self.checks,
            passed=self.passed, assumption=NORMALIZATION
        )


def verify_maximal(F, C, tol=1e-7, cert_tol=CERT_TOL):
    """Degree, critical set, normalization and certificate of F.

    Failures are recorded in the report, nothing is raised.
    """
    if not isinstance(C, CriticalSet):
        C = CriticalSet(C)
    critical = F.critical_points()
    if critical.size == len(C):
        critical_distance, _ = matching_distance(critical, C.points)
    else:
        critical_distance = np.inf
    N = C.order_at_origin
    leading = complex(F.taylor_coeffs(N + 1)[N + 1]) * factorial(N + 1)
    report = MaximalReport(
        degree=F.degree, expected_degree=len(C) + 1,
        critical_distance=critical_distance,
        origin_value=abs(F.value_at_origin()), leading_coefficient=leading,
        certificate=certify_indestructible(F, tol=cert_tol), tol=tol
    )
    if not report.passed:
        logger.warning(f"maximal checks failed: {report.failures}")
    return report


def chain_rule_critical_set(B, C):
    "Critical points of B o C: those of C and the C-preimages of those of B"
    preimages = [C.preimages(b).points for b in B.critical_points()]
    return CriticalSet(np.concatenate([C.critical_points()] + preimages))


class ClosureReport(ReprMixin):
    """Composition of two maximal products against the maximal product of
    its critical set.

    Parameters
    ----------
    - rotation : unimodular lambda aligning the composition to the solution
    - residual : max |lambda A(z) - F(z)| on the check grid
    - critical_set : the chain rule critical set
    """

    def __init__(self, rotation, residual, critical_set):
        self.rotation = rotation
        self.residual = residual
        self.critical_set = critical_set
        self.repr_init()

    def to_dict(self):
        return dict(
            rotation=complex2pair(self.rotation), residual=self.residual,
            critical_set=self.critical_set.to_dict()
        )


def closure_check(p_set, q_set, tol=1e-7):
    """Maximal products are closed under composition.

    B = solve_maximal(p_set), C = solve_maximal(q_set); the maximal product
    of the critical set of A = B o C must equal A up to a rotation.
    """
    B = solve_maximal(p_set, tol)
    C = solve_maximal(q_set, tol)
    A = compose_finite(B, C)
    critical_set = chain_rule_critical_set(B, C)
    F = solve_maximal(critical_set, tol)
    grid = np.concatenate([circle_points(16, 0.3, 0.1), circle_points(32, 0.8)])
    A_values, F_values = A(grid), F(grid)
    idx = np.argmax(np.abs(A_values))
    rotation = F_values[idx] / A_values[idx]
    rotation = rotation / abs(rotation)
    residual = float(np.max(np.abs(rotation * A_values - F_values)))
    return ClosureReport(rotation, residual, critical_set)

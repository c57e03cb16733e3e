import numpy as np
from numpy.polynomial import polynomial as P
from .base_product import InnerFunction, LogModulus
from ..base import (
    ReprMixin, frozen_array, unimodular,
    SERIES_TOL, ROOT_TOL, CLUSTER_TOL, ESCAPE_MARGIN
)
from ..errors import ConvergenceError, ProbeError, RootEscapeError
from ..disk.points import check_closed_disk, check_open_disk
from ..disk.moebius import frostman_map
from ..disk.metrics import matching_distance
from ..utils.misc import (
    complex2pair, pair2complex, circle_points, random_disk_points,
    random_unimodular
)
from ..utils.series import series_inv, series_mul, first_nonzero_index
from ..utils.roots import (
    aberth, polyroots, newton_refine, merge_clusters, cluster_roots, check_interior
)
import logging
logger = logging.getLogger(__name__)


def factor_units(zeros):
    "Unimodular factors -conj(a)/|a| of the Blaschke factors (1 if a = 0)"
    zeros = np.asarray(zeros, dtype=complex)
    units = np.ones(zeros.size, dtype=complex)
    nonzero = zeros != 0
    # from the argument, |a| underflows for subnormal zeros
    units[nonzero] = -np.exp(-1j * np.angle(zeros[nonzero]))
    return units


class PreimageSet(ReprMixin):
    """Solutions of B(z) = target counted with multiplicity.

    Parameters
    ----------
    - target : complex
    - points : array of the solutions xi_j(B; target)
    - residuals : array of |B(xi_j) - target|
    """

    def __init__(self, target, points, residuals):
        self.target = complex(target)
        self.points = frozen_array(points)
        self.residuals = frozen_array(residuals, dtype=float)
        self.repr_init()

    def __len__(self):
        return self.points.size

    def __iter__(self):
        return iter(self.points)

    def clusters(self, tol=CLUSTER_TOL):
        "List of (center, multiplicity)"
        return cluster_roots(self.points, tol)

    def product_modulus(self):
        "prod_j |xi_j|, 1 for an empty set"
        return float(np.prod(np.abs(self.points)))


class FiniteBlaschke(InnerFunction):
    """Finite Blaschke product eta prod_j beta_{a_j}(z).

    The factors are beta_a(z) = (-conj(a)/|a|) (z - a) / (1 - conj(a) z)
    for a != 0 and beta_0(z) = z.

    Parameters
    ----------
    - eta : complex, |eta| = 1
    - zeros : multiset of interior points a_j (at least one)
    """

    def __init__(self, eta=1., zeros=(0.,)):
        self.eta = unimodular(eta)
        self.zeros = frozen_array(zeros)
        self.repr_init()
        if self.zeros.size == 0:
            raise ValueError("a finite Blaschke product needs at least one zero")
        check_open_disk(self.zeros)
        self.degree = self.zeros.size
        self.units = factor_units(self.zeros)

    # polynomial data
    def numerator(self):
        "Coefficients of eta prod u_j (z - a_j)"
        lead = self.eta * np.prod(self.units)
        return lead * P.polyfromroots(self.zeros).astype(complex)

    def denominator(self):
        "Coefficients of prod (1 - conj(a_j) z)"
        coefs = np.ones(1, dtype=complex)
        for a in self.zeros:
            coefs = P.polymul(coefs, [1., -np.conj(a)])
        return coefs

    def cleared_polynomial(self, a):
        """Coefficients of eta prod u_j (z - a_j) - a prod (1 - conj(a_j) z).

        Its roots are the solutions of B(z) = a.
        """
        return P.polysub(self.numerator(), a * self.denominator())

    # evaluation
    def __call__(self, z):
        check_closed_disk(z)
        z = np.asarray(z, dtype=complex)
        zc = z[..., np.newaxis]
        a = self.zeros
        factors = self.units * (zc - a) / (1 - np.conj(a) * zc)
        value = self.eta * np.prod(factors, axis=-1)
        return complex(value) if value.ndim == 0 else value

    def evaluate(self, z):
        return self(z)

    def derivative(self, z):
        "B'(z) = (P'Q - PQ') / Q^2"
        z = np.asarray(z, dtype=complex)
        num, den = self.numerator(), self.denominator()
        Q = P.polyval(z, den)
        value = (
            P.polyval(z, P.polyder(num)) * Q - P.polyval(z, num) * P.polyval(z, P.polyder(den))
        ) / Q**2
        return complex(value) if value.ndim == 0 else value

    def log_modulus(self, z, tol=None):
        z = complex(z)
        distances = np.abs(z - self.zeros)
        if np.any(distances == 0):
            return LogModulus.zero()
        value = np.sum(
            np.log(distances) - np.log(np.abs(1 - np.conj(self.zeros) * z))
        )
        return LogModulus(value=float(value), err=0.)

    # Taylor data
    def taylor_coeffs(self, count, center=0.):
        """Taylor coefficients of t -> B(center + t).

        Parameters
        ----------
        - count : int >= 1
            highest coefficient index
        - center : complex, |center| < 1

        Returns
        -------
        - array [b_0, ..., b_count]
        """
        if count < 1:
            raise ValueError(f"count={count} must be >= 1")
        w0 = complex(center)
        check_open_disk(w0)
        coefs = np.zeros(count + 1, dtype=complex)
        coefs[0] = self.eta
        for a, u in zip(self.zeros, self.units):
            # u (w0 - a + t) / (1 - conj(a) w0 - conj(a) t)
            num = np.zeros(count + 1, dtype=complex)
            num[0], num[1] = u * (w0 - a), u
            inv_den = series_inv([1 - np.conj(a) * w0, -np.conj(a)], count)
            coefs = series_mul(coefs, series_mul(num, inv_den, count), count)
        return coefs

    def first_nonconstant_index(self, tol=SERIES_TOL):
        """Order n of the zero of B - B(0) at 0 and the coefficient b_n.

        Raises SeriesResolutionError if no coefficient b_1..b_{2N} exceeds tol.
        """
        coefs = self.taylor_coeffs(2 * self.degree)
        n = first_nonzero_index(coefs, start=1, tol=tol)
        return n, complex(coefs[n])

    # level sets
    def _factored(self, z):
        """B(z), sum 1/(z - a_j) and sum -conj(a_j)/(1 - conj(a_j) z).

        Evaluated factor by factor without domain checks, for iterates of
        the root finders that may leave the disk.
        """
        zc = np.asarray(z, dtype=complex)[..., np.newaxis]
        a = self.zeros
        with np.errstate(all="ignore"):
            den = 1 - np.conj(a) * zc
            value = self.eta * np.prod(self.units * (zc - a) / den, axis=-1)
            num_sum = np.sum(1 / (zc - a), axis=-1)
            den_sum = np.sum(-np.conj(a) / den, axis=-1)
        return value, num_sum, den_sum

    def _level_roots(self, target, n_origin, root_tol, what):
        """Roots of the cleared polynomial of B(z) = target divided by z^n_origin.

        Aberth iteration on the logarithmic derivative of the cleared
        polynomial, then Newton on B - target, both in factored form.
        """

        def log_derivative(z):
            value, num_sum, den_sum = self._factored(z)
            ratio = (value * num_sum - target * den_sum) / (value - target)
            return ratio - n_origin / z if n_origin else ratio

        def func(z):
            value, _, _ = self._factored(z)
            return complex(value - target)

        def dfunc(z):
            value, num_sum, den_sum = self._factored(z)
            return complex(value * (num_sum - den_sum))

        roots, converged = aberth(log_derivative, self.degree - n_origin)
        if not converged:
            logger.info(f"{what}: aberth iteration did not settle, refining anyway")
        roots, _ = newton_refine(roots, func, dfunc)
        roots = merge_clusters(roots)
        check_interior(roots, what=what)
        residuals = np.abs(self(roots) - target) if roots.size else np.zeros(0)
        if residuals.size and residuals.max() > root_tol:
            raise ConvergenceError(
                f"{what} residual {residuals.max():.2e} above tol={root_tol:.1e}"
            )
        return roots, residuals

    def preimages(self, a, root_tol=ROOT_TOL):
        """All solutions of B(z) = a counted with multiplicity.

        Parameters
        ----------
        - a : complex, |a| < 1
        - root_tol : accepted residual |B(xi) - a|

        Returns
        -------
        - PreimageSet with deg(B) points
        """
        a = complex(a)
        check_open_disk(a)
        if a == 0:
            return PreimageSet(a, self.zeros, np.zeros(self.degree))
        roots, residuals = self._level_roots(a, 0, root_tol, what=f"preimage of {a}")
        if roots.size != self.degree:
            raise RootEscapeError(
                f"found {roots.size} preimages of {a}, expected {self.degree}"
            )
        return PreimageSet(a, roots, residuals)

    def nonzero_level_points(self, root_tol=ROOT_TOL):
        """Non-zero solutions z_j(B) of B(z) = B(0) with multiplicity.

        The cleared polynomial of B(z) = B(0) has a zero of order n at the
        origin (n from first_nonconstant_index); the iteration runs on its
        quotient by z^n and the remaining deg(B) - n roots are returned.
        """
        n, _ = self.first_nonconstant_index()
        if n >= self.degree:
            return frozen_array([])
        b0 = self.value_at_origin()
        roots, _ = self._level_roots(b0, n, root_tol, what="nonzero level point")
        if roots.size != self.degree - n:
            raise RootEscapeError(
                f"found {roots.size} nonzero level points, expected {self.degree - n}"
            )
        return frozen_array(roots)

    def critical_points(self):
        """Zeros of B' in the unit disk with multiplicity (deg(B) - 1 points).

        Roots of the numerator P'Q - PQ' of B', refined by Newton; the roots
        outside the disk are the reflections 1/conj(c).
        """
        if self.degree == 1:
            return frozen_array([])
        num, den = self.numerator(), self.denominator()
        crit = P.polysub(
            P.polymul(P.polyder(num), den), P.polymul(num, P.polyder(den))
        )
        crit_der = P.polyder(crit)
        roots = polyroots(crit)
        roots = roots[np.abs(roots) < 1]
        roots, _ = newton_refine(
            roots,
            lambda z: P.polyval(z, crit),
            lambda z: P.polyval(z, crit_der)
        )
        roots = merge_clusters(roots)
        check_interior(roots, what="critical point")
        if roots.size != self.degree - 1:
            raise RootEscapeError(
                f"found {roots.size} critical points, expected {self.degree - 1}"
            )
        return frozen_array(roots)

    # constructions
    def multiply(self, other):
        return FiniteBlaschke(
            eta=self.eta * other.eta,
            zeros=np.concatenate([self.zeros, other.zeros])
        )

    def compose(self, other):
        "A = self o other"
        zeros = np.concatenate([
            other.preimages(a).points for a in self.zeros
        ])

        def target(z):
            return self(other(z))
        return with_probed_eta(zeros, target)

    def frostman_shift(self, a):
        "phi_a o B with phi_a(w) = (w - a) / (1 - conj(a) w)"
        phi = frostman_map(a)
        zeros = self.preimages(a).points

        def target(z):
            return phi(self(z))
        return with_probed_eta(zeros, target)

    def as_finite(self):
        return self

    def singular_arguments(self, r, band=0.1):
        near = self.zeros[
            (np.abs(np.abs(self.zeros) - r) < band) & (self.zeros != 0)
        ]
        return np.angle(near)

    def zero_moduli(self):
        return np.abs(self.zeros)

    def is_close(self, other, tol=1e-10):
        "Equality of eta and of the zero multisets within tol"
        if self.degree != other.degree or abs(self.eta - other.eta) > tol:
            return False
        distance, _ = matching_distance(self.zeros, other.zeros, "euclidean")
        return distance <= tol

    def __eq__(self, other):
        if not isinstance(other, FiniteBlaschke):
            return NotImplemented
        return self.eta == other.eta and np.array_equal(
            np.sort_complex(self.zeros), np.sort_complex(other.zeros)
        )

    def __hash__(self):
        return hash((self.eta, tuple(np.sort_complex(self.zeros))))

    def to_dict(self):
        return dict(
            type="finite", eta=complex2pair(self.eta),
            zeros=[complex2pair(a) for a in self.zeros]
        )

    @classmethod
    def from_dict(cls, data):
        return cls(
            eta=pair2complex(data["eta"]),
            zeros=[pair2complex(pair) for pair in data["zeros"]]
        )


def with_probed_eta(zeros, target, n_probe=16, n_check=64, tol=1e-10):
    """FiniteBlaschke with the given zeros and eta fixed by a probe point.

    Parameters
    ----------
    - zeros : zero multiset of the result
    - target : function the result must agree with
    - n_probe : number of candidate probe points
    - n_check : size of the grid on which agreement is verified
    - tol : accepted pointwise disagreement
    """
    unit = FiniteBlaschke(eta=1., zeros=zeros)
    for z0 in circle_points(n_probe, radius=0.6, offset=0.5 * 2 * np.pi / n_probe):
        value, unit_value = target(z0), unit(z0)
        if abs(value) > 1e-6 and abs(unit_value) > 1e-6:
            break
    else:
        raise ProbeError(f"no probe point with |value| > 1e-6 among {n_probe}")
    eta = value / unit_value
    result = FiniteBlaschke(eta=eta / abs(eta), zeros=zeros)
    grid = np.concatenate([
        circle_points(n_check // 2, radius=0.5),
        circle_points(n_check // 2, radius=0.9, offset=0.1)
    ])
    residual = np.max(np.abs(result(grid) - target(grid)))
    if residual > tol:
        raise ConvergenceError(
            f"pointwise disagreement {residual:.2e} above tol={tol:.1e}"
        )
    return result


def compose_finite(B, C):
    return B.compose(C)


def frostman_shift(B, a):
    return B.frostman_shift(a)


def random_finite_blaschke(rng, degree, radius=0.8):
    """Random finite Blaschke product.

    Parameters
    ----------
    - rng : numpy Generator
    - degree : number of zeros
    - radius : zeros are uniform in the disk |z| < radius
    """
    zeros = random_disk_points(rng, degree, radius)
    return FiniteBlaschke(eta=random_unimodular(rng), zeros=zeros)

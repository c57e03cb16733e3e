import numpy as np
from math import factorial
from numpy.polynomial import polynomial as P
from scipy.optimize import root
from .callbacks import PassCallback
from ..base import ReprMixin, frozen_array, CLUSTER_TOL
from ..disk.metrics import matching_distance
from ..disk.points import check_open_disk
from ..errors import (
    ContinuationStallError, CriticalMismatchError, RootEscapeError
)
from ..products.finite_blaschke import FiniteBlaschke
from ..utils.misc import complex2array, array2complex, complex2pair, pair2complex
from ..utils.roots import cluster_roots, polyroots
import logging
logger = logging.getLogger(__name__)

# critical points of modulus below ORIGIN_TOL count as critical points at 0
ORIGIN_TOL = 1e-14
# accepted norm of the scaled critical point equations
EQUATION_TOL = 1e-10


class CriticalSet(ReprMixin):
    """Multiset of prescribed critical points.

    Parameters
    ----------
    - points : interior points, repeated according to multiplicity
    """

    def __init__(self, points=()):
        self.points = frozen_array(points)
        self.repr_init()
        check_open_disk(self.points)

    def __len__(self):
        return self.points.size

    @property
    def order_at_origin(self):
        "Multiplicity N of 0 in the critical set"
        return int(np.sum(np.abs(self.points) <= ORIGIN_TOL))

    @property
    def nonzero_points(self):
        return self.points[np.abs(self.points) > ORIGIN_TOL]

    def clusters(self, tol=CLUSTER_TOL):
        "Distinct nonzero critical points as (center, multiplicity)"
        return cluster_roots(self.nonzero_points, tol)

    def to_dict(self):
        return dict(points=[complex2pair(c) for c in self.points])

    @classmethod
    def from_dict(cls, data):
        return cls([pair2complex(pair) for pair in data["points"]])


class ContinuationState(ReprMixin):
    """Current point of the continuation path.

    Parameters
    ----------
    - s : scaling parameter in [0, 1], the critical set is s C
    - step : current step size
    - moving_zeros : zeros of F other than the ones pinned at 0
    - residual : norm of the scaled equations
    """

    def __init__(self, s, step, moving_zeros, residual):
        self.s = s
        self.step = step
        self.moving_zeros = moving_zeros
        self.residual = residual
        self.repr_init()


def scaled_equations(u, s, clusters, n_origin):
    """Scaled critical point equations of F(z) = z^n_origin prod beta_{s u_j}.

    With L = F'/F, a critical point c of multiplicity mu is imposed by
    s^{k+1} L^(k)(s c) = 0 for k < mu, which in the scaled unknowns u
    reads

        n_origin (-1)^k k! / c^{k+1}
        + sum_j [(-1)^k k! / (c - u_j)^{k+1}
                 + k! (s^2 conj(u_j))^{k+1} / (1 - s^2 conj(u_j) c)^{k+1}]

    At s = 0 it reduces to the critical points of a polynomial.
    """
    u = np.asarray(u, dtype=complex)
    v = s**2 * np.conj(u)
    equations = []
    for c, mu in clusters:
        for k in range(mu):
            sign, fact = (-1)**k, factorial(k)
            value = n_origin * sign * fact / c**(k + 1)
            value += np.sum(sign * fact / (c - u)**(k + 1))
            value += np.sum(fact * v**(k + 1) / (1 - v * c)**(k + 1))
            equations.append(value)
    return np.array(equations, dtype=complex)


def polynomial_start(clusters, n_origin):
    """Moving zeros at s = 0.

    They are the nonzero roots of q with q(0) = 0 and
    q'(z) = z^(n_origin - 1) prod (z - c)^mu.
    """
    derivative = np.concatenate([np.zeros(n_origin - 1), [1.]]).astype(complex)
    for c, mu in clusters:
        for _ in range(mu):
            derivative = P.polymul(derivative, [-c, 1.])
    q = P.polyint(derivative)
    # q vanishes to order n_origin at 0
    return polyroots(q[n_origin:])


def correct(u, s, clusters, n_origin, xtol=1e-13):
    "Newton-type corrector (scipy hybr) on the real and imaginary parts"
    m = u.size

    def func(x):
        equations = scaled_equations(array2complex(x.reshape(2, m)), s, clusters, n_origin)
        return complex2array(equations).ravel()
    sol = root(func, complex2array(u).ravel(), method="hybr", options=dict(xtol=xtol))
    u_new = array2complex(sol.x.reshape(2, m))
    residual = float(np.linalg.norm(func(sol.x)))
    ok = bool(sol.success) and np.all(np.isfinite(sol.x)) and residual < EQUATION_TOL
    ok = ok and bool(np.all(np.abs(s * u_new) < 1))
    return u_new, residual, ok


def solve_maximal(C, tol=1e-7, callback=None, initial_step=0.1, min_step=1e-8):
    """Finite Blaschke product with critical set C, vanishing at 0.

    The critical set is scaled by s in [0, 1]; at s = 0 the moving zeros are
    the zeros of a polynomial with the scaled critical points, they are
    followed up to s = 1 by a hybr corrector with step halving.

    Parameters
    ----------
    - C : CriticalSet (or list of points)
    - tol : accepted pseudo-hyperbolic matching distance of the critical
      points of the result to C
    - callback : called with (ContinuationState, step index)
    - initial_step : largest continuation step
    - min_step : steps below raise ContinuationStallError

    Returns
    -------
    - FiniteBlaschke of degree len(C) + 1 with F(0) = 0 and
      F^(N+1)(0) > 0, N the multiplicity of 0 in C
    """
    if not isinstance(C, CriticalSet):
        C = CriticalSet(C)
    callback = callback or PassCallback()
    n = len(C)
    n_origin = C.order_at_origin + 1
    clusters = C.clusters()
    if not clusters:
        return FiniteBlaschke(eta=1., zeros=np.zeros(n + 1))
    u = polynomial_start(clusters, n_origin)
    u, residual, ok = correct(u, 0., clusters, n_origin)
    if not ok:
        raise ContinuationStallError(f"no polynomial start, residual={residual:.2e}")
    s, step, i = 0., initial_step, 0
    callback(ContinuationState(s, step, s * u, residual), i)
    while s < 1:
        s_next = min(1., s + step)
        u_next, residual, ok = correct(u, s_next, clusters, n_origin)
        if ok:
            s, u, i = s_next, u_next, i + 1
            callback(ContinuationState(s, step, s * u, residual), i)
            step = min(2 * step, initial_step)
        else:
            step /= 2
            logger.info(f"step halved to {step:.2e} at s={s:.6f}")
            if step < min_step:
                raise ContinuationStallError(
                    f"step {step:.1e} below {min_step:.1e} at s={s:.6f}"
                )
    zeros = np.concatenate([np.zeros(n_origin, dtype=complex), u])
    if np.any(np.abs(zeros) >= 1):
        raise RootEscapeError(f"zeros left the disk: {zeros}")
    # beta_w(0) = |w| > 0, so eta = 1 makes F^(N+1)(0) positive
    F = FiniteBlaschke(eta=1., zeros=zeros)
    distance, _ = matching_distance(F.critical_points(), C.points)
    if distance > tol:
        raise CriticalMismatchError(
            f"critical points of the solution at distance {distance:.2e} > tol={tol:.1e}"
        )
    logger.info(f"maximal product of degree {F.degree} after {i} steps")
    return F

import numpy as np
from ..base import QUAD_TOL
from ..errors import DomainError
from ..utils.integration import circle_measure, refined_breakpoints, TWO_PI
import logging
logger = logging.getLogger(__name__)

# radii closer than ZERO_GAP to the modulus of a zero must be nudged
ZERO_GAP = 1e-8


def check_radius(r):
    if not 0 < r < 1:
        raise DomainError(f"radius r={r} must be in (0, 1)")
    return float(r)


def nudge_radius(f, r, gap=ZERO_GAP, max_moves=100):
    """Move r off the modulus of every known zero of f by more than gap.

    The radius is pushed outwards past the offending moduli, or inwards when
    that would leave the disk.
    """
    r = check_radius(r)
    moduli = f.zero_moduli()
    moduli = moduli[moduli > 0]
    for _ in range(max_moves):
        close = moduli[np.abs(moduli - r) <= gap]
        if close.size == 0:
            return r
        outward = close.max() + 2 * gap
        r = outward if outward < 1 else close.min() - 2 * gap
    raise DomainError(f"could not move r={r} off the zero moduli")


def _log_modulus_integrand(f, r, tol, weight=None):
    def integrand(t):
        z = r * np.exp(1j * t)
        result = f.log_modulus(z, tol)
        if result.at_zero:
            raise DomainError(f"circle |z|={r} passes through a zero at {z}")
        if weight is None:
            return result.value
        return weight(z) * result.value
    return integrand


def log_integral(f, r, quad_tol=QUAD_TOL, z0=None):
    """Integral of t -> P(t) log|f(r e^{it})| over [0, 2 pi] and its error.

    Parameters
    ----------
    - f : inner function
    - r : radius in (0, 1), away from the zero moduli of f
    - quad_tol : absolute error target
    - z0 : None for P = 1, else P is the Poisson kernel of the disk of
      radius r at z0, (r^2 - |z0|^2) / |r e^{it} - z0|^2

    Returns
    -------
    - integral, error estimate (quadrature plus truncation)
    """
    r = check_radius(r)
    moduli = f.zero_moduli()
    moduli = moduli[moduli > 0]
    if np.any(np.abs(moduli - r) < ZERO_GAP):
        raise DomainError(f"r={r} is within {ZERO_GAP} of a zero modulus, nudge it")
    weight = None
    angles = list(f.singular_arguments(r))
    if z0 is not None:
        z0 = complex(z0)
        if abs(z0) >= r:
            raise DomainError(f"|z0|={abs(z0)} must be < r={r}")

        def weight(z):
            return (r**2 - abs(z0)**2) / abs(z - z0)**2
        if abs(z0) > 0:
            angles.append(np.angle(z0))
    # truncation error per point is bounded by quad_tol / 10
    point_tol = quad_tol / 10
    integrand = _log_modulus_integrand(f, r, point_tol, weight)
    breakpoints = refined_breakpoints(angles, width=1 - r)
    integral, error = circle_measure(integrand, breakpoints, tol=quad_tol)
    return integral, error + TWO_PI * point_tol


def radial_log_integral(f, r, quad_tol=QUAD_TOL):
    "I(r) = integral of log|f(r e^{it})| over [0, 2 pi]"
    integral, _ = log_integral(f, r, quad_tol)
    return integral


def jensen_integral(B, r):
    """Closed form of I(r) for a finite Blaschke product (Jensen's formula).

    2 pi (log|B(0)| + sum_{|a_j| < r} log(r / |a_j|)), with the zeros at
    the origin contributing log r each through B(z) / z^k.
    """
    moduli = np.abs(B.zeros)
    n_origin = np.sum(moduli == 0)
    others = moduli[moduli > 0]
    # log|B(z)/z^k| at 0 is the log-modulus of the first nonzero coefficient
    log_origin = np.sum(np.log(others))
    inside = others[others < r]
    return TWO_PI * (
        log_origin + n_origin * np.log(r) + np.sum(np.log(r / inside))
    )

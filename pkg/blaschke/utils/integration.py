import numpy as np
from scipy.integrate import quad
from ..errors import QuadError
import logging
logger = logging.getLogger(__name__)

TWO_PI = 2 * np.pi


def wrap_angle(t):
    "Angle in [0, 2 pi)"
    return np.mod(t, TWO_PI)


def refined_breakpoints(angles, width, depth=4):
    """Panel boundaries concentrated around the given angles.

    Parameters
    ----------
    - angles : arguments of nearby singularities
    - width : largest offset, boundaries are placed at angle +- 2^-k width
    - depth : number of dyadic levels k = 0..depth

    Returns
    -------
    - sorted breakpoints in (0, 2 pi)
    """
    points = []
    for angle in angles:
        points.append(angle)
        for k in range(depth + 1):
            offset = width * 2.**(-k)
            points += [angle - offset, angle + offset]
    points = np.unique(np.round(wrap_angle(np.array(points, dtype=float)), 14))
    points = points[(points > 0) & (points < TWO_PI)]
    return points


def circle_measure(f, breakpoints=(), tol=1e-8, limit=200):
    """Computes the integral of f over [0, 2 pi] by adaptive quadrature.

    Parameters
    ----------
    - f : function (R -> R) to integrate
    - breakpoints : interior panel boundaries
    - tol : absolute error target for the whole integral
    - limit : maximal number of subintervals per panel

    Returns
    -------
    - integral, error estimate

    Raises QuadError when the error estimate exceeds tol.
    """
    edges = np.concatenate([[0.], np.sort(breakpoints), [TWO_PI]])
    edges = np.unique(edges)
    n_panels = len(edges) - 1
    panel_tol = tol / n_panels
    integral = 0.
    error = 0.
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, abserr, info = quad(
            f, lo, hi, epsabs=panel_tol, epsrel=0, limit=limit, full_output=1
        )[:3]
        integral += value
        error += abserr
    if not np.isfinite(integral) or error > tol:
        raise QuadError(
            f"quadrature error estimate {error:.2e} exceeds tol={tol:.1e}"
        )
    return integral, error

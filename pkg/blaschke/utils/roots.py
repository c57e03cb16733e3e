"""
Polynomial root finding with Newton refinement and multiplicity clustering.

Polynomials are coefficient arrays in ascending order, as in
``numpy.polynomial.polynomial``. ``aberth`` only needs the logarithmic
derivative p'/p, so it works on polynomials known in factored form.
"""

import numpy as np
from numpy.polynomial import polynomial as P
from ..base import CLUSTER_TOL, ESCAPE_MARGIN
from ..disk.metrics import pseudo_hyperbolic_distance
from ..errors import RootEscapeError
import logging
logger = logging.getLogger(__name__)

# displacement applied to iterates where p'/p cannot be evaluated
NUDGE = 1e-9


def polyroots(coefs):
    """All complex roots of the polynomial (companion matrix eigenvalues).

    Trailing coefficients that vanish relative to the largest one are
    trimmed first, so a numerically dropped degree does not produce
    spurious roots at infinity.
    """
    coefs = np.asarray(coefs, dtype=complex)
    scale = np.max(np.abs(coefs)) if coefs.size else 0
    if scale == 0:
        raise ValueError("zero polynomial has no isolated roots")
    coefs = P.polytrim(coefs, tol=1e-15 * scale)
    if coefs.size == 1:
        return np.zeros(0, dtype=complex)
    return P.polyroots(coefs).astype(complex)


def aberth(log_derivative, count, radius=1., max_iter=500, tol=1e-12):
    """Simultaneous Aberth-Ehrlich iteration for all roots of a polynomial p.

    Parameters
    ----------
    - log_derivative : vectorized z -> p'(z) / p(z)
    - count : degree of p
    - radius : starting points are spread on the circle of this radius
    - max_iter : maximal number of sweeps
    - tol : stop once every correction is below tol (1 + |z|)

    Returns
    -------
    - roots : array of count approximations
    - converged : bool
    """
    if count == 0:
        return np.zeros(0, dtype=complex), True
    angles = 2 * np.pi * (np.arange(count) + 0.5) / count + 0.3
    z = radius * np.exp(1j * angles)
    for _ in range(max_iter):
        with np.errstate(all="ignore"):
            newton = 1 / log_derivative(z)
            diff = z[:, np.newaxis] - z[np.newaxis, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = np.sum(1 / diff, axis=1)
            step = newton / (1 - newton * repulsion)
        bad = ~np.isfinite(step)
        step[bad] = -NUDGE * (1 + 1j)
        z = z - step
        if not bad.any() and np.all(np.abs(step) <= tol * (1 + np.abs(z))):
            return z, True
    logger.info(f"aberth stopped after {max_iter} sweeps, last step {np.max(np.abs(step)):.1e}")
    return z, False


def newton_refine(roots, func, dfunc, max_iter=50, tol=1e-15):
    """Refine each root by Newton iterations on func.

    A step is only accepted when it decreases |func|, which keeps the
    iteration stable near multiple roots where dfunc vanishes.

    Returns
    -------
    - roots : refined roots
    - residuals : |func(root)| after refinement
    """
    roots = np.array(roots, dtype=complex)
    residuals = np.zeros(roots.size)
    for idx, z in enumerate(roots):
        fz = func(z)
        for _ in range(max_iter):
            if abs(fz) <= tol:
                break
            dfz = dfunc(z)
            if dfz == 0:
                break
            z_new = z - fz / dfz
            f_new = func(z_new)
            if not abs(f_new) < abs(fz):
                break
            z, fz = z_new, f_new
        roots[idx] = z
        residuals[idx] = abs(fz)
    return roots, residuals


def cluster_roots(roots, tol=CLUSTER_TOL):
    """Group roots closer than tol in the pseudo-hyperbolic metric.

    Returns
    -------
    - clusters : list of (center, multiplicity), center is the cluster mean
    """
    roots = list(np.asarray(roots, dtype=complex))
    clusters = []
    while roots:
        seed = roots.pop(0)
        members = [seed]
        rest = []
        for z in roots:
            if pseudo_hyperbolic_distance(z, seed) < tol:
                members.append(z)
            else:
                rest.append(z)
        roots = rest
        clusters.append((complex(np.mean(members)), len(members)))
    return clusters


def merge_clusters(roots, tol=CLUSTER_TOL):
    "Replace each cluster of roots by its center repeated multiplicity times"
    clusters = cluster_roots(roots, tol)
    merged = [center for center, mult in clusters for _ in range(mult)]
    return np.array(merged, dtype=complex)


def check_interior(roots, margin=ESCAPE_MARGIN, what="root"):
    "Raise RootEscapeError if any root has modulus >= 1 - margin"
    roots = np.asarray(roots, dtype=complex)
    if roots.size and np.max(np.abs(roots)) >= 1 - margin:
        worst = roots[np.argmax(np.abs(roots))]
        raise RootEscapeError(
            f"{what} {worst} has modulus {abs(worst)} >= 1 - {margin:.0e}"
        )
    return roots

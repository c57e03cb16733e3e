import numpy as np
import pandas as pd
from ..base import ReprMixin, CERT_TOL, ROOT_TOL, ESCAPE_MARGIN
from ..errors import GridError, TargetCoincidesError
from ..disk.metrics import pseudo_hyperbolic_distance
from ..disk.moebius import MoebiusMap
from ..disk.points import check_open_disk
from ..products.truncated_blaschke import TruncatedBlaschke
from ..utils.misc import circle_points, complex2pair
import logging
logger = logging.getLogger(__name__)

# grid points closer to F(0) (pseudo-hyperbolic) are excluded from m1
COINCIDE_TOL = 1e-8
# truncations are certified through their partial product of at most this level
MAX_CERT_LEVEL = 16
DEFAULT_RINGS = [(0.35, 32), (0.7, 32)]
VERDICTS = ["certified", "refuted", "approximate"]


def finite_source(F, max_level=MAX_CERT_LEVEL):
    """The finite Blaschke product the residuals are computed on.

    Returns
    -------
    - finite : FiniteBlaschke
    - exact : False when finite is a truncation of an infinite product
    """
    if isinstance(F, TruncatedBlaschke):
        level = F.level
        if level > max_level:
            logger.warning(f"truncation level {level} lowered to {max_level}")
            level = max_level
        # zeros rounding onto the circle cannot enter a finite product
        interior = np.abs(F.zeros(level)) < 1 - ESCAPE_MARGIN
        n_interior = int(np.argmin(interior)) if not np.all(interior) else level
        if n_interior < level:
            logger.warning(f"truncation level {level} lowered to {n_interior}, zeros reach the circle")
            level = n_interior
        if level < 1:
            raise ValueError(f"no interior zero in {F}")
        return F.to_finite(level), False
    finite = F.as_finite()
    if finite is None:
        raise ValueError(f"no finite Blaschke product available for {F}")
    return finite, True


def m1_residual(F, a, root_tol=ROOT_TOL):
    """| |phi_a(F(0))| - prod_j |xi_j(F; a)| | for a target a != F(0).

    Parameters
    ----------
    - F : FiniteBlaschke or TruncatedBlaschke (approximate)
    - a : complex, |a| < 1
    """
    finite, _ = finite_source(F)
    a = complex(a)
    check_open_disk(a)
    b0 = finite.value_at_origin()
    lhs = float(pseudo_hyperbolic_distance(b0, a))
    if lhs <= COINCIDE_TOL:
        raise TargetCoincidesError(f"a={a} coincides with F(0)={b0}, use m2")
    rhs = finite.preimages(a, root_tol).product_modulus()
    return abs(lhs - rhs)


def m2_residual(F):
    """| |b_n| / (1 - |F(0)|^2) - prod_j |z_j(F)| |.

    b_n is the first nonzero Taylor coefficient of F - F(0) and z_j(F) are
    the nonzero solutions of F(z) = F(0); the empty product is 1.
    """
    finite, _ = finite_source(F)
    _, b_n = finite.first_nonconstant_index()
    b0 = finite.value_at_origin()
    lhs = abs(b_n) / (1 - abs(b0)**2)
    rhs = float(np.prod(np.abs(finite.nonzero_level_points())))
    return abs(lhs - rhs)


def ring_grid(rings):
    """Grid made of concentric rings.

    Parameters
    ----------
    - rings : list of (radius, count)
    """
    points = [circle_points(count, radius) for radius, count in rings]
    return np.concatenate(points) if points else np.zeros(0, dtype=complex)


def default_grid(F, rings=DEFAULT_RINGS, count=8, distance=0.05):
    "Rings plus count points at pseudo-hyperbolic distance from F(0)"
    b0 = complex(F(0.))
    # phi_{-b0} sends the circle |w| = distance onto the points at that
    # pseudo-hyperbolic distance from b0
    around = MoebiusMap(a=-b0)(circle_points(count, distance))
    return np.concatenate([ring_grid(rings), around])


class CertificateReport(ReprMixin):
    """Residuals of the two indestructibility conditions.

    Parameters
    ----------
    - m1_grid : list of (a, residual)
    - m2_residual : float
    - exact : True for finite inputs
    - level : truncation level the residuals were computed at, None when exact
    - tol : certificate tolerance
    - verdict : certified, refuted or approximate
    """

    def __init__(self, m1_grid, m2_residual, exact, tol, verdict, level=None):
        self.m1_grid = m1_grid
        self.m2_residual = m2_residual
        self.exact = exact
        self.level = level
        self.tol = tol
        self.verdict = verdict
        self.repr_init()

    @property
    def m1_max(self):
        return max(residual for _, residual in self.m1_grid)

    def to_dict(self):
        return dict(
            m1_grid=[
                dict(a=complex2pair(a), residual=residual)
                for a, residual in self.m1_grid
            ],
            m1_max=self.m1_max, m2_residual=self.m2_residual,
            exact=self.exact, level=self.level, tol=self.tol,
            verdict=self.verdict
        )

    def to_dataframe(self):
        return pd.DataFrame([
            dict(a_re=a.real, a_im=a.imag, residual=residual)
            for a, residual in self.m1_grid
        ])


def certify_indestructible(F, a_grid=None, tol=CERT_TOL, max_level=MAX_CERT_LEVEL):
    """Check both indestructibility conditions on a grid of targets.

    Parameters
    ----------
    - F : FiniteBlaschke or TruncatedBlaschke
    - a_grid : interior targets, default_grid(F) if None
    - tol : certificate tolerance
    - max_level : highest truncation level used for truncated inputs

    Returns
    -------
    - CertificateReport, certified when exact and all residuals < tol,
      refuted when exact and some residual > 100 tol, else approximate
    """
    finite, exact = finite_source(F, max_level)
    level = None if exact else finite.degree
    if a_grid is None:
        a_grid = default_grid(finite)
    a_grid = np.asarray(a_grid, dtype=complex).reshape(-1)
    if a_grid.size == 0:
        raise GridError("empty target grid")
    check_open_disk(a_grid)
    b0 = finite.value_at_origin()
    keep = pseudo_hyperbolic_distance(a_grid, b0) > COINCIDE_TOL
    if not np.all(keep):
        logger.warning(f"dropped {np.sum(~keep)} grid points coinciding with F(0)={b0}")
    a_grid = a_grid[keep]
    if a_grid.size == 0:
        raise GridError("no grid point left besides F(0)")
    m1_grid = [(complex(a), m1_residual(finite, a)) for a in a_grid]
    m2 = m2_residual(finite)
    worst = max(max(residual for _, residual in m1_grid), m2)
    if not exact:
        verdict = "approximate"
    elif worst < tol:
        verdict = "certified"
    elif worst > 100 * tol:
        verdict = "refuted"
        logger.error(f"finite product refuted, worst residual {worst:.2e}")
    else:
        verdict = "approximate"
    return CertificateReport(
        m1_grid=m1_grid, m2_residual=m2, exact=exact, tol=tol, verdict=verdict,
        level=level
    )

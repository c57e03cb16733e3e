import numpy as np
from .criteria_report import check_schedule, extrapolate_limit
from .radial_integral import log_integral, nudge_radius
from ..base import ReprMixin, QUAD_TOL
from ..errors import DomainError
from ..products.inner_model import InnerModel, ComposedModel
from ..utils.integration import TWO_PI
import logging
logger = logging.getLogger(__name__)


def harmonic_majorant_at(f, z0, r_schedule, quad_tol=QUAD_TOL):
    """Value at z0 of the least harmonic majorant of log|f|.

    On each circle |z| = r the Poisson integral of log|f| at z0 is the least
    harmonic majorant of log|f| on the disk of radius r; these values
    increase with r and are extrapolated to r -> 1 as in criteria_report.

    Parameters
    ----------
    - f : inner function
    - z0 : complex with |z0| < min(r_schedule)
    - r_schedule : strictly increasing radii in (0, 1), at least 3
    - quad_tol : absolute quadrature error target

    Returns
    -------
    - h(z0) <= 0, zero exactly when f is a Blaschke product
    """
    r_schedule = check_schedule(r_schedule)
    z0 = complex(z0)
    if abs(z0) >= min(r_schedule):
        raise DomainError(f"|z0|={abs(z0)} must be < min(r_schedule)={min(r_schedule)}")
    radii, values = [], []
    for r in r_schedule:
        r = nudge_radius(f, r)
        integral, _ = log_integral(f, r, quad_tol * TWO_PI, z0=z0)
        radii.append(r)
        values.append(integral / TWO_PI)
    limit, _ = extrapolate_limit(radii, values)
    return limit


class TransportReport(ReprMixin):
    """Least harmonic majorants along a factorization A = B o C.

    Parameters
    ----------
    - z0 : evaluation point
    - outer_majorant : h of log|T o B| at C(z0)
    - composed_majorant : h of log|T o A| at z0
    - tol : accepted deviation
    """

    def __init__(self, z0, outer_majorant, composed_majorant, tol):
        self.z0 = z0
        self.outer_majorant = outer_majorant
        self.composed_majorant = composed_majorant
        self.tol = tol
        self.repr_init()

    @property
    def ordered(self):
        "h_{T o A}(z0) <= h_{T o B}(C(z0)) within tol"
        return self.composed_majorant <= self.outer_majorant + self.tol

    @property
    def vanishing(self):
        return abs(self.outer_majorant) < self.tol and abs(self.composed_majorant) < self.tol

    def to_dict(self):
        return dict(
            z0=[self.z0.real, self.z0.imag], outer_majorant=self.outer_majorant,
            composed_majorant=self.composed_majorant, tol=self.tol,
            ordered=self.ordered, vanishing=self.vanishing
        )


def majorant_transport_check(B, C, T, z0, r_schedule, quad_tol=QUAD_TOL, tol=1e-4):
    """Compare the majorants of log|T o B| at C(z0) and of log|T o B o C| at z0.

    h_{T o B} o C is a harmonic majorant of log|T o B o C|, so the second value
    never exceeds the first; when B o C is indestructible both vanish.
    """
    z0 = complex(z0)
    w0 = complex(C(z0))
    outer = InnerModel([B], post=T)
    composed = InnerModel([ComposedModel(B, C)], post=T)
    outer_majorant = harmonic_majorant_at(outer, w0, r_schedule, quad_tol)
    composed_majorant = harmonic_majorant_at(composed, z0, r_schedule, quad_tol)
    report = TransportReport(z0, outer_majorant, composed_majorant, tol)
    if not report.ordered:
        logger.warning(f"majorant ordering fails: {report}")
    return report

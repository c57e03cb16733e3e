import numpy as np
from .criteria_report import check_schedule
from .radial_integral import log_integral, nudge_radius
from ..base import ReprMixin, QUAD_TOL
from ..errors import CaseMismatchError, SandwichViolation
from ..disk.moebius import frostman_map
from ..products.finite_blaschke import FiniteBlaschke
from ..products.inner_model import ComposedModel
from ..utils.misc import disk_grid
import logging
logger = logging.getLogger(__name__)

SCHWARZ_TOL = 1e-9


class SandwichReport(ReprMixin):
    """Slacks of the Schwarz bound and of the log-integral inequalities.

    Parameters
    ----------
    - schwarz_slack : min over the grid of |z| - |B(z)|
    - records : list of dict(r, I_A, I_C, upper_slack, zero_slack) with
      upper_slack = I_C + quad_tol - I_A and zero_slack = quad_tol - I_C
    """

    def __init__(self, schwarz_slack, records):
        self.schwarz_slack = schwarz_slack
        self.records = records
        self.repr_init(pad="\t")

    @property
    def min_slack(self):
        slacks = [
            min(record["upper_slack"], record["zero_slack"])
            for record in self.records
        ]
        return min(slacks) if slacks else np.inf

    def to_dict(self):
        return dict(
            schwarz_slack=self.schwarz_slack, records=self.records,
            min_slack=self.min_slack
        )


def schwarz_sandwich_check(B, C, r_schedule, quad_tol=QUAD_TOL, n_grid=200):
    """Schwarz bound |B(z)| <= |z| and the chain I_{B o C}(r) <= I_C(r) <= 0.

    Parameters
    ----------
    - B : inner function with B(0) = 0
    - C : inner function
    - r_schedule : radii in (0, 1)
    - quad_tol : absolute quadrature error target, also the accepted slack
    - n_grid : size of the polar grid for the Schwarz bound

    Raises SandwichViolation (carrying the grid point or radius) when a
    slack is below -quad_tol.
    """
    if abs(B.value_at_origin()) >= SCHWARZ_TOL:
        raise CaseMismatchError(f"B(0)={B.value_at_origin()} must vanish")
    r_schedule = check_schedule(r_schedule, min_length=1)
    grid = disk_grid(n_radii=10, n_angles=max(n_grid // 10, 1), r_max=0.95)
    gaps = np.abs(grid) + SCHWARZ_TOL - np.abs(B(grid))
    if np.any(gaps < 0):
        where = complex(grid[np.argmin(gaps)])
        raise SandwichViolation(f"|B(z)| > |z| at z={where}", where=where)
    schwarz_slack = float(np.min(np.abs(grid) - np.abs(B(grid))))
    composed = ComposedModel(B, C)
    records = []
    for r in r_schedule:
        # zeros of C are zeros of B o C since B(0) = 0
        r = nudge_radius(C, nudge_radius(composed, r))
        I_A, _ = log_integral(composed, r, quad_tol)
        I_C, _ = log_integral(C, r, quad_tol)
        record = dict(
            r=r, I_A=I_A, I_C=I_C,
            upper_slack=I_C + quad_tol - I_A, zero_slack=quad_tol - I_C
        )
        if min(record["upper_slack"], record["zero_slack"]) < -quad_tol:
            raise SandwichViolation(f"log-integral chain fails {record}", where=r)
        records.append(record)
    return SandwichReport(schwarz_slack, records)


def normalize_pair(B, C, T):
    """The normalized factors (S o B o T^-1, T o C) of A = B o C.

    S is the Frostman map sending B(T^-1(0)) to 0, so the new outer factor
    vanishes at 0 and the composition becomes S o A.

    Returns
    -------
    - B_tilde, C_tilde, S
    """
    T_inv = T.invert()
    S = frostman_map(complex(B(T_inv(0.))))
    if isinstance(B, FiniteBlaschke) and isinstance(C, FiniteBlaschke):
        B_tilde = S.to_blaschke().compose(B.compose(T_inv.to_blaschke()))
        C_tilde = T.to_blaschke().compose(C)
    else:
        B_tilde = ComposedModel(S.to_blaschke(), ComposedModel(B, T_inv.to_blaschke()))
        C_tilde = ComposedModel(T.to_blaschke(), C)
    return B_tilde, C_tilde, S

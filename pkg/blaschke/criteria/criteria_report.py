import numpy as np
import pandas as pd
from .radial_integral import log_integral, nudge_radius
from ..base import ReprMixin, QUAD_TOL
from ..errors import ScheduleError
from ..utils.integration import TWO_PI
import logging
logger = logging.getLogger(__name__)

VERDICTS = ["blaschke", "not_blaschke", "inconclusive"]


def check_schedule(r_schedule, min_length=3):
    "Strictly increasing radii in (0, 1)"
    r_schedule = [float(r) for r in r_schedule]
    if len(r_schedule) < min_length:
        raise ScheduleError(
            f"r_schedule needs at least {min_length} radii got {len(r_schedule)}"
        )
    radii = np.array(r_schedule)
    if np.any(radii <= 0) or np.any(radii >= 1):
        raise ScheduleError(f"r_schedule={r_schedule} must lie in (0, 1)")
    if np.any(np.diff(radii) <= 0):
        raise ScheduleError(f"r_schedule={r_schedule} is not strictly increasing")
    return r_schedule


def extrapolate_limit(radii, values):
    """Limit r -> 1 of the two-term model value = L + kappa sigma.

    The model uses sigma = -log r, which equals 1 - r to first order and is
    exact for a finite Blaschke product beyond its outermost zero (Jensen).
    L is fitted on the last two radii, the previous pair gives a second
    estimate used to judge stability.

    Returns
    -------
    - limit, previous_limit
    """
    sigma = -np.log(np.asarray(radii, dtype=float))
    values = np.asarray(values, dtype=float)

    def fit(i, j):
        kappa = (values[j] - values[i]) / (sigma[j] - sigma[i])
        return values[j] - kappa * sigma[j]
    n = len(values)
    limit = fit(n - 2, n - 1)
    previous = fit(n - 3, n - 2) if n >= 3 else limit
    return float(limit), float(previous)


class CriteriaReport(ReprMixin):
    """Radial log-integrals of an inner function and the resulting verdict.

    Parameters
    ----------
    - r_schedule : radii actually used (after nudging)
    - integrals : I(r) for each radius
    - errors : error estimates of I(r)
    - limit_estimate : extrapolated lim_{r -> 1} I(r)
    - previous_estimate : extrapolation from the previous pair of radii
    - monotone : I(r) nondecreasing within 2 quad_tol
    - stable : both extrapolations agree
    - verdict : blaschke, not_blaschke or inconclusive
    """

    def __init__(self, r_schedule, integrals, errors, limit_estimate,
                 previous_estimate, monotone, stable, verdict):
        self.r_schedule = list(r_schedule)
        self.integrals = list(integrals)
        self.errors = list(errors)
        self.limit_estimate = limit_estimate
        self.previous_estimate = previous_estimate
        self.monotone = monotone
        self.stable = stable
        self.verdict = verdict
        self.repr_init(pad="\t")

    @property
    def singular_mass(self):
        "Total mass of the singular measure -limit_estimate / 2 pi"
        return -self.limit_estimate / TWO_PI

    def to_dict(self):
        return dict(
            r_schedule=self.r_schedule, integrals=self.integrals,
            errors=self.errors, limit_estimate=self.limit_estimate,
            previous_estimate=self.previous_estimate,
            singular_mass=self.singular_mass, monotone=self.monotone,
            stable=self.stable, verdict=self.verdict
        )

    def to_dataframe(self):
        return pd.DataFrame(dict(
            r=self.r_schedule, I_r=self.integrals, err_estimate=self.errors
        ))


def criteria_report(f, r_schedule, quad_tol=QUAD_TOL):
    """Radial log-integral criterion for f being a Blaschke product.

    Parameters
    ----------
    - f : inner function
    - r_schedule : strictly increasing radii in (0, 1), at least 3
    - quad_tol : absolute quadrature error target

    Returns
    -------
    - CriteriaReport
    """
    r_schedule = check_schedule(r_schedule)
    radii, integrals, errors = [], [], []
    for r in r_schedule:
        r_used = nudge_radius(f, r)
        if r_used != r:
            logger.warning(f"radius {r} nudged to {r_used} off a zero modulus")
        if radii and r_used <= radii[-1]:
            raise ScheduleError(f"nudged radius {r_used} breaks the schedule order")
        integral, error = log_integral(f, r_used, quad_tol)
        logger.info(f"r={r_used} I(r)={integral:.10f} err={error:.1e}")
        radii.append(r_used)
        integrals.append(integral)
        errors.append(error)
    increments = np.diff(integrals)
    monotone = bool(np.all(increments >= -2 * quad_tol))
    if not monotone:
        logger.warning(f"I(r) decreases along the schedule: {increments}")
    limit, previous = extrapolate_limit(radii, integrals)
    stable = bool(abs(limit - previous) <= 0.1 * abs(limit) + 10 * quad_tol)
    if abs(limit) < 10 * quad_tol:
        verdict = "blaschke"
    elif limit < -10 * quad_tol and stable:
        verdict = "not_blaschke"
    else:
        verdict = "inconclusive"
    return CriteriaReport(
        r_schedule=radii, integrals=integrals, errors=errors,
        limit_estimate=limit, previous_estimate=previous,
        monotone=monotone, stable=stable, verdict=verdict
    )

import numpy as np
import pandas as pd
from ..base import QUAD_TOL
from ..criteria.criteria_report import criteria_report
from ..disk.moebius import frostman_map
from ..disk.points import check_open_disk
from ..errors import GridError
from ..products.finite_blaschke import FiniteBlaschke
from ..products.inner_model import InnerModel
from ..utils.misc import circle_points
import logging
logger = logging.getLogger(__name__)


def shifted_model(F, a):
    """The inner model phi_a o F.

    For a model already post-composed with a Moebius map the two maps are
    merged, so phi_a o phi_{-a} o G is evaluated as G.
    """
    phi = frostman_map(a)
    if isinstance(F, InnerModel) and F.post is not None:
        return InnerModel(F.factors, post=phi.compose(F.post))
    if a == 0:
        return F
    return InnerModel([F], post=phi)


def probe_table(F, a_grid, r_schedule, quad_tol=QUAD_TOL):
    "DataFrame with columns a_re, a_im, singular_mass, verdict"
    a_grid = np.asarray(a_grid, dtype=complex).reshape(-1)
    if a_grid.size == 0:
        raise GridError("empty target grid")
    check_open_disk(a_grid)
    records = []
    for a in a_grid:
        report = criteria_report(shifted_model(F, a), r_schedule, quad_tol)
        if report.verdict == "inconclusive":
            logger.warning(f"probe at a={a} inconclusive: {report.limit_estimate}")
        records.append(dict(
            a_re=a.real, a_im=a.imag, singular_mass=report.singular_mass,
            verdict=report.verdict
        ))
    return pd.DataFrame(records)


def destructibility_probe(F, a_grid, r_schedule, quad_tol=QUAD_TOL):
    """Estimated singular mass of phi_a o F for each target a.

    Returns
    -------
    - list of (a, singular_mass)
    """
    df = probe_table(F, a_grid, r_schedule, quad_tol)
    return [
        (complex(row.a_re, row.a_im), row.singular_mass)
        for row in df.itertuples()
    ]


def frostman_factorization_check(B, a, n_grid=64):
    """Pointwise gap between phi_a o B and its factorization.

    The Frostman shift of a finite B is eta_a prod_j beta_{xi_j(B; a)};
    the gap is measured on two rings of n_grid / 2 points.

    Returns
    -------
    - max |phi_a(B(z)) - shifted(z)| on the rings
    """
    if not isinstance(B, FiniteBlaschke):
        raise ValueError("the factorization is checked on finite products")
    shifted = B.frostman_shift(a)
    phi = frostman_map(a)
    grid = np.concatenate([
        circle_points(n_grid // 2, 0.45), circle_points(n_grid // 2, 0.85, 0.2)
    ])
    return float(np.max(np.abs(phi(B(grid)) - shifted(grid))))

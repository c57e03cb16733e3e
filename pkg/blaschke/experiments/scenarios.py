import numpy as np
import pandas as pd
from .multiple_experiments import run_experiments
from ..base import CERT_TOL, QUAD_TOL
from ..composition.generators import run_case
from ..criteria.criteria_report import criteria_report
from ..disk.moebius import MoebiusMap, frostman_map
from ..indestructibility.certificate import certify_indestructible
from ..maximal.continuation import CriticalSet, solve_maximal
from ..products.finite_blaschke import compose_finite, random_finite_blaschke
from ..utils.misc import circle_points, random_disk_points, random_unimodular
import logging
logger = logging.getLogger(__name__)

ZOO_SCHEDULE = [0.9, 0.99, 0.999]


def trial_rng(seed, trial):
    "Generator of trial `trial`, reproducible on its own"
    return np.random.default_rng([seed, trial])


def run_case_trials(case, trials, seed=0, deg_b=3, deg_c=2, on_progress=None):
    """Batch of random instances of a composition case.

    Returns
    -------
    - DataFrame with columns case_tag, degB, degC, residual,
      matching_distance (detected for IIa_control) and trial
    """
    def run(trial):
        return run_case(case, trial_rng(seed, trial), deg_b, deg_c)
    return run_experiments(run, on_progress, trial=list(range(trials)))


def theorem1_trial(rng, deg_b, deg_c, tol=CERT_TOL):
    "Certificates of B, C and of their composition"
    B = random_finite_blaschke(rng, deg_b)
    C = random_finite_blaschke(rng, deg_c)
    reports = dict(
        B=certify_indestructible(B, tol=tol), C=certify_indestructible(C, tol=tol),
        A=certify_indestructible(compose_finite(B, C), tol=tol)
    )
    return dict(
        degB=deg_b, degC=deg_c,
        verdict_B=reports["B"].verdict, verdict_C=reports["C"].verdict,
        verdict=reports["A"].verdict, m1_max=reports["A"].m1_max,
        m2_residual=reports["A"].m2_residual
    )


def theorem1_trials(deg_b, deg_c, trials, seed=0, tol=CERT_TOL, on_progress=None):
    """Composition of random finite products, certified trial by trial.

    deg_b and deg_c are maximal degrees, the degrees of trial t are drawn
    uniformly in 1..deg_b and 1..deg_c.
    """
    def run(trial):
        rng = trial_rng(seed, trial)
        b = int(rng.integers(1, deg_b + 1))
        c = int(rng.integers(1, deg_c + 1))
        return theorem1_trial(rng, b, c, tol)
    return run_experiments(run, on_progress, trial=list(range(trials)))


def zoo_check(seed=0, degree=3, quad_tol=QUAD_TOL, tol=1e-8):
    """The inclusion chain of the subsemigroups at finite scale.

    - an automorphism is a degree one finite Blaschke product
    - a finite Blaschke product is an automorphism of a maximal one
    - a maximal product is certified indestructible
    - an indestructible product passes the Blaschke criterion
    - a Blaschke product is inner (unimodular on the circle)

    Returns
    -------
    - DataFrame with columns stage, value, passed
    """
    rng = np.random.default_rng(seed)
    records = []
    circle = circle_points(64, 1., 0.05)
    grid = np.concatenate([circle_points(32, 0.5), circle_points(32, 0.9, 0.1)])
    # automorphism
    T = MoebiusMap(a=complex(random_disk_points(rng, 1, 0.8)[0]), eta=random_unimodular(rng))
    gap = float(np.max(np.abs(T(grid) - T.to_blaschke()(grid))))
    records.append(dict(stage="automorphism", value=gap, passed=gap < tol))
    # finite -> maximal up to an automorphism
    B = random_finite_blaschke(rng, degree)
    F = solve_maximal(CriticalSet(B.critical_points()))
    SB = frostman_map(B.value_at_origin())
    values, F_values = SB(B(grid)), F(grid)
    idx = np.argmax(np.abs(F_values))
    rotation = values[idx] / F_values[idx]
    gap = float(np.max(np.abs(values - rotation / abs(rotation) * F_values)))
    records.append(dict(stage="finite", value=gap, passed=gap < 1e-6))
    # maximal -> indestructible
    certificate = certify_indestructible(F)
    records.append(dict(
        stage="maximal", value=max(certificate.m1_max, certificate.m2_residual),
        passed=certificate.verdict == "certified"
    ))
    # indestructible -> Blaschke
    report = criteria_report(F, ZOO_SCHEDULE, quad_tol)
    records.append(dict(
        stage="indestructible", value=report.singular_mass,
        passed=report.verdict == "blaschke"
    ))
    # Blaschke -> inner
    gap = float(np.max(np.abs(np.abs(F(circle)) - 1)))
    records.append(dict(stage="blaschke", value=gap, passed=gap < 1e-12))
    df = pd.DataFrame(records)
    if not df.passed.all():
        logger.error(f"zoo inclusion fails at {list(df.stage[~df.passed])}")
    return df

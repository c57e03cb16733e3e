"""
Random instances of the composition cases and their negative controls.

Every generator takes a numpy Generator and returns the inputs of the
corresponding check.
"""

import numpy as np
from .cases import (
    preimage_decomposition_check, case2a_check, case2b_check
)
from ..disk.metrics import pseudo_hyperbolic_distance
from ..disk.moebius import MoebiusMap
from ..errors import MultiplicityError
from ..products.finite_blaschke import FiniteBlaschke, random_finite_blaschke
from ..utils.misc import random_disk_points, random_unimodular
import logging
logger = logging.getLogger(__name__)


def random_case_I(rng, deg_b=3, deg_c=2, radius=0.8):
    "(B, C, a) with a away from B(C(0))"
    B = random_finite_blaschke(rng, deg_b, radius)
    C = random_finite_blaschke(rng, deg_c, radius)
    A0 = B(C(0.))
    while True:
        a = complex(random_disk_points(rng, 1, 0.9)[0])
        if pseudo_hyperbolic_distance(a, A0) > 0.05:
            return B, C, a


def random_case_IIa(rng, deg_b=3, deg_c=2, radius=0.8):
    "(B, C) with C(0) != 0"
    B = random_finite_blaschke(rng, deg_b, radius)
    while True:
        C = random_finite_blaschke(rng, deg_c, radius)
        if abs(C(0.)) > 0.05:
            return B, C


def random_case_IIb(rng, deg_b=3, deg_c=2, radius=0.8):
    "(B, C) with C(0) = 0, C vanishing at 0 to a random order"
    B = random_finite_blaschke(rng, deg_b, radius)
    M = int(rng.integers(1, deg_c + 1))
    zeros = np.concatenate([
        np.zeros(M, dtype=complex), random_disk_points(rng, deg_c - M, radius)
    ])
    C = FiniteBlaschke(eta=random_unimodular(rng), zeros=zeros)
    return B, C


def negative_control_IIa(rng, deg_b=3, deg_c=2, radius=0.8):
    """(B, C) with C(0) on a critical point of B.

    B - B(C(0)) then has a multiple zero at C(0), the regime excluded from
    case IIa.
    """
    if deg_b < 2:
        raise ValueError(f"deg_b={deg_b} has no critical point")
    B = random_finite_blaschke(rng, deg_b, radius)
    w = complex(B.critical_points()[0])
    zeros = np.concatenate([[0.], random_disk_points(rng, deg_c - 1, radius)])
    C0 = FiniteBlaschke(eta=random_unimodular(rng), zeros=zeros)
    # phi_{-w} o C0 sends 0 to w
    C = MoebiusMap(a=-w).to_blaschke().compose(C0)
    return B, C


def run_case(case, rng, deg_b, deg_c):
    "One instance of case as a record dict"
    if case == "I":
        B, C, a = random_case_I(rng, deg_b, deg_c)
        report = preimage_decomposition_check(B, C, a)
    elif case == "IIa":
        report = case2a_check(*random_case_IIa(rng, deg_b, deg_c))
    elif case == "IIb":
        report = case2b_check(*random_case_IIb(rng, deg_b, deg_c))
    elif case == "IIa_control":
        B, C = negative_control_IIa(rng, deg_b, deg_c)
        try:
            case2a_check(B, C)
            detected = False
        except MultiplicityError:
            detected = True
        if not detected:
            logger.error("multiple zero regime not detected")
        return dict(case_tag=case, degB=deg_b, degC=deg_c, detected=detected)
    else:
        raise ValueError(f"unknown case {case}")
    return dict(
        case_tag=report.case_tag, degB=deg_b, degC=deg_c,
        residual=report.residual, matching_distance=report.matching_distance
    )


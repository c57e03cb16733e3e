"""
Base classes and numerical constants.
"""

import os
import numpy as np
import logging
logger = logging.getLogger(__name__)


# disk membership
BOUNDARY_TOL = 1e-12
# "b_n != 0" threshold for Taylor coefficients
SERIES_TOL = 1e-11
# residual |B(xi) - a| accepted after Newton refinement
ROOT_TOL = 1e-9
# refined roots with modulus >= 1 - ESCAPE_MARGIN signal breakdown
ESCAPE_MARGIN = 1e-10
# pseudo-hyperbolic radius used to merge roots into multiplicity clusters
CLUSTER_TOL = 1e-7
# pseudo-hyperbolic radius used to declare two multiset points identical
MATCH_TOL = 1e-6
CERT_TOL = 1e-7
QUAD_TOL = 1e-8
MAX_FACTORS = 10**6
# running Blaschke sum above which an explicit list is declared divergent
DIVERGENCE_CAP = 1e3


def get_max_factors():
    "Truncation ceiling, overridden by the BLASCHKE_MAX_FACTORS env variable"
    value = os.environ.get("BLASCHKE_MAX_FACTORS")
    if value is None:
        return MAX_FACTORS
    try:
        max_factors = int(value)
    except ValueError:
        raise ValueError(f"BLASCHKE_MAX_FACTORS={value} is not an integer")
    if max_factors < 1:
        raise ValueError(f"BLASCHKE_MAX_FACTORS={value} must be positive")
    return max_factors


class ReprMixin():
    _repr_initialized = False

    def repr_init(self, pad=None, reinit=False):
        if reinit or not self._repr_initialized:
            self._repr_kwargs = self.__dict__.copy()
            self._repr_pad = pad
            self._repr_initialized = True

    def __repr__(self):
        if self._repr_pad:
            pad = f"\n{self._repr_pad}"
        else:
            pad = ""
        sep = ","
        args = sep.join(
            f"{pad}{key}={val}" for key, val in self._repr_kwargs.items()
        )
        if self._repr_pad:
            args += "\n"
        name = self.__class__.__name__
        return f"{name}({args})"


def frozen_array(values, dtype=complex):
    "Read-only 1d copy of values"
    array = np.array(values, dtype=dtype).reshape(-1)
    array.flags.writeable = False
    return array


def unimodular(eta, tol=BOUNDARY_TOL):
    """Check and renormalize a unimodular constant.

    Parameters
    ----------
    - eta : complex
        constant with |eta| = 1 within tol
    - tol : float
        accepted deviation of |eta| from 1

    Returns
    -------
    - eta / |eta|
    """
    eta = complex(eta)
    if abs(abs(eta) - 1) > tol:
        raise ValueError(f"eta={eta} is not unimodular (|eta|={abs(eta)})")
    return eta / abs(eta)

"""
Truncated power series arithmetic.

A power series is represented by the array of its Taylor coefficients
``f = [f0, f1, ..., f_order]``; coefficients beyond ``order`` are unknown,
so every operation returns a series truncated at the smallest order of its
operands.
"""

import numpy as np
from ..errors import SeriesResolutionError


def as_series(f, order=None):
    f = np.asarray(f, dtype=complex).reshape(-1)
    if order is None:
        return f.copy()
    out = np.zeros(order + 1, dtype=complex)
    n = min(order + 1, f.size)
    out[:n] = f[:n]
    return out


def series_mul(f, g, order=None):
    "Cauchy product f * g truncated at order"
    if order is None:
        order = min(len(f), len(g)) - 1
    h = np.convolve(as_series(f, order), as_series(g, order))
    return h[:order + 1]


def series_inv(f, order=None):
    """Reciprocal 1 / f, requires f0 != 0.

    Uses the recurrence g0 = 1/f0, g_k = -(sum_{j=1}^k f_j g_{k-j}) / f0.
    """
    f = as_series(f, order)
    order = f.size - 1
    if f[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    g = np.zeros(order + 1, dtype=complex)
    g[0] = 1 / f[0]
    for k in range(1, order + 1):
        g[k] = -np.dot(f[1:k + 1], g[k - 1::-1]) / f[0]
    return g


def series_compose(f, g, order=None):
    """Composition f(g(x)) for a series g without constant term.

    Parameters
    ----------
    - f : outer series (Taylor coefficients of f around 0)
    - g : inner series, g[0] must vanish
    - order : truncation order

    Notes
    -----
    Evaluated by Horner's scheme f0 + g*(f1 + g*(f2 + ...)).
    """
    if order is None:
        order = min(len(f), len(g)) - 1
    f = as_series(f, order)
    g = as_series(g, order)
    if abs(g[0]) > 0:
        raise ValueError(f"inner series has a constant term g0={g[0]}")
    h = np.zeros(order + 1, dtype=complex)
    for coef in f[::-1]:
        h = series_mul(h, g, order)
        h[0] += coef
    return h


def first_nonzero_index(f, start=1, tol=0.):
    """Smallest index n >= start with |f_n| > tol.

    Raises SeriesResolutionError if all coefficients are below tol.
    """
    f = np.asarray(f)
    for n in range(start, f.size):
        if abs(f[n]) > tol:
            return n
    raise SeriesResolutionError(
        f"no coefficient above tol={tol:.1e} in indices {start}..{f.size-1}"
    )

import numpy as np
from ..base import BOUNDARY_TOL
from ..errors import DomainError


def check_closed_disk(z, tol=BOUNDARY_TOL):
    "Raise DomainError if |z| > 1 + tol (z scalar or array)"
    modulus = np.abs(np.asarray(z, dtype=complex))
    if np.any(modulus > 1 + tol):
        raise DomainError(f"point(s) outside the closed unit disk: max |z|={np.max(modulus)}")
    return z


def check_open_disk(z):
    "Raise DomainError unless |z| < 1 (z scalar or array)"
    modulus = np.abs(np.asarray(z, dtype=complex))
    if np.any(modulus >= 1):
        raise DomainError(f"point(s) outside the open unit disk: max |z|={np.max(modulus)}")
    return z


def unit_disk_point(z):
    "Interior point of the unit disk"
    z = complex(z)
    check_open_disk(z)
    return z


def boundary_point(z, tol=BOUNDARY_TOL):
    "Point of the unit circle, renormalized to modulus one"
    z = complex(z)
    if abs(abs(z) - 1) > tol:
        raise DomainError(f"{z} is not on the unit circle (|z|={abs(z)})")
    return z / abs(z)

import numpy as np
from .base_product import InnerFunction, LogModulus
from ..disk.points import boundary_point, check_closed_disk
from ..errors import DomainError
from ..utils.misc import complex2pair, pair2complex


class AtomicSingular(InnerFunction):
    """Singular inner function S(z) = exp(-mass (atom + z) / (atom - z)).

    Its singular measure is the point mass `mass` at `atom` and
    log|S(z)| = -mass (1 - |z|^2) / |atom - z|^2.

    Parameters
    ----------
    - mass : float > 0
    - atom : point of the unit circle
    """

    def __init__(self, mass=1., atom=1.):
        if not mass > 0:
            raise ValueError(f"mass={mass} must be > 0")
        self.mass = float(mass)
        self.atom = boundary_point(atom)
        self.repr_init()

    def __call__(self, z):
        check_closed_disk(z)
        z = np.asarray(z, dtype=complex)
        if np.any(z == self.atom):
            raise DomainError(f"S is not defined at its atom {self.atom}")
        value = np.exp(-self.mass * (self.atom + z) / (self.atom - z))
        return complex(value) if value.ndim == 0 else value

    def log_modulus(self, z, tol=None):
        z = complex(z)
        if abs(z) >= 1:
            raise DomainError(f"|z|={abs(z)} >= 1")
        value = -self.mass * (1 - abs(z)**2) / abs(self.atom - z)**2
        return LogModulus(value=value, err=0.)

    def singular_arguments(self, r, band=0.1):
        # the Poisson kernel peaks at the atom as r -> 1
        return np.array([np.angle(self.atom)])

    def to_dict(self):
        return dict(type="atomic", mass=self.mass, atom=complex2pair(self.atom))

    @classmethod
    def from_dict(cls, data):
        return cls(mass=data["mass"], atom=pair2complex(data["atom"]))

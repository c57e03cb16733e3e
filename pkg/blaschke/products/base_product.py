import numpy as np
from ..base import ReprMixin


class LogModulus(ReprMixin):
    """log|f(z)| with an error bound.

    Parameters
    ----------
    - value : float or None
        log|f(z)|, None when z is a zero of f
    - err : float
        bound on |log|f(z)| - value|
    - level : int or None
        truncation level used (infinite products only)
    - at_zero : bool
        True when z is a zero of f (log|f(z)| = -inf)
    """

    def __init__(self, value, err=0., level=None, at_zero=False):
        self.value = value
        self.err = err
        self.level = level
        self.at_zero = at_zero
        self.repr_init()

    @classmethod
    def zero(cls, level=None):
        return cls(value=None, err=0., level=level, at_zero=True)

    def __add__(self, other):
        if self.at_zero or other.at_zero:
            return LogModulus.zero()
        level = self.level if other.level is None else other.level
        return LogModulus(
            value=self.value + other.value, err=self.err + other.err,
            level=level
        )


class InnerFunction(ReprMixin):
    """Evaluable inner function on the unit disk.

    Subclasses implement
    - __call__(z) : value at z
    - log_modulus(z, tol) : LogModulus at z
    - singular_arguments(r, band) : arguments t where log|f(r e^{it})| is
      (nearly) singular, used to place quadrature breakpoints
    - zero_moduli() : moduli of the known zeros
    - to_dict() : json description
    """

    def value_at_origin(self):
        return complex(self(0.))

    def singular_arguments(self, r, band=0.1):
        return np.zeros(0)

    def zero_moduli(self):
        return np.zeros(0)

    def as_finite(self):
        "Equivalent FiniteBlaschke or None"
        return None

import numpy as np
from .base_product import InnerFunction, LogModulus
from .finite_blaschke import FiniteBlaschke, factor_units
from ..base import unimodular, get_max_factors
from ..errors import DomainError, TolError
from ..sequences import rule_from_dict
from ..utils.misc import complex2pair, pair2complex
import logging
logger = logging.getLogger(__name__)


class TruncatedBlaschke(InnerFunction):
    """Infinite Blaschke product eta prod_n beta_{a_n} given by a zero rule.

    Evaluation uses the partial product B_N over the first N = level zeros.
    Log-moduli carry the bound

        |log|B(z)| - log|B_N(z)|| <= 4 (1 + |z|) / (1 - |z|) tail_bound(N)

    valid when every remaining factor has 1 - |beta_{a_n}(z)| <= 1/2.

    Parameters
    ----------
    - rule : ZeroSequenceRule
    - level : int >= 1
        truncation level N
    - eta : complex, |eta| = 1
    """

    def __init__(self, rule, level=1000, eta=1.):
        if level < 1:
            raise ValueError(f"level={level} must be >= 1")
        self.rule = rule
        self.level = int(level)
        self.eta = unimodular(eta)
        self.repr_init()

    def zeros(self, level=None):
        return self.rule.zeros(level or self.level)

    def log_tail(self, N, modulus):
        """Bound on |log|B(z)| - log|B_N(z)|| for |z| <= modulus.

        Returns inf while some remaining factor may be far from unimodular.
        """
        if modulus >= 1:
            return np.inf
        distortion = (1 + modulus) / (1 - modulus)
        # 1 - |beta_a(z)| <= (1 - |a|^2) distortion <= 2 (1 - |a|) distortion
        if 2 * self.rule.max_tail_defect(N) * distortion > 0.5:
            return np.inf
        return 4 * distortion * self.rule.tail_bound(N)

    def required_level(self, radius, tol, max_factors=None):
        """Smallest level >= self.level (by doubling) with log_tail <= tol.

        Raises TolError when the level would exceed max_factors
        (BLASCHKE_MAX_FACTORS or MAX_FACTORS by default).
        """
        max_factors = max_factors or get_max_factors()
        N = min(self.level, max_factors)
        while self.log_tail(N, radius) > tol:
            if self.rule.length is not None and N >= self.rule.length:
                break
            if N >= max_factors:
                raise TolError(
                    f"no level <= {max_factors} reaches tol={tol:.1e} at |z|={radius}"
                )
            N = min(2 * N, max_factors)
        return N

    def log_modulus(self, z, tol=None):
        """log|B(z)| with error bound, raising the level until err <= tol.

        Parameters
        ----------
        - z : complex, |z| < 1
        - tol : float or None
            None keeps the current level and only reports the bound

        Returns
        -------
        - LogModulus(value, err, level) or the at-zero sentinel
        """
        z = complex(z)
        modulus = abs(z)
        if modulus >= 1:
            raise DomainError(f"|z|={modulus} >= 1")
        N = self.level if tol is None else self.required_level(modulus, tol)
        zeros = self.zeros(N)
        distances = np.abs(z - zeros)
        if np.any(distances == 0):
            return LogModulus.zero(level=N)
        value = np.sum(np.log(distances) - np.log(np.abs(1 - np.conj(zeros) * z)))
        err = self.log_tail(N, modulus)
        return LogModulus(value=float(value), err=float(err), level=N)

    def __call__(self, z):
        "eta B_N(z), approximate (no phase error bound)"
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) >= 1):
            raise DomainError("truncated products are evaluated in the open disk")
        zeros = self.zeros()
        units = factor_units(zeros)
        values = np.array([
            self.eta * np.prod(units * (w - zeros) / (1 - np.conj(zeros) * w))
            for w in z.reshape(-1)
        ], dtype=complex).reshape(z.shape)
        return complex(values) if values.ndim == 0 else values

    def evaluate(self, z):
        return self(z)

    def to_finite(self, level=None):
        "The partial product B_N as a FiniteBlaschke"
        return FiniteBlaschke(eta=self.eta, zeros=self.zeros(level))

    def with_level(self, level):
        return TruncatedBlaschke(rule=self.rule, level=level, eta=self.eta)

    def singular_arguments(self, r, band=0.1):
        zeros = self.zeros()
        near = zeros[(np.abs(np.abs(zeros) - r) < band) & (zeros != 0)]
        return np.unique(np.round(np.angle(near), 12))

    def zero_moduli(self):
        return np.abs(self.zeros())

    def to_dict(self):
        return dict(
            type="sequence", rule=self.rule.to_dict(), level=self.level,
            eta=complex2pair(self.eta)
        )

    @classmethod
    def from_dict(cls, data):
        return cls(
            rule=rule_from_dict(data["rule"]), level=data.get("level", 1000),
            eta=pair2complex(data.get("eta", [1., 0.]))
        )


def log_modulus_truncated(T, z, tol):
    "(log|B(z)|, err) with the level auto-raised until err <= tol"
    result = T.log_modulus(z, tol)
    return result.value, result.err


def evaluate_truncated(T, z):
    return T(z)

import numpy as np
from ..base import ReprMixin, unimodular
from ..utils.misc import complex2pair, pair2complex
from .points import check_closed_disk, check_open_disk, unit_disk_point


class MoebiusMap(ReprMixin):
    """Unit disk automorphism T(z) = eta (z - a) / (1 - conj(a) z).

    Parameters
    ----------
    - a : complex, |a| < 1
        zero of T
    - eta : complex, |eta| = 1
        rotation factor
    """

    def __init__(self, a=0., eta=1.):
        self.a = unit_disk_point(a)
        self.eta = unimodular(eta)
        self.repr_init()

    def __call__(self, z):
        check_closed_disk(z)
        z = np.asarray(z, dtype=complex)
        value = self.eta * (z - self.a) / (1 - np.conj(self.a) * z)
        return complex(value) if value.ndim == 0 else value

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return self.a == other.a and self.eta == other.eta

    def __hash__(self):
        return hash((self.a, self.eta))

    def matrix(self):
        "Coefficient matrix [[A, B], [C, D]] of T(z) = (A z + B) / (C z + D)"
        return np.array([
            [self.eta, -self.eta * self.a],
            [-np.conj(self.a), 1.]
        ], dtype=complex)

    @classmethod
    def from_matrix(cls, M):
        "Automorphism with coefficient matrix M, normalized by D"
        (A, B), (C, D) = M
        eta = A / D
        a = -np.conj(C / D)
        return cls(a=a, eta=eta / abs(eta))

    def compose(self, other):
        "The automorphism self o other"
        return MoebiusMap.from_matrix(self.matrix() @ other.matrix())

    def invert(self):
        # z = conj(eta) (w + eta a) / (1 + conj(eta a) w)
        return MoebiusMap(a=-self.eta * self.a, eta=np.conj(self.eta))

    def is_identity(self, tol=1e-12):
        return abs(self.a) < tol and abs(self.eta - 1) < tol

    def to_blaschke(self):
        "The degree one FiniteBlaschke equal to T"
        from ..products.finite_blaschke import FiniteBlaschke
        if self.a == 0:
            return FiniteBlaschke(eta=self.eta, zeros=[0.])
        # (z - a)/(1 - conj(a) z) = (-a/|a|) beta_a(z)
        eta = self.eta * (-self.a / abs(self.a))
        return FiniteBlaschke(eta=eta, zeros=[self.a])

    def to_dict(self):
        return dict(a=complex2pair(self.a), eta=complex2pair(self.eta))

    @classmethod
    def from_dict(cls, data):
        return cls(a=pair2complex(data["a"]), eta=pair2complex(data["eta"]))


IDENTITY = MoebiusMap(a=0., eta=1.)


def frostman_map(a):
    "The Frostman map phi_a(w) = (w - a) / (1 - conj(a) w)"
    return MoebiusMap(a=a, eta=1.)


def moebius_apply(T, z):
    return T(z)


def moebius_compose(T1, T2):
    "R with R(z) = T1(T2(z))"
    return T1.compose(T2)


def moebius_invert(T):
    return T.invert()


def moebius_to_blaschke(T):
    return T.to_blaschke()


def pseudo_hyperbolic(z, w):
    """Pseudo-hyperbolic distance |z - w| / |1 - conj(w) z|.

    Parameters
    ----------
    - z, w : complex, |z| < 1 and |w| < 1

    Returns
    -------
    - distance in [0, 1)
    """
    check_open_disk(z)
    check_open_disk(w)
    z, w = complex(z), complex(w)
    return abs(z - w) / abs(1 - np.conj(w) * z)

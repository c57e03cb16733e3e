import numpy as np
from .base_rule import ZeroSequenceRule
from ..disk.points import boundary_point
from ..utils.misc import complex2pair, pair2complex


class RadialPowerRule(ZeroSequenceRule):
    """Zeros a_n = (1 - c n^-p) direction.

    Parameters
    ----------
    - c : float in (0, 2)
    - p : float > 1
    - direction : point of the unit circle
    """
    kind = "radial_power"

    def __init__(self, c=1., p=2., direction=1.):
        if not 0 < c < 2:
            raise ValueError(f"c={c} must be in (0, 2)")
        if not p > 1:
            raise ValueError(f"p={p} must be > 1 (Blaschke condition)")
        self.c = float(c)
        self.p = float(p)
        self.direction = boundary_point(direction)
        self.repr_init()

    def _zeros(self, N):
        n = np.arange(1, N + 1, dtype=float)
        return (1 - self.c * n**(-self.p)) * self.direction

    def tail_bound(self, N):
        # 1 - |a_n| <= c n^-p and sum_{n > N} n^-p <= N^(1-p) / (p-1)
        return self.c * N**(1 - self.p) / (self.p - 1)

    def max_tail_defect(self, N):
        return self.c * (N + 1)**(-self.p)

    def to_dict(self):
        return dict(
            kind=self.kind, c=self.c, p=self.p,
            direction=complex2pair(self.direction)
        )

    @classmethod
    def from_dict(cls, data):
        return cls(
            c=data["c"], p=data["p"], direction=pair2complex(data["direction"])
        )

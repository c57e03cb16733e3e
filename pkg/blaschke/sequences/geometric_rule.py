import numpy as np
from .base_rule import ZeroSequenceRule
from ..disk.points import boundary_point
from ..utils.misc import complex2pair, pair2complex


class GeometricRule(ZeroSequenceRule):
    """Zeros a_n = (1 - c q^n) direction.

    Parameters
    ----------
    - c : float in (0, 1)
    - q : float in (0, 1)
    - direction : point of the unit circle
    """
    kind = "geometric"

    def __init__(self, c=0.5, q=0.5, direction=1.):
        if not 0 < c < 1:
            raise ValueError(f"c={c} must be in (0, 1)")
        if not 0 < q < 1:
            raise ValueError(f"q={q} must be in (0, 1)")
        self.c = float(c)
        self.q = float(q)
        self.direction = boundary_point(direction)
        self.repr_init()

    def _zeros(self, N):
        n = np.arange(1, N + 1, dtype=float)
        return (1 - self.c * self.q**n) * self.direction

    def tail_bound(self, N):
        return self.c * self.q**(N + 1) / (1 - self.q)

    def max_tail_defect(self, N):
        return self.c * self.q**(N + 1)

    def to_dict(self):
        return dict(
            kind=self.kind, c=self.c, q=self.q,
            direction=complex2pair(self.direction)
        )

    @classmethod
    def from_dict(cls, data):
        return cls(
            c=data["c"], q=data["q"], direction=pair2complex(data["direction"])
        )

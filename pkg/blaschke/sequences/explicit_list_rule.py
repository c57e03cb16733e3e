import numpy as np
from .base_rule import ZeroSequenceRule
from ..base import DIVERGENCE_CAP, frozen_array
from ..disk.points import check_open_disk
from ..errors import DivergenceError
from ..utils.misc import complex2pair, pair2complex


class ExplicitListRule(ZeroSequenceRule):
    """Finite list of zeros a_1, ..., a_L.

    Parameters
    ----------
    - points : list of interior points
    - cap : running Blaschke sums above cap raise DivergenceError
    """
    kind = "explicit_list"

    def __init__(self, points, cap=DIVERGENCE_CAP):
        self.points = frozen_array(points)
        self.cap = cap
        self.repr_init()
        check_open_disk(self.points)
        self.length = self.points.size
        running = np.cumsum(1 - np.abs(self.points))
        self.total = float(running[-1]) if self.length else 0.
        self._tails = self.total - np.concatenate([[0.], running])

    def _zeros(self, N):
        return np.array(self.points[:N])

    def blaschke_sum(self, N):
        partial, tail_bound = super().blaschke_sum(N)
        if partial > self.cap:
            raise DivergenceError(
                f"Blaschke sum {partial:.3e} exceeds cap={self.cap:.1e}"
            )
        return partial, tail_bound

    def tail_bound(self, N):
        return max(float(self._tails[min(N, self.length)]), 0.)

    def max_tail_defect(self, N):
        rest = self.points[N:]
        return float(np.max(1 - np.abs(rest))) if rest.size else 0.

    def to_dict(self):
        return dict(kind=self.kind, points=[complex2pair(a) for a in self.points])

    @classmethod
    def from_dict(cls, data):
        return cls(points=[pair2complex(pair) for pair in data["points"]])

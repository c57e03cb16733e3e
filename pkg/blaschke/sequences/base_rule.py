import numpy as np
from ..base import ReprMixin


class ZeroSequenceRule(ReprMixin):
    """Zero sequence (a_n), n = 1, 2, ... of a Blaschke product.

    Subclasses implement
    - _zeros(N) : array [a_1, ..., a_N]
    - tail_bound(N) : upper bound on sum_{n > N} (1 - |a_n|)
    - max_tail_defect(N) : upper bound on sup_{n > N} (1 - |a_n|)
    """
    length = None
    _cached = None

    def zeros(self, N):
        "The first N zeros (fewer for a finite list)"
        if self.length is not None:
            N = min(N, self.length)
        cached = self._cached
        if cached is None or cached.size < N:
            cached = self._zeros(N)
            cached.flags.writeable = False
            self._cached = cached
        return cached[:N]

    def defects(self, N):
        "1 - |a_n| for n <= N"
        return 1 - np.abs(self.zeros(N))

    def blaschke_sum(self, N):
        """Partial Blaschke sum and tail bound.

        Parameters
        ----------
        - N : int >= 1

        Returns
        -------
        - partial : sum_{n <= N} (1 - |a_n|)
        - tail_bound : upper bound on sum_{n > N} (1 - |a_n|)
        """
        if N < 1:
            raise ValueError(f"N={N} must be >= 1")
        partial = float(np.sum(self.defects(N)))
        return partial, float(self.tail_bound(N))

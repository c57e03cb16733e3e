import numpy as np
from scipy.optimize import linear_sum_assignment


def pseudo_hyperbolic_distance(z, w):
    "Vectorized |z - w| / |1 - conj(w) z| without domain checks"
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return np.abs(z - w) / np.abs(1 - np.conj(w) * z)


def euclidean_distance(z, w):
    return np.abs(np.asarray(z, dtype=complex) - np.asarray(w, dtype=complex))


METRICS = {
    "pseudo_hyperbolic": pseudo_hyperbolic_distance,
    "euclidean": euclidean_distance
}


def cost_matrix(xs, ys, metric="pseudo_hyperbolic"):
    "Pairwise distances cost[i, j] = d(xs[i], ys[j])"
    func = METRICS[metric]
    xs = np.asarray(xs, dtype=complex).reshape(-1, 1)
    ys = np.asarray(ys, dtype=complex).reshape(1, -1)
    return func(xs, ys)


def matching_distance(xs, ys, metric="pseudo_hyperbolic"):
    """Distance between two multisets under an optimal assignment.

    Parameters
    ----------
    - xs, ys : multisets of the same size
    - metric : key of METRICS

    Returns
    -------
    - distance : largest matched distance (0 for empty multisets)
    - matching : list of (i, j) index pairs
    """
    xs = np.asarray(xs, dtype=complex).reshape(-1)
    ys = np.asarray(ys, dtype=complex).reshape(-1)
    if xs.size != ys.size:
        raise ValueError(f"multisets of different sizes {xs.size} and {ys.size}")
    if xs.size == 0:
        return 0., []
    cost = cost_matrix(xs, ys, metric)
    row_ind, col_ind = linear_sum_assignment(cost)
    matching = list(zip(row_ind, col_ind))
    distance = float(cost[row_ind, col_ind].max())
    return distance, matching

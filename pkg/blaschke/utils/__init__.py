from .misc import (
    complex2pair, pair2complex, complex2array, array2complex, parse_complex,
    circle_points, disk_grid, random_disk_points, random_unimodular
)
from .series import (
    series_mul, series_inv, series_compose, first_nonzero_index
)
from .roots import (
    polyroots, aberth, newton_refine, cluster_roots, merge_clusters,
    check_interior
)
from .integration import circle_measure, refined_breakpoints

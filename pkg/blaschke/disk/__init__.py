from .points import (
    check_closed_disk, check_open_disk, unit_disk_point, boundary_point
)
from .moebius import (
    MoebiusMap, IDENTITY, frostman_map,
    moebius_apply, moebius_compose, moebius_invert, moebius_to_blaschke,
    pseudo_hyperbolic
)
from .metrics import (
    METRICS, cost_matrix, matching_distance, pseudo_hyperbolic_distance
)

from .certificate import (
    CertificateReport, certify_indestructible, m1_residual, m2_residual,
    ring_grid, default_grid, finite_source, VERDICTS
)
from .probe import (
    destructibility_probe, probe_table, shifted_model,
    frostman_factorization_check
)

from .radial_integral import (
    radial_log_integral, log_integral, nudge_radius, jensen_integral
)
from .criteria_report import (
    CriteriaReport, criteria_report, check_schedule, extrapolate_limit, VERDICTS
)
from .majorant import harmonic_majorant_at, majorant_transport_check, TransportReport
from .sandwich import SandwichReport, schwarz_sandwich_check, normalize_pair

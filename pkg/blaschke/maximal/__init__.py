from .continuation import (
    CriticalSet, ContinuationState, solve_maximal, scaled_equations,
    polynomial_start
)
from .verify import (
    MaximalReport, verify_maximal, maximal_degree_two, ClosureReport,
    closure_check, chain_rule_critical_set
)
from .callbacks import PassCallback, JoinCallback, LogProgress, TrackPath

from .multiple_experiments import (
    run_experiments, save_experiments, log_on_progress, as_list
)
from .scenarios import (
    run_case_trials, theorem1_trial, theorem1_trials, zoo_check, trial_rng
)

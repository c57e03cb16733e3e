from .case_report import CaseReport, CASE_TAGS
from .cases import (
    preimage_decomposition_check, case2a_check, case2b_check,
    theorem1_regression, matched_preimage
)
from .generators import (
    random_case_I, random_case_IIa, random_case_IIb, negative_control_IIa,
    run_case
)

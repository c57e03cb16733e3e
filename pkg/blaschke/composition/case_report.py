from ..base import ReprMixin

CASE_TAGS = ["I", "IIa", "IIb"]


class CaseReport(ReprMixin):
    """Both sides of a level-set identity behind the composition theorem.

    Parameters
    ----------
    - case_tag : "I", "IIa" or "IIb"
    - lhs, rhs : the two independently computed sides
    - residual : |lhs - rhs| (the largest one when several identities)
    - matching_distance : multiset distance of the preimage sets (case I)
    - witness : json description of the inputs
    - details : secondary quantities (orders, printed formula comparisons)
    """

    def __init__(self, case_tag, lhs, rhs, residual, matching_distance=0.,
                 witness=None, details=None):
        if case_tag not in CASE_TAGS:
            raise ValueError(f"case_tag={case_tag} not in {CASE_TAGS}")
        self.case_tag = case_tag
        self.lhs = lhs
        self.rhs = rhs
        self.residual = residual
        self.matching_distance = matching_distance
        self.witness = witness or {}
        self.details = details or {}
        self.repr_init(pad="\t")

    def to_dict(self):
        return dict(
            case_tag=self.case_tag, lhs=self.lhs, rhs=self.rhs,
            residual=self.residual, matching_distance=self.matching_distance,
            witness=self.witness, details=self.details
        )

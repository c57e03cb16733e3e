"""Exceptions raised by the blaschke package."""


class BlaschkeError(Exception):
    pass


class DomainError(BlaschkeError, ValueError):
    "Point outside the closed (or open) unit disk"


class DivergenceError(BlaschkeError, ValueError):
    "Zero sequence violating the Blaschke condition"


class TargetCoincidesError(BlaschkeError, ValueError):
    "Target a coincides with F(0), use the m2 condition instead"


class GridError(BlaschkeError, ValueError):
    pass


class ScheduleError(BlaschkeError, ValueError):
    pass


class CaseMismatchError(BlaschkeError, ValueError):
    "Inputs do not satisfy the hypothesis of the requested proof case"


class MultiplicityError(BlaschkeError, ValueError):
    "C(0) is a multiple solution of B(w) = a"


class SandwichViolation(BlaschkeError):
    def __init__(self, message, where):
        super().__init__(message)
        self.where = where


class CriticalMismatchError(BlaschkeError):
    pass


class NumericalError(BlaschkeError, ArithmeticError):
    "Numerical breakdown of an otherwise valid computation"


class RootEscapeError(NumericalError):
    pass


class ConvergenceError(NumericalError):
    pass


class SeriesResolutionError(NumericalError):
    pass


class ProbeError(NumericalError):
    pass


class TolError(NumericalError):
    pass


class QuadError(NumericalError):
    pass


class ContinuationStallError(NumericalError):
    pass

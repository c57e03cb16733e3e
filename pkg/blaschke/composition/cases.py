import numpy as np
from .case_report import CaseReport
from ..base import SERIES_TOL, MATCH_TOL, CERT_TOL
from ..disk.metrics import matching_distance, pseudo_hyperbolic_distance
from ..errors import CaseMismatchError, MultiplicityError, ConvergenceError
from ..indestructibility.certificate import certify_indestructible
from ..products.finite_blaschke import compose_finite
from ..utils.misc import complex2pair
from ..utils.series import series_compose, first_nonzero_index
import logging
logger = logging.getLogger(__name__)

# C(0) below this modulus is treated as 0 in case IIa / IIb
IIA_TOL = 1e-8
IIB_TOL = 1e-10
# relative agreement of the coefficient formulas logged for comparison
FORMULA_RTOL = 1e-8


def _witness(B, C, a=None):
    witness = dict(B=B.to_dict(), C=C.to_dict())
    if a is not None:
        witness["a"] = complex2pair(a)
    return witness


def _composed_series(B, C, order):
    "Taylor coefficients of B o C at 0, by series composition"
    c = C.taylor_coeffs(order)
    c0 = complex(c[0])
    b = B.taylor_coeffs(order, center=c0)
    c[0] = 0.
    return series_compose(b, c, order)


def _preimage_product(C, targets):
    "prod over targets w of prod_k |xi_k(C; w)|"
    return float(np.prod([C.preimages(w).product_modulus() for w in targets]))


def _formulas_agree(x, y):
    return abs(x - y) <= FORMULA_RTOL * max(abs(x), abs(y), 1e-300)


def preimage_decomposition_check(B, C, a):
    """Preimages of a under A = B o C against the preimages under C of
    the preimages under B.

    The lhs / rhs pair is |phi_a(A(0))| = prod_{j,k} |xi_k(C; xi_j(B; a))|.
    """
    a = complex(a)
    A = compose_finite(B, C)
    A0 = A.value_at_origin()
    if pseudo_hyperbolic_distance(a, A0) <= IIA_TOL:
        raise CaseMismatchError(f"a={a} coincides with A(0)={A0}")
    lhs_set = A.preimages(a).points
    xis = B.preimages(a).points
    rhs_set = np.concatenate([C.preimages(xi).points for xi in xis])
    if lhs_set.size != rhs_set.size:
        raise ConvergenceError(
            f"{lhs_set.size} preimages under A but {rhs_set.size} through C"
        )
    distance, _ = matching_distance(lhs_set, rhs_set)
    lhs = float(pseudo_hyperbolic_distance(A0, a))
    rhs = float(np.prod(np.abs(rhs_set)))
    # per-xi instances of the one-target identity for C
    C0 = C.value_at_origin()
    chain = float(np.prod(pseudo_hyperbolic_distance(C0, xis)))
    details = dict(
        chain_residual=abs(chain - rhs), degree=int(A.degree),
        lhs_count=int(lhs_set.size)
    )
    return CaseReport(
        "I", lhs=lhs, rhs=rhs, residual=abs(lhs - rhs),
        matching_distance=distance, witness=_witness(B, C, a), details=details
    )


def matched_preimage(xis, c0, tol=MATCH_TOL):
    """Index of the preimage equal to c0, refusing multiple solutions.

    Raises MultiplicityError when c0 is a multiple solution of B(w) = a,
    ConvergenceError when no preimage matches.
    """
    distances = pseudo_hyperbolic_distance(xis, c0)
    close = np.flatnonzero(distances < tol)
    if close.size == 0:
        raise ConvergenceError(f"no preimage matches C(0)={c0}")
    if close.size > 1:
        raise MultiplicityError(
            f"C(0)={c0} is a solution of multiplicity {close.size} of B(w) = B(C(0))"
        )
    return int(close[0])


def case2a_check(B, C):
    """Level coefficient identity for A = B o C when C(0) != 0.

    lhs = |a_N| / (1 - |a|^2) with a = A(0) and a_N the first nonzero
    coefficient of A - a (series composition), rhs = prod over the
    preimages xi_j(B; a) other than C(0) of prod_k |xi_k(C; xi_j)|, times
    prod_j |z_j(C)|.
    """
    c0 = C.value_at_origin()
    if abs(c0) <= IIA_TOL:
        raise CaseMismatchError(f"C(0)={c0} vanishes, use case IIb")
    a = complex(B(c0))
    order = 2 * B.degree * C.degree
    series = _composed_series(B, C, order)
    N = first_nonzero_index(series, start=1, tol=SERIES_TOL)
    a_N = complex(series[N])
    xis = B.preimages(a).points
    idx = matched_preimage(xis, c0)
    others = np.delete(xis, idx)
    lhs = abs(a_N) / (1 - abs(a)**2)
    rhs = _preimage_product(C, others) * float(
        np.prod(np.abs(C.nonzero_level_points()))
    )
    n_C, c_N = C.first_nonconstant_index()
    chain_rule = c_N * B.derivative(c0)
    n_B, b_M = B.first_nonconstant_index()
    printed = N * c_N * b_M * c0**(N - 1)
    details = dict(
        order=N, order_C=n_C, order_matches=(N == n_C),
        a_N=complex2pair(a_N), chain_rule=complex2pair(chain_rule),
        printed_formula=complex2pair(printed),
        chain_rule_matches=_formulas_agree(a_N, chain_rule),
        printed_matches=_formulas_agree(a_N, printed)
    )
    if not details["printed_matches"]:
        logger.warning(
            f"a_N={a_N} from series composition differs from N c_N b_M C(0)^(N-1)={printed}"
        )
    if not details["order_matches"]:
        logger.warning(f"order {N} of A - A(0) differs from the order {n_C} of C - C(0)")
    return CaseReport(
        "IIa", lhs=lhs, rhs=rhs, residual=abs(lhs - rhs),
        witness=_witness(B, C), details=details
    )


def case2b_check(B, C):
    """Level coefficient identities for A = B o C when C(0) = 0.

    With N, M the orders of B - B(0) and C at 0, lhs = |a_NM| / (1 - |a|^2)
    is compared with |c_M|^N prod_j |z_j(B)| and with
    prod_j |z_j(C)|^N prod_{j,k} |xi_k(C; z_j(B))|.
    """
    c0 = C.value_at_origin()
    if abs(c0) >= IIB_TOL:
        raise CaseMismatchError(f"C(0)={c0} does not vanish, use case IIa")
    a = B.value_at_origin()
    N, b_N = B.first_nonconstant_index()
    M, c_M = C.first_nonconstant_index()
    order = 2 * B.degree * C.degree
    series = _composed_series(B, C, order)
    NM = first_nonzero_index(series, start=1, tol=SERIES_TOL)
    a_NM = complex(series[NM])
    lhs = abs(a_NM) / (1 - abs(a)**2)
    level_B = B.nonzero_level_points()
    rhs_product = abs(c_M)**N * float(np.prod(np.abs(level_B)))
    rhs_preimage = float(np.prod(np.abs(C.nonzero_level_points())))**N * (
        _preimage_product(C, level_B)
    )
    residual = max(abs(lhs - rhs_product), abs(lhs - rhs_preimage))
    details = dict(
        order=NM, order_B=N, order_C=M, order_matches=(NM == N * M),
        a_NM=complex2pair(a_NM), rhs_preimage=rhs_preimage,
        coefficient_matches=_formulas_agree(a_NM, b_N * c_M**N),
        printed_matches=_formulas_agree(a_NM, b_N * c_M)
    )
    if not details["printed_matches"]:
        logger.info(f"a_NM={a_NM} differs from b_N c_M={b_N * c_M} (b_N c_M^N={b_N * c_M**N})")
    return CaseReport(
        "IIb", lhs=lhs, rhs=rhs_product, residual=residual,
        witness=_witness(B, C), details=details
    )


def theorem1_regression(B, C, grid=None, tol=CERT_TOL):
    "True when the composition B o C is certified indestructible"
    report = certify_indestructible(compose_finite(B, C), grid, tol)
    if report.verdict != "certified":
        logger.error(f"composition not certified: {report.verdict} m1_max={report.m1_max:.2e}")
    return report.verdict == "certified"

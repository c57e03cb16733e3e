import numpy as np
from .base_product import InnerFunction, LogModulus
from .truncated_blaschke import TruncatedBlaschke
from ..base import BOUNDARY_TOL
from ..disk.moebius import MoebiusMap
from ..errors import DomainError, NumericalError
import logging
logger = logging.getLogger(__name__)

# largest degree for which the zeros of a post-composed model are computed
MAX_FINITE_DEGREE = 64


def factor_value(factor, z, tol=None):
    "Value of an inner factor, truncated factors at the level reaching tol"
    if isinstance(factor, TruncatedBlaschke) and tol is not None:
        level = factor.required_level(abs(complex(z)), tol)
        factor = factor.with_level(level)
    return factor(z)


def finite_part(factor, max_degree=MAX_FINITE_DEGREE):
    "FiniteBlaschke equal (or, for truncations, close) to factor, else None"
    if isinstance(factor, TruncatedBlaschke):
        if factor.level > max_degree:
            return None
        return factor.to_finite()
    finite = factor.as_finite()
    if finite is not None and finite.degree > max_degree:
        return None
    return finite


def resolved_finite(model):
    "model.as_finite(), or None when its zeros cannot be resolved numerically"
    try:
        return model.as_finite()
    except (NumericalError, DomainError) as e:
        logger.warning(f"zeros of {type(model).__name__} not resolved, using factor data: {e}")
        return None


class InnerModel(InnerFunction):
    """Composite inner function f(z) = post(prod_k factors[k](z)).

    Parameters
    ----------
    - factors : list of inner functions (FiniteBlaschke, TruncatedBlaschke,
      AtomicSingular or nested models)
    - post : MoebiusMap or None
    """

    def __init__(self, factors, post=None):
        if not factors:
            raise ValueError("an inner model needs at least one factor")
        self.factors = list(factors)
        self.post = post
        self.repr_init(pad="\t")

    def _has_post(self):
        "True when post moves the zeros (a rotation keeps log-moduli)"
        return self.post is not None and abs(self.post.a) > BOUNDARY_TOL

    def product(self, z, tol=None):
        values = [factor_value(factor, z, tol) for factor in self.factors]
        return np.prod(values, axis=0)

    def __call__(self, z):
        value = self.product(z)
        if self.post is not None:
            value = self.post(value)
        return complex(value) if np.ndim(value) == 0 else value

    def log_modulus(self, z, tol=None):
        """log|f(z)| and an error bound.

        Without post-composition the log-moduli of the factors add up and
        each truncated factor gets the share tol / len(factors). With a
        post-composition the value is computed from the product at the
        level reaching tol, the error bound is then only indicative.
        """
        share = None if tol is None else tol / len(self.factors)
        parts = [factor.log_modulus(z, share) for factor in self.factors]
        result = parts[0]
        for part in parts[1:]:
            result = result + part
        if not self._has_post():
            return result
        value = self.post(self.product(z, share))
        if value == 0:
            return LogModulus.zero(level=result.level)
        return LogModulus(
            value=float(np.log(abs(value))), err=result.err or 0., level=result.level
        )

    def as_finite(self):
        parts = [finite_part(factor) for factor in self.factors]
        if any(part is None for part in parts):
            return None
        product = parts[0]
        for part in parts[1:]:
            product = product.multiply(part)
        if self.post is None:
            return product
        if product.degree > MAX_FINITE_DEGREE:
            return None
        return self.post.to_blaschke().compose(product)

    def singular_arguments(self, r, band=0.1):
        if self._has_post():
            finite = resolved_finite(self)
            if finite is not None:
                return finite.singular_arguments(r, band)
        arguments = [
            factor.singular_arguments(r, band) for factor in self.factors
        ]
        return np.unique(np.concatenate(arguments))

    def zero_moduli(self):
        if self._has_post():
            finite = resolved_finite(self)
            if finite is not None:
                return finite.zero_moduli()
        return np.concatenate([factor.zero_moduli() for factor in self.factors])

    def to_dict(self):
        post = None if self.post is None else self.post.to_dict()
        return dict(
            type="inner", factors=[factor.to_dict() for factor in self.factors],
            post=post
        )

    @classmethod
    def from_dict(cls, data):
        from . import product_from_dict
        post = data.get("post")
        return cls(
            factors=[product_from_dict(factor) for factor in data["factors"]],
            post=None if post is None else MoebiusMap.from_dict(post)
        )


class ComposedModel(InnerFunction):
    """Composition outer o inner of two inner functions.

    Parameters
    ----------
    - outer : inner function
    - inner : inner function
    """

    def __init__(self, outer, inner):
        self.outer = outer
        self.inner = inner
        self.repr_init(pad="\t")

    def __call__(self, z):
        return self.outer(self.inner(z))

    def log_modulus(self, z, tol=None):
        w = factor_value(self.inner, z, tol)
        return self.outer.log_modulus(w, tol)

    def as_finite(self):
        outer, inner = finite_part(self.outer), finite_part(self.inner)
        if outer is None or inner is None:
            return None
        if outer.degree * inner.degree > MAX_FINITE_DEGREE:
            return None
        return outer.compose(inner)

    def singular_arguments(self, r, band=0.1):
        finite = resolved_finite(self)
        if finite is not None:
            return finite.singular_arguments(r, band)
        return self.inner.singular_arguments(r, band)

    def zero_moduli(self):
        finite = resolved_finite(self)
        return finite.zero_moduli() if finite is not None else np.zeros(0)

    def to_dict(self):
        return dict(
            type="composed", outer=self.outer.to_dict(), inner=self.inner.to_dict()
        )

    @classmethod
    def from_dict(cls, data):
        from . import product_from_dict
        return cls(
            outer=product_from_dict(data["outer"]),
            inner=product_from_dict(data["inner"])
        )

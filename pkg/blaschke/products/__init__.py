from .base_product import InnerFunction, LogModulus
from .finite_blaschke import (
    FiniteBlaschke, PreimageSet, with_probed_eta, compose_finite,
    frostman_shift, random_finite_blaschke
)
from .truncated_blaschke import (
    TruncatedBlaschke, log_modulus_truncated, evaluate_truncated
)
from .atomic_singular import AtomicSingular
from .inner_model import InnerModel, ComposedModel

PRODUCT_CLASSES = {
    "finite": FiniteBlaschke,
    "sequence": TruncatedBlaschke,
    "atomic": AtomicSingular,
    "inner": InnerModel,
    "composed": ComposedModel
}


def get_product(product_type, **kwargs):
    product = PRODUCT_CLASSES[product_type](**kwargs)
    return product


def product_from_dict(data):
    "Inner function described by its json dict"
    product_type = data.get("type")
    if product_type not in PRODUCT_CLASSES:
        raise ValueError(f"unknown model type {product_type}")
    return PRODUCT_CLASSES[product_type].from_dict(data)

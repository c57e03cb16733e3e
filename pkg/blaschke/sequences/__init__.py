from .base_rule import ZeroSequenceRule
from .explicit_list_rule import ExplicitListRule
from .radial_power_rule import RadialPowerRule
from .geometric_rule import GeometricRule

RULE_CLASSES = {
    "explicit_list": ExplicitListRule,
    "radial_power": RadialPowerRule,
    "geometric": GeometricRule
}


def get_rule(kind, **kwargs):
    rule = RULE_CLASSES[kind](**kwargs)
    return rule


def rule_from_dict(data):
    kind = data["kind"]
    if kind not in RULE_CLASSES:
        raise ValueError(f"unknown zero sequence kind {kind}")
    return RULE_CLASSES[kind].from_dict(data)

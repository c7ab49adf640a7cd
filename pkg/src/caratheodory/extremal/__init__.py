from .lp import (
    ExtremalCertificate,
    ExtremalProblem,
    choose_poles,
    lp_caratheodory_lower,
    lp_metric_field,
)

__all__ = [
    "ExtremalCertificate",
    "ExtremalProblem",
    "choose_poles",
    "lp_caratheodory_lower",
    "lp_metric_field",
]

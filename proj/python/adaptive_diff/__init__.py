"""Adaptive numerical differentiation (AISE / AISE with VRF-ER) bindings."""

from ._core import (
    backward_difference,
    f_cdf,
    f_quantile,
    forgetting_factor,
    rmse,
    run_aise,
    synth_trajectory,
    vrf_constants,
)

__all__ = [
    "backward_difference",
    "f_cdf",
    "f_quantile",
    "forgetting_factor",
    "rmse",
    "run_aise",
    "synth_trajectory",
    "vrf_constants",
]

"""Trigonometric system norms and UMD ideal-norm estimation."""

from umdnorms._core import (
    GridFunction,
    LinearOperator,
    NormedSpace,
    QuadratureGrid,
    TensorSystem,
    TrigSystem,
    VectorTuple,
    brute_force_rho,
    delta_estimate,
    doubling_residual,
    fourier_coefficients,
    gram_deviation,
    l2_norm,
    modulate,
    mu_estimate,
    parse_system,
    rho_estimate,
    system_norm,
    verify,
    vp_apply,
    vp_coefficient,
    vp_l1_norm,
)

__all__ = [
    "GridFunction",
    "LinearOperator",
    "NormedSpace",
    "QuadratureGrid",
    "TensorSystem",
    "TrigSystem",
    "VectorTuple",
    "brute_force_rho",
    "delta_estimate",
    "doubling_residual",
    "fourier_coefficients",
    "gram_deviation",
    "l2_norm",
    "modulate",
    "mu_estimate",
    "parse_system",
    "rho_estimate",
    "system_norm",
    "verify",
    "vp_apply",
    "vp_coefficient",
    "vp_l1_norm",
]

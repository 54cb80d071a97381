"""Exact probability numbers from 1/T_N(1/z), Euler polynomials and Monte Carlo checks."""

from ._core import (
    SCHEMA_VERSION,
    ConvergenceError,
    EvaluationRangeError,
    ParameterError,
    ValidationError,
    asymptotic_ratio,
    catalan_prefix_check,
    cross_validate,
    euler_numbers,
    euler_poly,
    eval_gen_euler,
    f_N,
    gen_euler,
    mc_euler_poly,
    mc_gen_euler,
    mc_klebanov,
    moment_integral_check,
    probnum,
    probnums,
    reconstruct_euler,
    tail_mass,
)

__all__ = [name for name in dir() if not name.startswith("_")]

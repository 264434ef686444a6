"""Generalized k-Bessel functions and the k-gamma family."""

from ._kbessel import (
    EvalResult,
    KBesselError,
    QuadResult,
    deriv_w,
    eval_normalized,
    eval_w,
    eval_w_bessel_kernel,
    eval_w_cos,
    eval_w_cosh,
    k_beta,
    k_digamma,
    k_gamma,
    k_pochhammer,
    k_trigamma,
    known_checks,
    ln_k_gamma,
    verify,
)

__all__ = [
    "EvalResult",
    "KBesselError",
    "QuadResult",
    "deriv_w",
    "eval_normalized",
    "eval_w",
    "eval_w_bessel_kernel",
    "eval_w_cos",
    "eval_w_cosh",
    "k_beta",
    "k_digamma",
    "k_gamma",
    "k_pochhammer",
    "k_trigamma",
    "known_checks",
    "ln_k_gamma",
    "verify",
]

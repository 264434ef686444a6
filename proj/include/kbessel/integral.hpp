#pragma once

// Integral representations of W^k_{ν,c}. They give an evaluation path that
// shares nothing with the power series except the k-gamma normalization:
//
//   W^k_{ν,±α²}(x) = 2/(√(πk) Γ_k(ν+k/2)) (x/2)^{ν/k}
//                    ∫₀¹ (1-t²)^{ν/k-1/2} {cos, cosh}(αxt/√k) dt,   ν/k > -1/2
//
//   W^k_{ν,c}(x)   = 2/(k Γ_k(ν)) (x/2)^{ν/k}
//                    ∫₀¹ t (1-t²)^{ν/k-1} K_c(xt/√k) dt,             ν > 0
//
// with K_c(u) = Σ (-c)^r (u/2)^{2r} / (r!)².

#include "kbessel/quadrature.hpp"
#include "kbessel/series.hpp"

namespace kbessel {

struct IntegralRepParams {
    double k = 1.0;
    double nu = 0.0;
    double alpha = 1.0;
    double x = 1.0;
};

/// ∫₀¹ (1 - t²)^exponent q(t) dt, exponent > -1, q smooth on [0, 1].
QuadResult integrate_weighted(double exponent, const Integrand& q, const QuadConfig& cfg = {});

/// Cosine representation; approximates W^k_{ν,α²}(x).
QuadResult eval_w_cos(const IntegralRepParams& p, const QuadConfig& cfg = {});

/// Hyperbolic-cosine representation; approximates W^k_{ν,-α²}(x).
QuadResult eval_w_cosh(const IntegralRepParams& p, const QuadConfig& cfg = {});

/// Σ (-c)^r (u/2)^{2r} / (r!)²: J₀-type for c > 0, I₀-type for c < 0.
double bessel_kernel(double c, double u);

/// Bessel-kernel representation; approximates W^k_{ν,c}(x). Requires ν > 0.
QuadResult eval_w_bessel_kernel(const KBesselParams& p, double x, const QuadConfig& cfg = {});

/// Outcome of comparing sin/sinh(αx/√k) with the order-k/2 function.
struct RelationCheck {
    double lhs = 0.0;               // sin or sinh(αx/√k)
    double w = 0.0;                 // W^k_{k/2,±α²}(x) from the series
    double alpha_over_k = 0.0;      // α/k
    double residual = 0.0;          // lhs - (α/k) √(πx/2) w
    double fitted_constant = 0.0;   // lhs / (√(πx/2) w)
};

RelationCheck sin_relation_check(double k, double alpha, double x);
RelationCheck sinh_relation_check(double k, double alpha, double x);

}  // namespace kbessel

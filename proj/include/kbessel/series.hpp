#pragma once

// Power-series evaluation of the generalized k-Bessel function
//
//   W^k_{ν,c}(x) = Σ_{r≥0} (-c)^r / (Γ_k(rk + ν + k) r!) (x/2)^{2r + ν/k}
//
// together with its normalized forms and the derivative, recurrence and
// multisection formulas that hold between neighbouring orders.

#include <cstdint>
#include <vector>

namespace kbessel {

struct KBesselParams {
    double k = 1.0;
    double nu = 0.0;
    double c = 1.0;

    /// Throws InvalidParameter unless k > 0 and nu > -k.
    void validate() const;
    KBesselParams with_order(double order) const { return {k, order, c}; }
};

struct SeriesConfig {
    double rel_tol = 1e-14;
    std::uint32_t max_terms = 500;

    void validate() const;
};

struct EvalResult {
    double value = 0.0;
    std::uint32_t terms_used = 0;
    /// Bound on the discarded tail of the series.
    double est_error = 0.0;
};

/// W^k_{ν,c}(x) for x >= 0. At x = 0 the limit is used: 0 for ν > 0,
/// 1/Γ_k(k) = 1 for ν = 0, DomainError for ν < 0.
EvalResult eval_w(const KBesselParams& p, double x, const SeriesConfig& cfg = {});

/// Value and first two x-derivatives obtained by differentiating the series
/// term by term (each term is a power of x).
struct SeriesDerivatives {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
    std::uint32_t terms_used = 0;
};

SeriesDerivatives eval_w_with_derivatives(const KBesselParams& p, double x, const SeriesConfig& cfg = {});

/// (2/x)^{ν/k} Γ_k(ν+k) W^k_{ν,c}(x) = Σ (-c)^r Γ_k(ν+k)/(Γ_k(rk+ν+k) 4^r r!) x^{2r}
/// for any real c. Even in x and equal to 1 at x = 0.
EvalResult eval_normalized_w(const KBesselParams& p, double x, const SeriesConfig& cfg = {});

/// Σ f_r(ν) x^{2r} with f_r(ν) = Γ_k(ν+k) / (Γ_k(rk+ν+k) 4^r r!). Requires
/// p.c == -1. Even in x and equal to 1 at x = 0.
EvalResult eval_normalized_i(const KBesselParams& p, double x, const SeriesConfig& cfg = {});

/// Alternating counterpart with g_r(ν) = (-1)^r f_r(ν). Requires p.c == 1.
EvalResult eval_normalized_j(const KBesselParams& p, double x, const SeriesConfig& cfg = {});

/// One entry of a linear combination over orders.
struct OrderTerm {
    double nu = 0.0;
    double weight = 0.0;
};

/// d^m W / dx^m = (2k)^{-m} Σ_{n=0}^{m} (-1)^n C(m,n) (ck)^n W_{ν-mk+2nk}.
/// Throws InvalidParameter if m == 0 or any order is <= -k.
std::vector<OrderTerm> deriv_coefficients(const KBesselParams& p, std::uint32_t m);

EvalResult deriv_w(const KBesselParams& p, double x, std::uint32_t m, const SeriesConfig& cfg = {});

/// W_{ν+k} = (2ν W_ν / x - W_{ν-k}) / (ck), from 2ν W_ν = x W_{ν-k} + x ck W_{ν+k}.
/// Unstable in the upward direction for c > 0 once the order passes x, so it
/// is meant for residual checks rather than evaluation.
double recurrence_step_up(const KBesselParams& p, double x, double w_lo, double w_mid);

/// Truncated multisection expansion of the order below p.nu:
///   W_{ν-k} = (2/x) Σ_{r<terms} (-ck)^r (ν + 2rk) W_{ν+2rk}.
/// est_error is the magnitude of the first omitted term.
EvalResult multisection_lhs(const KBesselParams& p, double x, std::uint32_t terms, const SeriesConfig& cfg = {});

}  // namespace kbessel

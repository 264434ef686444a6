#include "kbessel/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kbessel/error.hpp"
#include "kbessel/kgamma.hpp"

namespace kbessel {
namespace {

// Partial sums of Σ u_r with u_0 = 1 and u_{r+1}/u_r = q / ((r+1)(rk + ν + k)).
// Every series in this file has that shape after the leading term is
// factored out. Extended precision keeps the cancellation error of the
// alternating case well below the requested tolerance.
struct RatioSum {
    long double sum = 1.0L;
    long double first = 0.0L;   // Σ u_r p_r, p_r = 2r + ν/k
    long double second = 0.0L;  // Σ u_r p_r (p_r - 1)
    std::uint32_t terms = 1;
    long double tail = 0.0L;    // bound on Σ_{r >= terms} |u_r|
};

bool negligible(long double term, long double total, double rel_tol) {
    return term == 0.0L || std::fabs(term) <= rel_tol * std::fabs(total);
}

RatioSum sum_ratio_series(long double q, double k, double nu, const SeriesConfig& cfg, bool derivatives) {
    RatioSum out;
    const long double order_shift = static_cast<long double>(nu) / k;
    out.first = order_shift;
    out.second = order_shift * (order_shift - 1.0L);
    if (q == 0.0L) {
        return out;
    }
    auto ratio = [&](std::uint32_t r) {
        return q / ((static_cast<long double>(r) + 1.0L) * (static_cast<long double>(r) * k + nu + k));
    };

    long double u = 1.0L;
    int small_run = 0;
    while (out.terms < cfg.max_terms) {
        const std::uint32_t r = out.terms;  // index of the term being added
        u *= ratio(r - 1);
        out.sum += u;
        bool small = negligible(u, out.sum, cfg.rel_tol);
        if (derivatives) {
            const long double p = 2.0L * r + order_shift;
            out.first += u * p;
            out.second += u * p * (p - 1.0L);
            small = small && negligible(u * p, out.first, cfg.rel_tol) &&
                    negligible(u * p * (p - 1.0L), out.second, cfg.rel_tol);
        }
        ++out.terms;
        // Terms only shrink from here on once the next ratio is below one.
        small_run = (small && std::fabs(ratio(r)) < 1.0L) ? small_run + 1 : 0;
        if (small_run == 2) {
            const long double omitted = std::fabs(u * ratio(r));
            if (q < 0.0L) {
                out.tail = omitted;  // alternating with decreasing terms
            } else {
                out.tail = omitted / (1.0L - std::fabs(ratio(r + 1)));
            }
            return out;
        }
    }
    fail(ErrorKind::NonConvergence,
         "series did not reach rel_tol within " + std::to_string(cfg.max_terms) + " terms");
}

double to_double_checked(long double v, const char* what) {
    const double d = static_cast<double>(v);
    if (!std::isfinite(d)) {
        fail(ErrorKind::Overflow, std::string(what) + ": value exceeds double range");
    }
    return d;
}

void require_x(double x, bool allow_negative) {
    if (!std::isfinite(x) || (!allow_negative && x < 0.0)) {
        fail(ErrorKind::DomainError, "x must be finite" + std::string(allow_negative ? "" : " and >= 0") +
                                         ", got " + std::to_string(x));
    }
}

EvalResult normalized(const KBesselParams& p, double x, const SeriesConfig& cfg, const char* name) {
    p.validate();
    cfg.validate();
    require_x(x, true);
    const long double q = -static_cast<long double>(p.c) * x * x / 4.0L;
    const RatioSum s = sum_ratio_series(q, p.k, p.nu, cfg, false);
    return {to_double_checked(s.sum, name), s.terms, static_cast<double>(s.tail)};
}

double binomial(std::uint32_t m, std::uint32_t n) {
    double b = 1.0;
    for (std::uint32_t i = 1; i <= n; ++i) {
        b = b * static_cast<double>(m - n + i) / static_cast<double>(i);
    }
    return b;
}

}  // namespace

void KBesselParams::validate() const {
    require_valid_k(k);
    if (!std::isfinite(nu) || !(nu > -k)) {
        fail(ErrorKind::InvalidParameter, "nu must exceed -k (nu = " + std::to_string(nu) +
                                              ", k = " + std::to_string(k) + ")");
    }
    if (!std::isfinite(c)) {
        fail(ErrorKind::InvalidParameter, "c must be finite");
    }
}

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0)) {
        fail(ErrorKind::InvalidParameter, "rel_tol must be > 0");
    }
    if (max_terms < 1) {
        fail(ErrorKind::InvalidParameter, "max_terms must be >= 1");
    }
}

EvalResult eval_w(const KBesselParams& p, double x, const SeriesConfig& cfg) {
    p.validate();
    cfg.validate();
    require_x(x, false);
    if (x == 0.0) {
        if (p.nu > 0.0) return {0.0, 1, 0.0};
        if (p.nu == 0.0) return {1.0, 1, 0.0};  // 1 / Γ_k(k)
        fail(ErrorKind::DomainError, "x = 0 requires nu >= 0");
    }
    const long double half = static_cast<long double>(x) / 2.0L;
    const long double log_lead =
        static_cast<long double>(p.nu) / p.k * std::log(half) - ln_k_gamma(p.nu + p.k, p.k);
    const RatioSum s = sum_ratio_series(-static_cast<long double>(p.c) * half * half, p.k, p.nu, cfg, false);
    const long double lead = std::exp(log_lead);
    return {to_double_checked(lead * s.sum, "eval_w"), s.terms, static_cast<double>(lead * s.tail)};
}

SeriesDerivatives eval_w_with_derivatives(const KBesselParams& p, double x, const SeriesConfig& cfg) {
    p.validate();
    cfg.validate();
    require_x(x, false);
    if (x == 0.0) {
        fail(ErrorKind::DomainError, "term-wise derivatives require x > 0");
    }
    const long double half = static_cast<long double>(x) / 2.0L;
    const long double log_lead =
        static_cast<long double>(p.nu) / p.k * std::log(half) - ln_k_gamma(p.nu + p.k, p.k);
    const RatioSum s = sum_ratio_series(-static_cast<long double>(p.c) * half * half, p.k, p.nu, cfg, true);
    const long double lead = std::exp(log_lead);
    const long double xl = x;
    SeriesDerivatives d;
    d.value = to_double_checked(lead * s.sum, "eval_w_with_derivatives");
    d.first = to_double_checked(lead * s.first / xl, "eval_w_with_derivatives");
    d.second = to_double_checked(lead * s.second / (xl * xl), "eval_w_with_derivatives");
    d.terms_used = s.terms;
    return d;
}

EvalResult eval_normalized_w(const KBesselParams& p, double x, const SeriesConfig& cfg) {
    return normalized(p, x, cfg, "eval_normalized_w");
}

EvalResult eval_normalized_i(const KBesselParams& p, double x, const SeriesConfig& cfg) {
    if (p.c != -1.0) {
        fail(ErrorKind::InvalidParameter, "eval_normalized_i requires c = -1");
    }
    return normalized(p, x, cfg, "eval_normalized_i");
}

EvalResult eval_normalized_j(const KBesselParams& p, double x, const SeriesConfig& cfg) {
    if (p.c != 1.0) {
        fail(ErrorKind::InvalidParameter, "eval_normalized_j requires c = 1");
    }
    return normalized(p, x, cfg, "eval_normalized_j");
}

std::vector<OrderTerm> deriv_coefficients(const KBesselParams& p, std::uint32_t m) {
    p.validate();
    if (m == 0) {
        fail(ErrorKind::InvalidParameter, "derivative order m must be >= 1");
    }
    const double lowest = p.nu - static_cast<double>(m) * p.k;
    if (!(lowest > -p.k)) {
        fail(ErrorKind::InvalidParameter, "derivative of order " + std::to_string(m) +
                                              " needs nu - m k > -k (lowest order " + std::to_string(lowest) + ")");
    }
    std::vector<OrderTerm> terms;
    terms.reserve(m + 1);
    const double scale = std::pow(2.0 * p.k, static_cast<double>(m));
    for (std::uint32_t n = 0; n <= m; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const double shift = 2.0 * static_cast<double>(n) - static_cast<double>(m);
        terms.push_back({p.nu + shift * p.k,
                         sign * binomial(m, n) * std::pow(p.c * p.k, static_cast<double>(n)) / scale});
    }
    return terms;
}

EvalResult deriv_w(const KBesselParams& p, double x, std::uint32_t m, const SeriesConfig& cfg) {
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "deriv_w requires x > 0");
    }
    EvalResult out;
    long double total = 0.0L;
    for (const OrderTerm& t : deriv_coefficients(p, m)) {
        const EvalResult w = eval_w(p.with_order(t.nu), x, cfg);
        total += static_cast<long double>(t.weight) * w.value;
        out.terms_used = std::max(out.terms_used, w.terms_used);
        out.est_error += std::fabs(t.weight) * w.est_error;
    }
    out.value = static_cast<double>(total);
    return out;
}

double recurrence_step_up(const KBesselParams& p, double x, double w_lo, double w_mid) {
    p.validate();
    if (p.c == 0.0) {
        fail(ErrorKind::InvalidParameter, "recurrence_step_up requires c != 0");
    }
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "recurrence_step_up requires x > 0");
    }
    if (!(p.nu > 0.0)) {
        fail(ErrorKind::InvalidParameter, "recurrence_step_up requires nu > 0");
    }
    return (2.0 * p.nu * w_mid / x - w_lo) / (p.c * p.k);
}

EvalResult multisection_lhs(const KBesselParams& p, double x, std::uint32_t terms, const SeriesConfig& cfg) {
    p.validate();
    if (!(x > 0.0)) {
        fail(ErrorKind::DomainError, "multisection_lhs requires x > 0");
    }
    if (terms == 0) {
        fail(ErrorKind::InvalidParameter, "multisection_lhs requires terms >= 1");
    }
    const double step = -p.c * p.k;
    auto term = [&](std::uint32_t r, std::uint32_t& used) {
        const double order = p.nu + 2.0 * r * p.k;
        const EvalResult w = eval_w(p.with_order(order), x, cfg);
        used = std::max(used, w.terms_used);
        return std::pow(step, static_cast<double>(r)) * order * w.value;
    };
    EvalResult out;
    long double total = 0.0L;
    double last = 0.0;
    for (std::uint32_t r = 0; r < terms; ++r) {
        last = term(r, out.terms_used);
        total += last;
    }
    std::uint32_t ignored = 0;
    const double omitted = term(terms, ignored);
    if (std::fabs(omitted) > std::fabs(last) && omitted != 0.0) {
        fail(ErrorKind::NonConvergence, "multisection terms are not decreasing at the truncation point");
    }
    out.value = static_cast<double>(2.0L / x * total);
    out.est_error = 2.0 / x * std::fabs(omitted);
    return out;
}

}  // namespace kbessel

#include "kbessel/integral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kbessel/error.hpp"
#include "kbessel/kgamma.hpp"

namespace kbessel {
namespace {

void validate_rep(const IntegralRepParams& p) {
    require_valid_k(p.k);
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
        fail(ErrorKind::InvalidParameter, "alpha must be > 0");
    }
    if (!(p.x > 0.0) || !std::isfinite(p.x)) {
        fail(ErrorKind::DomainError, "x must be > 0");
    }
    if (!(p.nu / p.k > -0.5)) {
        fail(ErrorKind::InvalidParameter, "cos/cosh representation needs nu/k > -1/2");
    }
}

QuadResult trig_representation(const IntegralRepParams& p, const QuadConfig& cfg, bool hyperbolic) {
    validate_rep(p);
    const double scale = p.alpha * p.x / std::sqrt(p.k);
    Integrand kernel = hyperbolic ? Integrand([scale](double t) { return std::cosh(scale * t); })
                                  : Integrand([scale](double t) { return std::cos(scale * t); });
    QuadResult q = integrate_weighted(p.nu / p.k - 0.5, kernel, cfg);
    const double log_prefactor = std::log(2.0) - 0.5 * std::log(std::numbers::pi * p.k) -
                                 ln_k_gamma(p.nu + p.k / 2.0, p.k) + p.nu / p.k * std::log(p.x / 2.0);
    const double factor = std::exp(log_prefactor);
    q.value *= factor;
    q.doubling_delta *= factor;
    return q;
}

RelationCheck relation(double k, double alpha, double x, bool hyperbolic) {
    require_valid_k(k);
    if (!(alpha > 0.0) || !(x > 0.0)) {
        fail(ErrorKind::InvalidParameter, "relation check needs alpha > 0 and x > 0");
    }
    const double arg = alpha * x / std::sqrt(k);
    const double c = hyperbolic ? -alpha * alpha : alpha * alpha;
    RelationCheck out;
    out.lhs = hyperbolic ? std::sinh(arg) : std::sin(arg);
    out.w = eval_w({k, k / 2.0, c}, x).value;
    out.alpha_over_k = alpha / k;
    const double root = std::sqrt(std::numbers::pi * x / 2.0);
    out.residual = out.lhs - out.alpha_over_k * root * out.w;
    out.fitted_constant = out.lhs / (root * out.w);
    return out;
}

}  // namespace

QuadResult integrate_weighted(double exponent, const Integrand& q, const QuadConfig& cfg) {
    // (1 - t²)^a = (1 - t)^a (1 + t)^a; the second factor is smooth on [0, 1].
    return integrate_endpoint_weight([&](double t) { return std::pow(1.0 + t, exponent) * q(t); }, exponent, cfg);
}

QuadResult eval_w_cos(const IntegralRepParams& p, const QuadConfig& cfg) {
    return trig_representation(p, cfg, false);
}

QuadResult eval_w_cosh(const IntegralRepParams& p, const QuadConfig& cfg) {
    return trig_representation(p, cfg, true);
}

double bessel_kernel(double c, double u) {
    const double q = -c * (u / 2.0) * (u / 2.0);
    double term = 1.0;
    double sum = 1.0;
    for (int r = 1; r < 1000; ++r) {
        term *= q / (static_cast<double>(r) * r);
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum) && std::fabs(q) < (r + 1.0) * (r + 1.0)) {
            return sum;
        }
    }
    fail(ErrorKind::NonConvergence, "bessel_kernel series did not converge");
}

QuadResult eval_w_bessel_kernel(const KBesselParams& p, double x, const QuadConfig& cfg) {
    p.validate();
    if (!(p.nu > 0.0)) {
        fail(ErrorKind::InvalidParameter, "Bessel-kernel representation needs nu > 0");
    }
    if (!(x > 0.0) || !std::isfinite(x)) {
        fail(ErrorKind::DomainError, "x must be > 0");
    }
    const double scale = x / std::sqrt(p.k);
    const double c = p.c;
    QuadResult q = integrate_weighted(
        p.nu / p.k - 1.0, [scale, c](double t) { return t * bessel_kernel(c, scale * t); }, cfg);
    const double log_prefactor =
        std::log(2.0) - std::log(p.k) - ln_k_gamma(p.nu, p.k) + p.nu / p.k * std::log(x / 2.0);
    const double factor = std::exp(log_prefactor);
    q.value *= factor;
    q.doubling_delta *= factor;
    return q;
}

RelationCheck sin_relation_check(double k, double alpha, double x) {
    return relation(k, alpha, x, false);
}

RelationCheck sinh_relation_check(double k, double alpha, double x) {
    return relation(k, alpha, x, true);
}

}  // namespace kbessel

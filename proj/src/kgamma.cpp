#include "kbessel/kgamma.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "kbessel/classical.hpp"
#include "kbessel/error.hpp"

namespace kbessel {
namespace {

void require_positive_arg(double t, const char* fn) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        fail(ErrorKind::DomainError, std::string(fn) + ": argument must be > 0, got " + std::to_string(t));
    }
}

double checked_exp(double log_value, const char* fn) {
    if (log_value > std::log(std::numeric_limits<double>::max())) {
        fail(ErrorKind::Overflow, std::string(fn) + ": result exceeds double range; use the log form");
    }
    return std::exp(log_value);
}

}  // namespace

void require_valid_k(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        fail(ErrorKind::InvalidParameter, "k must be finite and > 0, got " + std::to_string(k));
    }
}

double k_pochhammer(double x, std::uint32_t n, double k) {
    require_valid_k(k);
    double product = 1.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        product *= x + static_cast<double>(i) * k;
    }
    return product;
}

double ln_k_gamma(double t, double k) {
    require_valid_k(k);
    require_positive_arg(t, "ln_k_gamma");
    const double scaled = t / k;
    return (scaled - 1.0) * std::log(k) + log_gamma(scaled);
}

double k_gamma(double t, double k) {
    require_valid_k(k);
    if (t == 0.0 || !(t > -k) || !std::isfinite(t)) {
        fail(ErrorKind::DomainError, "k_gamma: argument must lie in (-k, 0) or (0, inf), got " + std::to_string(t));
    }
    if (t > 0.0) {
        return checked_exp(ln_k_gamma(t, k), "k_gamma");
    }
    const double shifted = checked_exp(ln_k_gamma(t + k, k), "k_gamma");
    const double value = shifted / t;
    if (!std::isfinite(value)) {
        fail(ErrorKind::Overflow, "k_gamma: result exceeds double range near t = 0");
    }
    return value;
}

double k_digamma(double t, double k) {
    require_valid_k(k);
    require_positive_arg(t, "k_digamma");
    return (std::log(k) + digamma(t / k)) / k;
}

double k_trigamma(double t, double k) {
    require_valid_k(k);
    require_positive_arg(t, "k_trigamma");
    return trigamma(t / k) / (k * k);
}

double k_beta(double x, double y, double k) {
    require_valid_k(k);
    require_positive_arg(x, "k_beta");
    require_positive_arg(y, "k_beta");
    const double log_beta = ln_k_gamma(x, k) + ln_k_gamma(y, k) - ln_k_gamma(x + y, k);
    return checked_exp(log_beta, "k_beta");
}

}  // namespace kbessel

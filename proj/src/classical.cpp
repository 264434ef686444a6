#include "kbessel/classical.hpp"

#include <array>
#include <cmath>

#include "kbessel/error.hpp"

namespace kbessel {
namespace {

constexpr double kAsymptoticStart = 12.0;

// B_{2n} for n = 1..8.
constexpr std::array<long double, 8> kBernoulli = {
    1.0L / 6.0L,  -1.0L / 30.0L,     1.0L / 42.0L, -1.0L / 30.0L,
    5.0L / 66.0L, -691.0L / 2730.0L, 7.0L / 6.0L,  -3617.0L / 510.0L,
};

constexpr long double kHalfLogTwoPi = 0.918938533204672741780329736405617639861L;

void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        fail(ErrorKind::DomainError, std::string(name) + " requires a finite argument > 0");
    }
}

long double log_gamma_asymptotic(long double x) {
    const long double inv = 1.0L / x;
    const long double inv2 = inv * inv;
    long double correction = 0.0L;
    long double power = inv;
    for (std::size_t n = 1; n <= kBernoulli.size(); ++n) {
        const long double two_n = 2.0L * n;
        correction += kBernoulli[n - 1] / (two_n * (two_n - 1.0L)) * power;
        power *= inv2;
    }
    return (x - 0.5L) * std::log(x) - x + kHalfLogTwoPi + correction;
}

}  // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    if (x == 1.0 || x == 2.0) {
        return 0.0;
    }
    if (x >= kAsymptoticStart) {
        return static_cast<double>(log_gamma_asymptotic(x));
    }
    // ln Γ(x) = ln Γ(x + n) - ln(x (x+1) ... (x+n-1))
    long double product = 1.0L;
    long double shifted = x;
    while (shifted < kAsymptoticStart) {
        product *= shifted;
        shifted += 1.0L;
    }
    return static_cast<double>(log_gamma_asymptotic(shifted) - std::log(product));
}

double digamma(double x_in) {
    require_positive(x_in, "digamma");
    long double x = x_in;
    long double shift_sum = 0.0L;
    while (x < kAsymptoticStart) {
        shift_sum += 1.0L / x;
        x += 1.0L;
    }
    const long double inv = 1.0L / x;
    const long double inv2 = inv * inv;
    long double series = 0.0L;
    long double power = inv2;
    for (std::size_t n = 1; n <= kBernoulli.size(); ++n) {
        series += kBernoulli[n - 1] / (2.0L * n) * power;
        power *= inv2;
    }
    return static_cast<double>(std::log(x) - 0.5L * inv - series - shift_sum);
}

double trigamma(double x_in) {
    require_positive(x_in, "trigamma");
    long double x = x_in;
    long double shift_sum = 0.0L;
    while (x < kAsymptoticStart) {
        shift_sum += 1.0L / (x * x);
        x += 1.0L;
    }
    const long double inv = 1.0L / x;
    const long double inv2 = inv * inv;
    long double series = 0.0L;
    long double power = inv2 * inv;
    for (long double b : kBernoulli) {
        series += b * power;
        power *= inv2;
    }
    return static_cast<double>(inv + 0.5L * inv2 + series + shift_sum);
}

}  // namespace kbessel

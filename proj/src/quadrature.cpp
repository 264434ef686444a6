#include "kbessel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "kbessel/error.hpp"

namespace kbessel {
namespace {

constexpr double kGrading = 0.15;

GaussLegendreRule compute_rule(std::uint32_t n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::uint32_t half = (n + 1) / 2;
    for (std::uint32_t i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = z;
            for (std::uint32_t j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double step = p1 / dp;
            z -= step;
            if (std::fabs(step) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

struct Panel {
    double lo;
    double hi;
};

// Returns Σ f w and Σ |f w| over the panels.
std::pair<double, double> panel_sum(const Integrand& f, const std::vector<Panel>& panels, std::uint32_t n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    long double total = 0.0L;
    long double magnitude = 0.0L;
    for (const Panel& p : panels) {
        const double mid = 0.5 * (p.lo + p.hi);
        const double half = 0.5 * (p.hi - p.lo);
        long double local = 0.0L;
        long double local_abs = 0.0L;
        for (std::uint32_t i = 0; i < n; ++i) {
            const double v = rule.weights[i] * f(mid + half * rule.nodes[i]);
            local += v;
            local_abs += std::fabs(v);
        }
        total += local * half;
        magnitude += local_abs * half;
    }
    return {static_cast<double>(total), static_cast<double>(magnitude)};
}

QuadResult refine(const std::function<std::pair<double, double>(std::uint32_t)>& estimate, const QuadConfig& cfg) {
    cfg.validate();
    std::uint32_t n = cfg.nodes;
    auto [previous, magnitude] = estimate(n);
    for (std::uint32_t level = 0; level < cfg.max_refinements; ++level) {
        const std::uint32_t next = 2 * n;
        auto [current, current_mag] = estimate(next);
        const double delta = std::fabs(current - previous);
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(magnitude, current_mag);
        if (!std::isfinite(current)) {
            fail(ErrorKind::QuadratureFailure, "integrand produced a non-finite value");
        }
        if (delta <= std::max(cfg.abs_tol, floor)) {
            return {current, next, delta};
        }
        previous = current;
        magnitude = current_mag;
        n = next;
    }
    fail(ErrorKind::QuadratureFailure,
         "node doubling did not converge within " + std::to_string(cfg.max_refinements) + " refinements");
}

}  // namespace

void QuadConfig::validate() const {
    if (nodes < 2) {
        fail(ErrorKind::InvalidParameter, "quadrature needs at least 2 nodes");
    }
    if (!(abs_tol > 0.0)) {
        fail(ErrorKind::InvalidParameter, "abs_tol must be > 0");
    }
}

const GaussLegendreRule& gauss_legendre(std::uint32_t n) {
    if (n < 1) {
        fail(ErrorKind::InvalidParameter, "Gauss-Legendre rule needs n >= 1");
    }
    static std::mutex mutex;
    static std::map<std::uint32_t, std::unique_ptr<const GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<const GaussLegendreRule>(compute_rule(n));
    }
    return *slot;
}

double gauss_legendre_fixed(const Integrand& f, double a, double b, std::uint32_t n) {
    return panel_sum(f, {{a, b}}, n).first;
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    const std::vector<Panel> panels = {{a, b}};
    return refine([&](std::uint32_t n) { return panel_sum(f, panels, n); }, cfg);
}

QuadResult integrate_endpoint_weight(const Integrand& g, double exponent, const QuadConfig& cfg) {
    if (!(exponent > -1.0) || !std::isfinite(exponent)) {
        fail(ErrorKind::InvalidParameter, "endpoint exponent must be > -1");
    }
    // Work in u = 1 - t: ∫₀¹ u^a g(1 - u) du. Innermost sliver [0, ε] is
    // replaced by g(1) ε^{a+1}/(a+1); its error is O(ε^{a+2}).
    const double sliver = std::pow(10.0, -18.0 / (exponent + 2.0));
    std::vector<Panel> panels;
    double hi = 1.0;
    while (hi > sliver) {
        const double lo = std::max(hi * kGrading, sliver);
        panels.push_back({lo, hi});
        hi = lo;
    }
    const double sliver_part = g(1.0) * std::pow(sliver, exponent + 1.0) / (exponent + 1.0);
    auto weighted = [&](double u) { return std::pow(u, exponent) * g(1.0 - u); };
    return refine(
        [&](std::uint32_t n) {
            auto [v, mag] = panel_sum(weighted, panels, n);
            return std::pair{v + sliver_part, mag + std::fabs(sliver_part)};
        },
        cfg);
}

}  // namespace kbessel

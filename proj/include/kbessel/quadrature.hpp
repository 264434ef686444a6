#pragma once

// Gauss–Legendre quadrature with node-doubling refinement, plus a graded
// panel scheme for integrands carrying an algebraic endpoint factor
// (1 - t)^a, a > -1.

#include <cstdint>
#include <functional>
#include <vector>

namespace kbessel {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// n-point rule. Rules are computed once per n and cached; the returned
/// reference stays valid for the lifetime of the program.
const GaussLegendreRule& gauss_legendre(std::uint32_t n);

struct QuadConfig {
    std::uint32_t nodes = 128;
    double abs_tol = 1e-12;
    std::uint32_t max_refinements = 8;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    std::uint32_t nodes = 0;       // per-panel node count of the accepted estimate
    double doubling_delta = 0.0;   // |I(2n) - I(n)| at acceptance
};

using Integrand = std::function<double(double)>;

/// Plain n-point rule on [a, b].
double gauss_legendre_fixed(const Integrand& f, double a, double b, std::uint32_t n);

/// ∫_a^b f, doubling the node count until successive estimates agree to
/// abs_tol (or to the rounding level of ∫|f|, whichever is larger).
QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg = {});

/// ∫₀¹ (1 - t)^exponent g(t) dt for exponent > -1 and g smooth on [0, 1].
/// Panels shrink geometrically toward t = 1 so the factor is analytic on
/// each panel; the innermost sliver uses its leading-order closed form.
QuadResult integrate_endpoint_weight(const Integrand& g, double exponent, const QuadConfig& cfg = {});

}  // namespace kbessel

#pragma once

// Grid-driven numerical certification of the identities and inequalities
// satisfied by W^k_{ν,c} and its normalized forms.
//
// Conventions: identities report a non-negative residual and pass when
// residual <= tolerance; inequalities report margin = (larger side) -
// (smaller side) and pass when margin >= -tolerance; probes only record
// what they measured and pass unless evaluation itself fails.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbessel/series.hpp"

namespace kbessel {

enum class CheckKind { Identity, Inequality, Probe };
enum class Status { Pass, Fail, Skip };

std::string_view to_string(CheckKind kind) noexcept;
std::string_view to_string(Status status) noexcept;

struct NamedValue {
    std::string name;
    double value = 0.0;
};

struct VerifyReport {
    std::string check_name;
    std::vector<NamedValue> grid_point;
    CheckKind kind = CheckKind::Identity;
    Status status = Status::Skip;
    double value = 0.0;      // residual or margin
    double tolerance = 0.0;  // absolute threshold applied to value
    std::string notes;
    std::vector<NamedValue> details;

    bool passed() const { return status == Status::Pass; }
    bool skipped() const { return status == Status::Skip; }
};

/// Order specification ν = k_coef·k + offset, so grid points such as
/// -k/2 + 0.1 can be written once for every k.
struct NuValue {
    double k_coef = 0.0;
    double offset = 0.0;

    double at(double k) const { return k_coef * k + offset; }
    static NuValue absolute(double nu) { return {0.0, nu}; }
    static NuValue relative(double ratio) { return {ratio, 0.0}; }
};

struct GridSpec {
    std::vector<double> k_values;
    std::vector<NuValue> nu_values;
    std::vector<double> c_values;
    std::vector<double> alpha_values;
    std::vector<double> x_values;
    std::vector<double> x_path;     // strictly increasing, for x-monotonicity
    std::vector<double> a_values;   // Turán shifts
    std::vector<double> alpha_cvx;  // log-convexity weights in [0, 1]

    /// Throws InvalidParameter if a list is empty or a value is out of range.
    void validate() const;
    static GridSpec default_grid();
};

// Tolerances.
inline constexpr double kIdentityRelTol = 1e-10;
inline constexpr double kOdeRelTol = 1e-8;
inline constexpr double kInequalityRelTol = 1e-12;
inline constexpr double kFiniteDifferenceTol = 1e-6;
inline constexpr double kMultisectionTol = 1e-8;
inline constexpr double kHigherDerivativeTol = 1e-5;
inline constexpr double kIntegralRelTol = 1e-9;
inline constexpr double kStepUpRelTol = 1e-8;
inline constexpr double kTuranGuard = 1e-9;
inline constexpr std::uint32_t kCoefficientTerms = 30;
inline constexpr std::uint32_t kMultisectionTerms = 40;

// Differential equation and neighbouring-order identities.
VerifyReport check_ode(const KBesselParams& p, double x);
VerifyReport check_rr1(const KBesselParams& p, double x);
VerifyReport check_rr2(const KBesselParams& p, double x);
VerifyReport check_rr3(const KBesselParams& p, double x);
VerifyReport check_rr4(const KBesselParams& p, double x);
VerifyReport check_rr5(const KBesselParams& p, double x);
VerifyReport check_rr6(const KBesselParams& p, double x);
VerifyReport check_rr7(const KBesselParams& p, double x);
VerifyReport check_rr8(const KBesselParams& p, double x, std::uint32_t m);

// Series against the integral representations.
enum class IntegralPath { Cos, Cosh, BesselKernel };
VerifyReport check_integral(IntegralPath path, double k, double nu, double c_or_alpha, double x);

// Monotonicity, log-convexity and Turán-type statements for the normalized
// modified function Σ f_r(ν) x^{2r}.
VerifyReport check_ratio_x_monotone(double k, double mu, double nu, std::span<const double> x_grid);
VerifyReport check_order_ratio_monotone(double k, double mu, double nu, double x);
VerifyReport check_nu_decreasing_logconvex(double k, double nu1, double nu2, double alpha_cvx, double x);
VerifyReport check_turan(double k, double nu, double a, double x);

/// Coefficient facts behind the monotonicity statements, for r <= 30:
/// w_{r+1}/w_r <= 1, f_r'/f_r <= 0, (log f_r)'' >= 0.
VerifyReport check_coefficients(double k, double mu, double nu);

enum class ChebyshevVariant { Cos, Cosh };

/// Chebyshev integral inequality for q = cos or cosh(xt/√k),
/// f = (1-t²)^{ν/k-1/2}, g = (1-t²)^{ν/k+1/2}: (∫qf)(∫qg) <= (∫q)(∫qfg)
/// for ν >= k/2 and reversed for ν in (-k/2, k/2).
VerifyReport check_chebyshev_products(double k, double nu, double x, ChebyshevVariant variant);

/// Evaluates the closed-form product inequalities (both the ν+k/2 and ν+k
/// subscripts) and records whether each agrees with the integral-level regime.
VerifyReport probe_chebyshev_closed_form(double k, double nu, double x, ChebyshevVariant variant);

/// sin/sinh(αx/√k) against (α/k)√(πx/2) W^k_{k/2,±α²}(x), with the fitted constant.
VerifyReport probe_sin_relation(double k, double alpha, double x, bool hyperbolic);

/// Names accepted by run_grid, in canonical order.
const std::vector<std::string>& known_checks();

/// Runs each named check at every grid point it applies to. Output order is
/// the order of `checks`, then lexicographic in the (sorted) grid tuple,
/// independent of `threads`. Throws InvalidParameter on an unknown name.
std::vector<VerifyReport> run_grid(const GridSpec& spec, const std::vector<std::string>& checks,
                                   unsigned threads = 0);

}  // namespace kbessel

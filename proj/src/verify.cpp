#include "kbessel/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>

#include "kbessel/error.hpp"
#include "kbessel/integral.hpp"
#include "kbessel/kgamma.hpp"

namespace kbessel {
namespace {

double w_value(double k, double nu, double c, double x) { return eval_w({k, nu, c}, x).value; }

double normalized_i(double k, double nu, double x) { return eval_normalized_i({k, nu, -1.0}, x).value; }

double max_abs(std::initializer_list<double> values) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

VerifyReport make_report(std::string name, std::vector<NamedValue> point, CheckKind kind) {
    VerifyReport r;
    r.check_name = std::move(name);
    r.grid_point = std::move(point);
    r.kind = kind;
    return r;
}

VerifyReport skipped(VerifyReport r, std::string reason) {
    r.status = Status::Skip;
    r.notes = std::move(reason);
    return r;
}

void finish_identity(VerifyReport& r, double residual, double tolerance) {
    r.value = residual;
    r.tolerance = tolerance;
    r.status = (residual <= tolerance) ? Status::Pass : Status::Fail;
}

void finish_inequality(VerifyReport& r, double margin, double tolerance) {
    r.value = margin;
    r.tolerance = tolerance;
    r.status = (margin >= -tolerance) ? Status::Pass : Status::Fail;
}

// Runs `body` and turns any library error into a failed report.
template <class Body>
VerifyReport guarded(VerifyReport base, Body&& body) {
    try {
        body(base);
    } catch (const Error& e) {
        base.status = Status::Fail;
        base.notes = std::string(to_string(e.kind())) + ": " + e.what();
    }
    return base;
}

std::vector<NamedValue> point_of(const KBesselParams& p, double x) {
    return {{"k", p.k}, {"nu", p.nu}, {"c", p.c}, {"x", x}};
}

// Eighth-order central differences.
constexpr double kFirstStencil[] = {1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5, 0.0, 4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
constexpr double kSecondStencil[] = {-1.0 / 560, 8.0 / 315, -1.0 / 5,  8.0 / 5,    -205.0 / 72,
                                     8.0 / 5,    -1.0 / 5,  8.0 / 315, -1.0 / 560};

double apply_stencil(const double (&weights)[9], const std::function<double(double)>& f, double x, double h) {
    long double sum = 0.0L;
    for (int i = 0; i < 9; ++i) {
        if (weights[i] != 0.0) sum += static_cast<long double>(weights[i]) * f(x + (i - 4) * h);
    }
    return static_cast<double>(sum);
}

double first_difference(const std::function<double(double)>& f, double x, double h) {
    return apply_stencil(kFirstStencil, f, x, h) / h;
}

double second_difference(const std::function<double(double)>& f, double x, double h) {
    return apply_stencil(kSecondStencil, f, x, h) / (h * h);
}

double difference_step(double x) { return 1e-2 * std::min(1.0, x); }

bool valid_order(double k, double nu) { return std::isfinite(nu) && nu > -k; }

// Scale used by the neighbouring-order identities.
double neighbour_scale(const KBesselParams& p, double x, bool has_lower) {
    const double lower = has_lower ? w_value(p.k, p.nu - p.k, p.c, x) : 0.0;
    return std::max(1.0, max_abs({lower, w_value(p.k, p.nu, p.c, x), w_value(p.k, p.nu + p.k, p.c, x)}));
}

}  // namespace

std::string_view to_string(CheckKind kind) noexcept {
    switch (kind) {
        case CheckKind::Identity: return "identity";
        case CheckKind::Inequality: return "inequality";
        case CheckKind::Probe: return "probe";
    }
    return "unknown";
}

std::string_view to_string(Status status) noexcept {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "unknown";
}

void GridSpec::validate() const {
    auto require_non_empty = [](const auto& v, const char* name) {
        if (v.empty()) fail(ErrorKind::InvalidParameter, std::string("grid list '") + name + "' is empty");
    };
    require_non_empty(k_values, "k");
    require_non_empty(nu_values, "nu");
    require_non_empty(c_values, "c");
    require_non_empty(alpha_values, "alpha");
    require_non_empty(x_values, "x");
    require_non_empty(x_path, "x_path");
    require_non_empty(a_values, "a");
    require_non_empty(alpha_cvx, "alpha_cvx");
    for (double k : k_values) require_valid_k(k);
    for (double x : x_values) {
        if (!(x > 0.0) || !std::isfinite(x)) fail(ErrorKind::InvalidParameter, "grid x values must be > 0");
    }
    for (std::size_t i = 0; i < x_path.size(); ++i) {
        if (!(x_path[i] > 0.0) || (i > 0 && !(x_path[i] > x_path[i - 1]))) {
            fail(ErrorKind::InvalidParameter, "x_path must be positive and strictly increasing");
        }
    }
    for (double a : alpha_values) {
        if (!(a > 0.0)) fail(ErrorKind::InvalidParameter, "grid alpha values must be > 0");
    }
    for (double w : alpha_cvx) {
        if (!(w >= 0.0 && w <= 1.0)) fail(ErrorKind::InvalidParameter, "alpha_cvx values must lie in [0, 1]");
    }
    for (const NuValue& n : nu_values) {
        if (!std::isfinite(n.k_coef) || !std::isfinite(n.offset)) {
            fail(ErrorKind::InvalidParameter, "nu entries must be finite");
        }
    }
    for (double v : c_values) {
        if (!std::isfinite(v)) fail(ErrorKind::InvalidParameter, "c values must be finite");
    }
    for (double v : a_values) {
        if (!std::isfinite(v)) fail(ErrorKind::InvalidParameter, "a values must be finite");
    }
}

GridSpec GridSpec::default_grid() {
    GridSpec g;
    g.k_values = {0.5, 1.0, 2.0};
    g.nu_values = {{-0.5, 0.1},           NuValue::relative(-0.4), NuValue::relative(-0.25),
                   NuValue::absolute(0.0), NuValue::relative(0.25), NuValue::relative(0.5),
                   NuValue::absolute(0.7), NuValue::absolute(1.0),  NuValue::relative(1.0),
                   NuValue::absolute(1.5), NuValue::relative(2.5),  NuValue::absolute(3.0)};
    g.c_values = {-1.0, 1.0, 2.0};
    g.alpha_values = {0.5, 1.0, 2.0};
    g.x_values = {0.25, 0.3, 1.0, 2.0, 3.0, 5.0};
    for (int i = 0; i < 25; ++i) g.x_path.push_back(0.1 + i * (5.0 - 0.1) / 24.0);
    g.a_values = {0.25, 0.5, 1.0};
    g.alpha_cvx = {0.0, 0.25, 0.5, 0.75, 1.0};
    return g;
}

VerifyReport check_ode(const KBesselParams& p, double x) {
    auto r = make_report("ode", point_of(p, x), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(x > 0.0)) return skipped(r, "requires nu > -k and x > 0");
    return guarded(r, [&](VerifyReport& rep) {
        const SeriesDerivatives d = eval_w_with_derivatives(p, x);
        const double potential = (p.c / p.k - p.nu * p.nu / (p.k * p.k * x * x)) * d.value;
        const double residual = std::fabs(d.second + d.first / x + potential);
        const double scale = std::max({std::fabs(d.second), std::fabs(d.first / x), std::fabs(d.value) / (x * x), 1.0});
        rep.details = {{"y", d.value}, {"dy", d.first}, {"d2y", d.second}, {"scale", scale}};
        finish_identity(rep, residual, kOdeRelTol * scale);
    });
}

VerifyReport check_rr1(const KBesselParams& p, double x) {
    auto r = make_report("rr1", point_of(p, x), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(x > 0.0)) return skipped(r, "requires nu > -k and x > 0");
    return guarded(r, [&](VerifyReport& rep) {
        const bool has_lower = p.nu > 0.0;
        double derivative = 0.0;
        if (has_lower) {
            derivative = deriv_w(p, x, 1).value;
        } else {
            derivative = eval_w_with_derivatives(p, x).first;
            rep.notes = "derivative from term-wise series (order nu-k not admissible)";
        }
        const double w = w_value(p.k, p.nu, p.c, x);
        const double upper = w_value(p.k, p.nu + p.k, p.c, x);
        const double residual = std::fabs(x * derivative - p.nu / p.k * w + x * p.c * upper);
        const double scale = neighbour_scale(p, x, has_lower);
        rep.details = {{"dW", derivative}, {"W", w}, {"W_up", upper}, {"scale", scale}};
        finish_identity(rep, residual, kIdentityRelTol * scale);
    });
}

VerifyReport check_rr2(const KBesselParams& p, double x) {
    auto r = make_report("rr2", point_of(p, x), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(p.nu > 0.0) || !(x > 0.0)) return skipped(r, "requires nu > 0 and x > 0");
    return guarded(r, [&](VerifyReport& rep) {
        const double derivative = eval_w_with_derivatives(p, x).first;
        const double w = w_value(p.k, p.nu, p.c, x);
        const double lower = w_value(p.k, p.nu - p.k, p.c, x);
        const double residual = std::fabs(x * derivative - x / p.k * lower + p.nu / p.k * w);
        const double scale = neighbour_scale(p, x, true);
        rep.details = {{"dW", derivative}, {"W", w}, {"W_down", lower}, {"scale", scale}};
        finish_identity(rep, residual, kIdentityRelTol * scale);
    });
}

VerifyReport check_rr3(const KBesselParams& p, double x) {
    auto r = make_report("rr3", point_of(p, x), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(p.nu > 0.0) || !(x > 0.0) || p.c == 0.0) {
        return skipped(r, "requires nu > 0, c != 0 and x > 0");
    }
    return guarded(r, [&](VerifyReport& rep) {
        const double lower = w_value(p.k, p.nu - p.k, p.c, x);
        const double w = w_value(p.k, p.nu, p.c, x);
        const double upper = w_value(p.k, p.nu + p.k, p.c, x);
        const double residual = std::fabs(2.0 * p.nu * w - x * lower - x * p.c * p.k * upper);
        const double stepped = recurrence_step_up(p, x, lower, w);
        const double step_error = std::fabs(stepped - upper) / std::max(std::fabs(upper), 1e-300);
        const double scale = std::max(1.0, max_abs({lower, w, upper}));
        rep.details = {{"W_down", lower}, {"W", w}, {"W_up", upper}, {"step_up", stepped},
                       {"step_up_rel_error", step_error}, {"scale", scale}};
        finish_identity(rep, residual, kIdentityRelTol * scale);
        if (step_error > kStepUpRelTol) {
            rep.status = Status::Fail;
            rep.notes = "upward recurrence deviates from the series by " + format_number(step_error);
        }
    });
}

VerifyReport check_rr4(const KBesselParams& p, double x) {
    auto r = make_report("rr4", point_of(p, x), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(p.nu > 0.0) || !(x > 0.0)) return skipped(r, "requires nu > 0 and x > 0");
    return guarded(r, [&](VerifyReport& rep) {
        const double derivative = eval_w_with_derivatives(p, x).first;
        const double lower = w_value(p.k, p.nu - p.k, p.c, x);
        const double upper = w_value(p.k, p.nu + p.k, p.c, x);
        const double residual = std::fabs(2.0 * p.k * derivative - lower + p.c * p.k * upper);
        const double scale = neighbour_scale(p, x, true);
        rep.details = {{"dW", derivative}, {"W_down", lower}, {"W_up", upper}, {"scale", scale}};
        finish_identity(rep, residual, kIdentityRelTol * scale);
    });
}

VerifyReport check_rr5(const KBesselParams& p, double x) {
    auto r = make_report("rr5", point_of(p, x), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(p.nu > 0.0) || !(x > 0.0)) return skipped(r, "requires nu > 0 and x > 0");
    return guarded(r, [&](VerifyReport& rep) {
        const double power = p.nu / p.k;
        auto f = [&](double t) { return std::pow(t, power) * w_value(p.k, p.nu, p.c, t); };
        const double numeric = first_difference(f, x, difference_step(x));
        const double expected = std::pow(x, power) / p.k * w_value(p.k, p.nu - p.k, p.c, x);
        rep.details = {{"finite_difference", numeric}, {"rhs", expected}};
        finish_identity(rep, std::fabs(numeric - expected), kFiniteDifferenceTol);
    });
}

VerifyReport check_rr6(const KBesselParams& p, double x) {
    auto r = make_report("rr6", point_of(p, x), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(x > 0.0)) return skipped(r, "requires nu > -k and x > 0");
    return guarded(r, [&](VerifyReport& rep) {
        const double power = -p.nu / p.k;
        auto f = [&](double t) { return std::pow(t, power) * w_value(p.k, p.nu, p.c, t); };
        const double numeric = first_difference(f, x, difference_step(x));
        const double expected = -p.c * std::pow(x, power) * w_value(p.k, p.nu + p.k, p.c, x);
        rep.details = {{"finite_difference", numeric}, {"rhs", expected}};
        finish_identity(rep, std::fabs(numeric - expected), kFiniteDifferenceTol);
    });
}

VerifyReport check_rr7(const KBesselParams& p, double x) {
    auto r = make_report("rr7", point_of(p, x), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(p.nu > 0.0)) return skipped(r, "requires nu > 0 (order nu-k must exceed -k)");
    if (!(x > 0.0) || x > 1.0) return skipped(r, "multisection identity is certified for 0 < x <= 1");
    return guarded(r, [&](VerifyReport& rep) {
        const EvalResult sum = multisection_lhs(p, x, kMultisectionTerms);
        const double lower = w_value(p.k, p.nu - p.k, p.c, x);
        // Same expansion with (-1)^r weights in place of (-ck)^r.
        long double unit_weights = 0.0L;
        for (std::uint32_t i = 0; i < kMultisectionTerms; ++i) {
            const double order = p.nu + 2.0 * i * p.k;
            unit_weights += ((i % 2 == 0) ? 1.0L : -1.0L) * order * w_value(p.k, order, p.c, x);
        }
        const double unit_residual = std::fabs(static_cast<double>(2.0L / x * unit_weights) - lower);
        rep.details = {{"expansion", sum.value}, {"W_down", lower}, {"est_error", sum.est_error},
                       {"unit_weight_residual", unit_residual}};
        finish_identity(rep, std::fabs(sum.value - lower), kMultisectionTol);
    });
}

VerifyReport check_rr8(const KBesselParams& p, double x, std::uint32_t m) {
    auto point = point_of(p, x);
    point.push_back({"m", static_cast<double>(m)});
    auto r = make_report("rr8", std::move(point), CheckKind::Identity);
    if (!valid_order(p.k, p.nu) || !(p.nu - m * p.k > -p.k) || !(x > 0.0) || m < 1 || m > 2) {
        return skipped(r, "requires m in {1,2}, nu - m k > -k and x > 0");
    }
    return guarded(r, [&](VerifyReport& rep) {
        const double analytic = deriv_w(p, x, m).value;
        auto f = [&](double t) { return w_value(p.k, p.nu, p.c, t); };
        const double h = difference_step(x);
        const double numeric = (m == 1) ? first_difference(f, x, h) : second_difference(f, x, h);
        rep.details = {{"deriv_w", analytic}, {"finite_difference", numeric}};
        finish_identity(rep, std::fabs(analytic - numeric), kHigherDerivativeTol);
    });
}

VerifyReport check_integral(IntegralPath path, double k, double nu, double c_or_alpha, double x) {
    const char* name = path == IntegralPath::Cos ? "integral_cos"
                       : path == IntegralPath::Cosh ? "integral_cosh"
                                                    : "integral_kernel";
    const char* third = path == IntegralPath::BesselKernel ? "c" : "alpha";
    auto r = make_report(name, {{"k", k}, {"nu", nu}, {third, c_or_alpha}, {"x", x}}, CheckKind::Identity);
    if (!valid_order(k, nu) || !(x > 0.0)) return skipped(r, "requires nu > -k and x > 0");
    if (path == IntegralPath::BesselKernel) {
        if (!(nu > 0.0)) return skipped(r, "Bessel-kernel representation requires nu > 0");
    } else {
        if (!(nu / k > -0.5)) return skipped(r, "cos/cosh representation requires nu/k > -1/2");
        if (!(c_or_alpha > 0.0)) return skipped(r, "alpha must be > 0");
        if (c_or_alpha * x / std::sqrt(k) > 20.0) return skipped(r, "oscillatory regime alpha x / sqrt(k) > 20");
    }
    return guarded(r, [&](VerifyReport& rep) {
        QuadResult q;
        double c = c_or_alpha;
        switch (path) {
            case IntegralPath::Cos:
                q = eval_w_cos({k, nu, c_or_alpha, x});
                c = c_or_alpha * c_or_alpha;
                break;
            case IntegralPath::Cosh:
                q = eval_w_cosh({k, nu, c_or_alpha, x});
                c = -c_or_alpha * c_or_alpha;
                break;
            case IntegralPath::BesselKernel:
                q = eval_w_bessel_kernel({k, nu, c_or_alpha}, x);
                break;
        }
        const double series = w_value(k, nu, c, x);
        rep.details = {{"integral", q.value}, {"series", series}, {"doubling_delta", q.doubling_delta},
                       {"nodes", static_cast<double>(q.nodes)}};
        finish_identity(rep, std::fabs(q.value - series), kIntegralRelTol * std::max(1.0, std::fabs(series)));
    });
}

VerifyReport check_ratio_x_monotone(double k, double mu, double nu, std::span<const double> x_grid) {
    auto r = make_report("ratio_x_monotone", {{"k", k}, {"mu", mu}, {"nu", nu}}, CheckKind::Inequality);
    if (!(k > 0.0) || !valid_order(k, mu) || !(nu >= mu)) return skipped(r, "requires nu >= mu > -k");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 0.0) || (i > 0 && !(x_grid[i] > x_grid[i - 1]))) {
            return skipped(r, "x grid must be positive and strictly increasing");
        }
    }
    return guarded(r, [&](VerifyReport& rep) {
        std::vector<double> ratios;
        ratios.reserve(x_grid.size());
        for (double x : x_grid) ratios.push_back(normalized_i(k, mu, x) / normalized_i(k, nu, x));
        double worst = 0.0;
        double worst_at = x_grid.empty() ? 0.0 : x_grid.front();
        double scale = 1.0;
        for (std::size_t i = 0; i + 1 < ratios.size(); ++i) {
            const double step = ratios[i + 1] - ratios[i];
            scale = std::max({scale, std::fabs(ratios[i]), std::fabs(ratios[i + 1])});
            if (i == 0 || step < worst) {
                worst = step;
                worst_at = x_grid[i];
            }
        }
        rep.details = {{"first_ratio", ratios.front()}, {"last_ratio", ratios.back()}, {"worst_step_at_x", worst_at},
                       {"points", static_cast<double>(ratios.size())}};
        finish_inequality(rep, worst, kInequalityRelTol * scale);
    });
}

VerifyReport check_order_ratio_monotone(double k, double mu, double nu, double x) {
    auto r = make_report("order_ratio", {{"k", k}, {"mu", mu}, {"nu", nu}, {"x", x}}, CheckKind::Inequality);
    if (!(k > 0.0) || !valid_order(k, mu) || !(nu >= mu) || !(x > 0.0)) {
        return skipped(r, "requires nu >= mu > -k and x > 0");
    }
    return guarded(r, [&](VerifyReport& rep) {
        const double lhs = normalized_i(k, nu + k, x) * normalized_i(k, mu, x);
        const double rhs = normalized_i(k, nu, x) * normalized_i(k, mu + k, x);
        rep.details = {{"lhs", lhs}, {"rhs", rhs}};
        finish_inequality(rep, lhs - rhs, kInequalityRelTol * max_abs({lhs, rhs}));
    });
}

VerifyReport check_nu_decreasing_logconvex(double k, double nu1, double nu2, double alpha_cvx, double x) {
    auto r = make_report("nu_logconvex", {{"k", k}, {"nu1", nu1}, {"nu2", nu2}, {"alpha_cvx", alpha_cvx}, {"x", x}},
                         CheckKind::Inequality);
    if (!(k > 0.0) || !valid_order(k, nu1) || !valid_order(k, nu2) || !(x > 0.0) ||
        !(alpha_cvx >= 0.0 && alpha_cvx <= 1.0)) {
        return skipped(r, "requires nu1, nu2 > -k, alpha_cvx in [0,1] and x > 0");
    }
    return guarded(r, [&](VerifyReport& rep) {
        const double i1 = normalized_i(k, nu1, x);
        const double i2 = normalized_i(k, nu2, x);
        const double small_order = nu1 <= nu2 ? i1 : i2;
        const double large_order = nu1 <= nu2 ? i2 : i1;
        const double decreasing = small_order - large_order;
        const double decreasing_tol = kInequalityRelTol * max_abs({small_order, large_order});

        const double mixed = normalized_i(k, alpha_cvx * nu1 + (1.0 - alpha_cvx) * nu2, x);
        const double bound = std::pow(i1, alpha_cvx) * std::pow(i2, 1.0 - alpha_cvx);
        const double convex = bound - mixed;
        const double convex_tol = kInequalityRelTol * max_abs({bound, mixed});

        rep.details = {{"decreasing_margin", decreasing}, {"logconvex_margin", convex},
                       {"interpolated", mixed}, {"geometric_mean", bound}};
        // Report the component closer to violation.
        if (decreasing / decreasing_tol <= convex / convex_tol) {
            finish_inequality(rep, decreasing, decreasing_tol);
        } else {
            finish_inequality(rep, convex, convex_tol);
        }
        if (decreasing < -decreasing_tol || convex < -convex_tol) rep.status = Status::Fail;
    });
}

VerifyReport check_turan(double k, double nu, double a, double x) {
    auto r = make_report("turan", {{"k", k}, {"nu", nu}, {"a", a}, {"x", x}}, CheckKind::Inequality);
    if (!(k > 0.0) || !(nu >= std::fabs(a) - k + kTuranGuard) || !(x > 0.0)) {
        return skipped(r, "requires nu >= |a| - k (strictly) and x > 0");
    }
    return guarded(r, [&](VerifyReport& rep) {
        const double centre = normalized_i(k, nu, x);
        const double product = normalized_i(k, nu - a, x) * normalized_i(k, nu + a, x);
        const double square = centre * centre;
        rep.details = {{"shifted_product", product}, {"square", square}};
        finish_inequality(rep, product - square, kInequalityRelTol * max_abs({product, square}));
    });
}

VerifyReport check_coefficients(double k, double mu, double nu) {
    auto r = make_report("coefficients", {{"k", k}, {"mu", mu}, {"nu", nu}}, CheckKind::Inequality);
    if (!(k > 0.0) || !valid_order(k, mu) || !(nu >= mu)) return skipped(r, "requires nu >= mu > -k");
    return guarded(r, [&](VerifyReport& rep) {
        double worst_ratio = 0.0;       // min of 1 - w_{r+1}/w_r
        double worst_log_slope = 0.0;   // min of -f_r'/f_r
        double worst_curvature = 0.0;   // min of (log f_r)''
        double closed_form_dev = 0.0;
        bool first = true;
        for (std::uint32_t i = 0; i <= kCoefficientTerms; ++i) {
            const double rk = i * k;
            const double ratio = std::exp(ln_k_gamma(rk + nu + k, k) + ln_k_gamma(rk + mu + 2 * k, k) -
                                          ln_k_gamma(rk + mu + k, k) - ln_k_gamma(rk + nu + 2 * k, k));
            const double closed_form = (rk + mu + k) / (rk + nu + k);
            closed_form_dev = std::max(closed_form_dev, std::fabs(ratio - closed_form));
            double slope = 0.0;
            double curvature = 0.0;
            for (double order : {mu, nu}) {
                slope = std::max(slope, k_digamma(order + k, k) - k_digamma(rk + order + k, k));
                const double c = k_trigamma(order + k, k) - k_trigamma(rk + order + k, k);
                curvature = (order == mu) ? c : std::min(curvature, c);
            }
            if (first) {
                worst_ratio = 1.0 - ratio;
                worst_log_slope = -slope;
                worst_curvature = curvature;
                first = false;
            } else {
                worst_ratio = std::min(worst_ratio, 1.0 - ratio);
                worst_log_slope = std::min(worst_log_slope, -slope);
                worst_curvature = std::min(worst_curvature, curvature);
            }
        }
        rep.details = {{"min_one_minus_w_ratio", worst_ratio},
                       {"min_neg_log_slope", worst_log_slope},
                       {"min_log_curvature", worst_curvature},
                       {"w_ratio_closed_form_dev", closed_form_dev}};
        const double worst = std::min({worst_ratio, worst_log_slope, worst_curvature});
        finish_inequality(rep, worst, kInequalityRelTol);
    });
}

namespace {

struct ChebyshevIntegrals {
    double q = 0.0;    // ∫q
    double qf = 0.0;   // ∫q f
    double qg = 0.0;   // ∫q g
    double qfg = 0.0;  // ∫q f g
};

ChebyshevIntegrals chebyshev_integrals(double k, double nu, double x, ChebyshevVariant variant) {
    const double scale = x / std::sqrt(k);
    Integrand q = variant == ChebyshevVariant::Cos ? Integrand([scale](double t) { return std::cos(scale * t); })
                                                   : Integrand([scale](double t) { return std::cosh(scale * t); });
    ChebyshevIntegrals out;
    out.q = integrate_weighted(0.0, q).value;
    out.qf = integrate_weighted(nu / k - 0.5, q).value;
    out.qg = integrate_weighted(nu / k + 0.5, q).value;
    out.qfg = integrate_weighted(2.0 * nu / k, q).value;
    return out;
}

const char* variant_name(ChebyshevVariant v) { return v == ChebyshevVariant::Cos ? "cos" : "cosh"; }

}  // namespace

VerifyReport check_chebyshev_products(double k, double nu, double x, ChebyshevVariant variant) {
    auto r = make_report("chebyshev", {{"k", k}, {"nu", nu}, {"x", x}}, CheckKind::Inequality);
    r.notes = variant_name(variant);
    if (!(k > 0.0) || !(x > 0.0)) return skipped(r, "requires k > 0 and x > 0");
    if (!(nu > -0.75 * k)) return skipped(r, "outside nu > -3k/4");
    if (!(nu > -0.5 * k)) {
        return skipped(r, std::string(variant_name(variant)) +
                              ": integral of q f diverges for nu <= -k/2 (exponent nu/k - 1/2 <= -1)");
    }
    if (variant == ChebyshevVariant::Cos && !(x / std::sqrt(k) < std::numbers::pi / 2.0)) {
        return skipped(r, "cos: q changes sign on [0,1] when x/sqrt(k) >= pi/2");
    }
    return guarded(r, [&](VerifyReport& rep) {
        const ChebyshevIntegrals in = chebyshev_integrals(k, nu, x, variant);
        const bool held = nu >= k / 2.0;
        const double lhs = in.qf * in.qg;
        const double rhs = in.q * in.qfg;
        const double margin = held ? rhs - lhs : lhs - rhs;
        rep.notes = std::string(variant_name(variant)) + (held ? ": held regime" : ": reversed regime");
        rep.details = {{"int_q", in.q},   {"int_qf", in.qf}, {"int_qg", in.qg},
                       {"int_qfg", in.qfg}, {"regime_held", held ? 1.0 : 0.0}};
        finish_inequality(rep, margin, kInequalityRelTol * max_abs({lhs, rhs}));
    });
}

VerifyReport probe_chebyshev_closed_form(double k, double nu, double x, ChebyshevVariant variant) {
    auto r = make_report("chebyshev_closed_form", {{"k", k}, {"nu", nu}, {"x", x}}, CheckKind::Probe);
    if (!(k > 0.0) || !(x > 0.0) || !(nu > -0.75 * k)) return skipped(r, "requires nu > -3k/4 and x > 0");
    return guarded(r, [&](VerifyReport& rep) {
        const bool hyperbolic = variant == ChebyshevVariant::Cosh;
        // Closed forms pair the cos kernel with the modified functions and
        // sin(x/k), the cosh kernel with the alternating ones and sinh(x/k).
        const double c = hyperbolic ? 1.0 : -1.0;
        auto norm = [&](double order) { return eval_normalized_w({k, order, c}, x).value; };
        const double trig = hyperbolic ? std::sinh(x / k) : std::sin(x / k);
        const double rhs = std::sqrt(k) / x * trig * norm(2.0 * nu + k / 2.0);
        const double half_k_lhs = norm(nu) * norm(nu + k / 2.0);
        const double full_k_lhs = norm(nu) * norm(nu + k);
        const bool expect_held = nu >= k / 2.0 || nu <= -k / 2.0;
        const double half_k_margin = rhs - half_k_lhs;
        const double full_k_margin = rhs - full_k_lhs;
        auto agrees = [&](double m) { return expect_held ? m >= 0.0 : m <= 0.0; };
        rep.details = {{"rhs", rhs},
                       {"half_k_lhs", half_k_lhs},
                       {"full_k_lhs", full_k_lhs},
                       {"half_k_agrees", agrees(half_k_margin) ? 1.0 : 0.0},
                       {"full_k_agrees", agrees(full_k_margin) ? 1.0 : 0.0}};
        rep.notes = std::string(variant_name(variant)) + ": expected " + (expect_held ? "held" : "reversed") +
                    "; nu+k/2 form " + (agrees(half_k_margin) ? "agrees" : "disagrees") + "; nu+k form " +
                    (agrees(full_k_margin) ? "agrees" : "disagrees");
        rep.value = half_k_margin;
        rep.status = Status::Pass;
    });
}

VerifyReport probe_sin_relation(double k, double alpha, double x, bool hyperbolic) {
    auto r = make_report(hyperbolic ? "sinh_relation" : "sin_relation", {{"k", k}, {"alpha", alpha}, {"x", x}},
                         CheckKind::Probe);
    if (!(k > 0.0) || !(alpha > 0.0) || !(x > 0.0)) return skipped(r, "requires k, alpha, x > 0");
    return guarded(r, [&](VerifyReport& rep) {
        const RelationCheck rc = hyperbolic ? sinh_relation_check(k, alpha, x) : sin_relation_check(k, alpha, x);
        rep.details = {{"lhs", rc.lhs},
                       {"w", rc.w},
                       {"alpha_over_k", rc.alpha_over_k},
                       {"fitted_constant", rc.fitted_constant},
                       {"fitted_over_alpha", rc.fitted_constant / alpha}};
        rep.value = rc.residual;
        rep.notes = "fitted constant " + format_number(rc.fitted_constant) + " vs alpha/k = " +
                    format_number(rc.alpha_over_k);
        rep.status = Status::Pass;
    });
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "ode",          "rr1",           "rr2",           "rr3",
        "rr4",          "rr5",           "rr6",           "rr7",
        "rr8",          "integral_cos",  "integral_cosh", "integral_kernel",
        "ratio_x_monotone", "order_ratio", "nu_logconvex", "turan",
        "coefficients", "chebyshev",     "chebyshev_closed_form", "sin_relation",
        "sinh_relation",
    };
    return names;
}

namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<double> orders_for(const GridSpec& spec, double k) {
    std::vector<double> out;
    out.reserve(spec.nu_values.size());
    for (const NuValue& n : spec.nu_values) out.push_back(n.at(k));
    return sorted_unique(std::move(out));
}

using Task = std::function<VerifyReport()>;

void add_tasks(const std::string& name, const GridSpec& spec, std::vector<Task>& tasks) {
    const auto ks = sorted_unique(spec.k_values);
    const auto cs = sorted_unique(spec.c_values);
    const auto alphas = sorted_unique(spec.alpha_values);
    const auto xs = sorted_unique(spec.x_values);
    const auto as = sorted_unique(spec.a_values);
    const auto weights = sorted_unique(spec.alpha_cvx);
    const std::vector<double> path = spec.x_path;

    using ParamCheck = VerifyReport (*)(const KBesselParams&, double);
    static const std::vector<std::pair<std::string, ParamCheck>> param_checks = {
        {"ode", check_ode}, {"rr1", check_rr1}, {"rr2", check_rr2}, {"rr3", check_rr3},
        {"rr4", check_rr4}, {"rr5", check_rr5}, {"rr6", check_rr6}, {"rr7", check_rr7},
    };
    for (const auto& [check_name, fn] : param_checks) {
        if (check_name != name) continue;
        for (double k : ks)
            for (double nu : orders_for(spec, k))
                for (double c : cs)
                    for (double x : xs) tasks.push_back([=] { return fn({k, nu, c}, x); });
        return;
    }
    if (name == "rr8") {
        for (double k : ks)
            for (double nu : orders_for(spec, k))
                for (double c : cs)
                    for (double x : xs)
                        for (std::uint32_t m : {1u, 2u}) tasks.push_back([=] { return check_rr8({k, nu, c}, x, m); });
    } else if (name == "integral_cos" || name == "integral_cosh") {
        const IntegralPath p = name == "integral_cos" ? IntegralPath::Cos : IntegralPath::Cosh;
        for (double k : ks)
            for (double nu : orders_for(spec, k))
                for (double a : alphas)
                    for (double x : xs) tasks.push_back([=] { return check_integral(p, k, nu, a, x); });
    } else if (name == "integral_kernel") {
        for (double k : ks)
            for (double nu : orders_for(spec, k))
                for (double c : cs)
                    for (double x : xs)
                        tasks.push_back([=] { return check_integral(IntegralPath::BesselKernel, k, nu, c, x); });
    } else if (name == "ratio_x_monotone" || name == "coefficients") {
        const bool ratio = name == "ratio_x_monotone";
        for (double k : ks) {
            const auto orders = orders_for(spec, k);
            for (std::size_t i = 0; i < orders.size(); ++i)
                for (std::size_t j = i; j < orders.size(); ++j) {
                    const double mu = orders[i];
                    const double nu = orders[j];
                    if (ratio) {
                        tasks.push_back([=] { return check_ratio_x_monotone(k, mu, nu, path); });
                    } else {
                        tasks.push_back([=] { return check_coefficients(k, mu, nu); });
                    }
                }
        }
    } else if (name == "order_ratio") {
        for (double k : ks) {
            const auto orders = orders_for(spec, k);
            for (std::size_t i = 0; i < orders.size(); ++i)
                for (std::size_t j = i; j < orders.size(); ++j)
                    for (double x : xs) {
                        const double mu = orders[i];
                        const double nu = orders[j];
                        tasks.push_back([=] { return check_order_ratio_monotone(k, mu, nu, x); });
                    }
        }
    } else if (name == "nu_logconvex") {
        for (double k : ks) {
            const auto orders = orders_for(spec, k);
            for (std::size_t i = 0; i < orders.size(); ++i)
                for (std::size_t j = i; j < orders.size(); ++j)
                    for (double w : weights)
                        for (double x : xs) {
                            const double nu1 = orders[i];
                            const double nu2 = orders[j];
                            tasks.push_back([=] { return check_nu_decreasing_logconvex(k, nu1, nu2, w, x); });
                        }
        }
    } else if (name == "turan") {
        for (double k : ks)
            for (double nu : orders_for(spec, k))
                for (double a : as)
                    for (double x : xs) tasks.push_back([=] { return check_turan(k, nu, a, x); });
    } else if (name == "chebyshev" || name == "chebyshev_closed_form") {
        const bool integral_level = name == "chebyshev";
        for (double k : ks)
            for (double nu : orders_for(spec, k))
                for (double x : xs)
                    for (ChebyshevVariant v : {ChebyshevVariant::Cos, ChebyshevVariant::Cosh}) {
                        if (integral_level) {
                            tasks.push_back([=] { return check_chebyshev_products(k, nu, x, v); });
                        } else {
                            tasks.push_back([=] { return probe_chebyshev_closed_form(k, nu, x, v); });
                        }
                    }
    } else if (name == "sin_relation" || name == "sinh_relation") {
        const bool hyperbolic = name == "sinh_relation";
        for (double k : ks)
            for (double a : alphas)
                for (double x : xs) tasks.push_back([=] { return probe_sin_relation(k, a, x, hyperbolic); });
    }
}

}  // namespace

std::vector<VerifyReport> run_grid(const GridSpec& spec, const std::vector<std::string>& checks, unsigned threads) {
    for (const std::string& name : checks) {
        const auto& known = known_checks();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            fail(ErrorKind::InvalidParameter, "unknown check '" + name + "'");
        }
    }
    if (checks.empty()) return {};
    spec.validate();

    std::vector<Task> tasks;
    for (const std::string& name : checks) add_tasks(name, spec, tasks);

    std::vector<VerifyReport> reports(tasks.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) reports[i] = tasks[i]();
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return reports;
}

}  // namespace kbessel

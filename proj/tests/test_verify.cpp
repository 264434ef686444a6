#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "json.hpp"
#include "kbessel/error.hpp"
#include "kbessel/report.hpp"
#include "kbessel/verify.hpp"

using namespace kbessel;

namespace {

GridSpec single_point() {
    GridSpec g = GridSpec::default_grid();
    g.k_values = {1.0};
    g.nu_values = {NuValue::absolute(1.0)};
    g.c_values = {1.0};
    g.alpha_values = {1.0};
    g.x_values = {1.0};
    g.a_values = {0.5};
    g.alpha_cvx = {0.5};
    return g;
}

}  // namespace

TEST_CASE("single checks") {
    CHECK(check_ode({1, 0.3, 2}, 1.7).passed());
    CHECK(check_rr1({0.5, -0.2, -1}, 2).passed());
    CHECK(check_rr2({2, 1, 1}, 0.3).passed());
    CHECK(check_rr3({1, 1.5, 2}, 3).passed());
    CHECK(check_rr4({1, 3, -1}, 5).passed());
    CHECK(check_rr5({1, 0.7, 1}, 2).passed());
    CHECK(check_rr6({1, -0.4, 2}, 2).passed());
    CHECK(check_rr7({2, 1.5, 1}, 1).passed());
    CHECK(check_rr8({2, 3, 1}, 0.8, 2).passed());
    CHECK(check_integral(IntegralPath::Cos, 1, 0.5, 1, 1).passed());
    CHECK(check_integral(IntegralPath::Cosh, 2, -0.8, 2, 3).passed());
    CHECK(check_integral(IntegralPath::BesselKernel, 0.5, 0.7, -1, 5).passed());
    CHECK(check_turan(1, 0.5, 0.25, 2).passed());
    CHECK(check_coefficients(0.5, -0.2, 3).passed());
}

TEST_CASE("preconditions become skips") {
    CHECK(check_rr2({1, -0.5, 1}, 1).skipped());
    CHECK(check_rr7({1, 1, 1}, 2).skipped());
    CHECK(check_rr8({1, 0.5, 1}, 1, 2).skipped());
    CHECK(check_integral(IntegralPath::Cos, 1, -0.6, 1, 1).skipped());
    CHECK(check_integral(IntegralPath::Cos, 0.5, 1, 2, 8).skipped());
    CHECK(check_integral(IntegralPath::BesselKernel, 1, 0, 1, 1).skipped());
    CHECK(check_turan(1, -0.5, 1, 1).skipped());
    CHECK(!check_turan(1, 0.5, 0.25, 1).skipped());
    CHECK(check_order_ratio_monotone(1, 2, 1, 1).skipped());
    const auto r = check_chebyshev_products(1, -0.6, 1, ChebyshevVariant::Cosh);
    CHECK(r.skipped());
    CHECK(r.notes.find("diverges") != std::string::npos);
    CHECK(check_chebyshev_products(0.5, 1, 1.2, ChebyshevVariant::Cos).skipped());
}

TEST_CASE("chebyshev regimes") {
    const auto held = check_chebyshev_products(1, 1, 1, ChebyshevVariant::Cosh);
    CHECK(held.passed());
    CHECK(held.notes.find("held") != std::string::npos);
    const auto reversed = check_chebyshev_products(1, 0, 1, ChebyshevVariant::Cos);
    CHECK(reversed.passed());
    CHECK(reversed.notes.find("reversed") != std::string::npos);
    for (double k : {0.5, 1.0, 2.0}) {
        const auto boundary = check_chebyshev_products(k, k / 2, 1, ChebyshevVariant::Cosh);
        CHECK(boundary.passed());
        CHECK(boundary.value >= -boundary.tolerance);
    }
}

TEST_CASE("run_grid basics") {
    CHECK(run_grid(GridSpec::default_grid(), {}).empty());
    CHECK_THROWS_AS(run_grid(GridSpec::default_grid(), {"no_such_check"}), Error);
    const auto reports = run_grid(single_point(), {"rr3"});
    REQUIRE(reports.size() == 1);
    const auto direct = check_rr3({1, 1, 1}, 1);
    CHECK(report_to_json(reports[0]) == report_to_json(direct));
}

TEST_CASE("default grid pass rate and determinism") {
    const auto a = run_grid(GridSpec::default_grid(), known_checks(), 1);
    const auto b = run_grid(GridSpec::default_grid(), known_checks(), 8);
    REQUIRE(a.size() == b.size());
    std::size_t pass = 0, considered = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(report_to_json(a[i]) == report_to_json(b[i]));
        if (!a[i].skipped()) {
            ++considered;
            if (a[i].passed()) ++pass;
        }
    }
    CHECK(considered > 10000);
    CHECK(static_cast<double>(pass) >= 0.95 * considered);
}

TEST_CASE("report formats") {
    VerifyReport r;
    r.check_name = "turan";
    r.grid_point = {{"k", 0.5}, {"x", 0.1}};
    r.kind = CheckKind::Inequality;
    r.status = Status::Fail;
    r.value = -1.0 / 3.0;
    r.tolerance = 1e-12;
    r.notes = "a, \"quoted\"\nnote";
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["check"] == "turan");
    CHECK(j["status"] == "fail");
    CHECK(j["point"]["x"].get<double>() == 0.1);
    CHECK(j["value"].get<double>() == -1.0 / 3.0);
    CHECK(j["notes"] == r.notes);
    const std::string csv = report_to_csv(r);
    CHECK(csv.find("\"a, \"\"quoted\"\"\nnote\"") != std::string::npos);
    CHECK(format_g17(0.1) == "0.10000000000000001");
    CHECK(format_shortest(0.1) == "0.1");
    CHECK(csv_field("plain") == "plain");
    CHECK(json_number(std::nan("")) == "null");
}

TEST_CASE("grid files") {
    const GridSpec g = parse_grid_json(R"({"k":[1,2],"nu":[0.5,{"k_coef":-0.5,"offset":0.1}],"x":[1]})");
    CHECK(g.k_values.size() == 2);
    REQUIRE(g.nu_values.size() == 2);
    CHECK(g.nu_values[1].at(2.0) == doctest::Approx(-0.9));
    CHECK(g.c_values == GridSpec::default_grid().c_values);
    CHECK_THROWS_AS(parse_grid_json("{\"k\":[]}"), Error);
    CHECK_THROWS_AS(parse_grid_json("{\"bogus\":[1]}"), Error);
    CHECK_THROWS_AS(parse_grid_json("not json"), Error);
    CHECK_THROWS_AS(parse_grid_json("{\"x\":[0]}"), Error);
    CHECK_THROWS_AS(load_grid_file("/nonexistent/grid.json"), Error);
}

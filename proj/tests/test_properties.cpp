#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "kbessel/kgamma.hpp"
#include "kbessel/series.hpp"
#include "kbessel/verify.hpp"
#include "oracles.hpp"

using namespace kbessel;

namespace {

struct Sample {
    double k, nu, c, x;
};

std::vector<Sample> samples(unsigned seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> k_dist(0.3, 3.0), frac(-0.95, 4.0), c_dist(-2.0, 2.0), x_dist(0.05, 6.0);
    std::vector<Sample> out;
    for (std::size_t i = 0; i < n; ++i) {
        const double k = k_dist(rng);
        out.push_back({k, frac(rng) * k, c_dist(rng), x_dist(rng)});
    }
    return out;
}

}  // namespace

TEST_CASE("result invariants") {
    for (const Sample& s : samples(1, 400)) {
        const EvalResult r = eval_w({s.k, s.nu, s.c}, s.x);
        CHECK(std::isfinite(r.value));
        CHECK(r.est_error >= 0.0);
        CHECK(r.terms_used <= 500u);
        CHECK(r.terms_used >= 1u);
    }
}

TEST_CASE("ODE holds at random points") {
    for (const Sample& s : samples(2, 300)) {
        CAPTURE(s.k);
        CAPTURE(s.nu);
        CAPTURE(s.c);
        CAPTURE(s.x);
        CHECK(check_ode({s.k, s.nu, s.c}, s.x).passed());
        CHECK(check_rr1({s.k, s.nu, s.c}, s.x).passed());
        CHECK(check_rr6({s.k, s.nu, s.c}, s.x).passed());
    }
}

TEST_CASE("normalized modified series is even, positive and increasing") {
    for (const Sample& s : samples(3, 200)) {
        const KBesselParams p{s.k, s.nu, -1.0};
        double prev = eval_normalized_i(p, 0.0).value;
        CHECK(prev == 1.0);
        for (double x = 0.1; x < 6.0; x += 0.3) {
            const double v = eval_normalized_i(p, x).value;
            CHECK(v == eval_normalized_i(p, -x).value);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("normalized forms against W") {
    for (const Sample& s : samples(4, 200)) {
        const double scale = std::pow(2.0 / s.x, s.nu / s.k) * k_gamma(s.nu + s.k, s.k);
        const double i_expected = scale * eval_w({s.k, s.nu, -1.0}, s.x).value;
        const double j_expected = scale * eval_w({s.k, s.nu, 1.0}, s.x).value;
        CHECK(std::fabs(eval_normalized_i({s.k, s.nu, -1.0}, s.x).value - i_expected) <=
              1e-12 * std::max(1.0, std::fabs(i_expected)));
        CHECK(std::fabs(eval_normalized_j({s.k, s.nu, 1.0}, s.x).value - j_expected) <=
              1e-11 * std::max(1.0, std::fabs(j_expected)));
    }
}

TEST_CASE("c = 0 keeps only the leading term") {
    for (const Sample& s : samples(5, 200)) {
        const double expected = std::pow(s.x / 2, s.nu / s.k) / k_gamma(s.nu + s.k, s.k);
        CHECK(std::fabs(eval_w({s.k, s.nu, 0.0}, s.x).value - expected) <= 1e-13 * std::max(1.0, expected));
    }
}

TEST_CASE("k = 1 random classical reduction") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> nu_dist(0.0, 4.0), x_dist(0.01, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double nu = nu_dist(rng), x = x_dist(rng);
        CHECK(oracle::rel_err(eval_w({1, nu, 1}, x).value, oracle::bessel_j(nu, x)) <= 1e-12);
        CHECK(oracle::rel_err(eval_w({1, nu, -1}, x).value, oracle::bessel_i(nu, x)) <= 1e-12);
    }
}

TEST_CASE("k-gamma functional equation at random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> t_dist(0.1, 50.0), k_dist(0.2, 4.0);
    for (int i = 0; i < 500; ++i) {
        const double t = t_dist(rng), k = k_dist(rng);
        CHECK(std::fabs(ln_k_gamma(t + k, k) - ln_k_gamma(t, k) - std::log(t)) <= 1e-12 * std::max(1.0, std::fabs(std::log(t))));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kbessel/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "kbessel");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = kbessel::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("eval examples") {
    auto r = run({"eval", "--k", "1", "--nu", "0", "--c", "1", "--x", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.7651976865579666\n");
    r = run({"eval", "--k", "2", "--nu", "0", "--c", "1", "--x", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = run({"eval", "--k", "1", "--nu", "-2", "--c", "1", "--x", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("nu must exceed -k") != std::string::npos);
}

TEST_CASE("eval formats and errors") {
    auto r = run({"eval", "--k", "1", "--nu", "0", "--c", "1", "--x", "0.5,1,2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 4);
    CHECK(r.out.rfind("x,value,terms_used,est_error\n", 0) == 0);
    r = run({"eval", "--k", "1", "--nu", "0", "--c", "1", "--x", "1", "--format", "json"});
    CHECK(r.out.find("\"value\":0.76519768655796661") != std::string::npos);
    r = run({"eval", "--k", "1", "--nu", "0", "--c", "1", "--x", "40", "--max-terms", "5"});
    CHECK(r.code == 3);
    r = run({"eval", "--k", "1", "--nu", "0", "--c", "1", "--x", "-1"});
    CHECK(r.code == 2);
    r = run({"eval", "--k", "1", "--nu", "0", "--c", "1"});
    CHECK(r.code == 2);
    r = run({"eval", "--k", "1", "--nu", "2", "--c", "-1", "--x", "1", "--deriv", "1"});
    CHECK(r.code == 0);
    r = run({"eval", "--k", "1", "--nu", "0", "--c", "-1", "--x", "1", "--normalized"});
    CHECK(std::fabs(std::stod(r.out) - 1.2660658777520084) < 1e-15);
    r = run({"frobnicate"});
    CHECK(r.code == 2);
    r = run({"--help"});
    CHECK(r.code == 0);
}

TEST_CASE("gamma examples") {
    CHECK(run({"gamma", "--fn", "gamma", "--t", "2", "--k", "2"}).out == "1\n");
    CHECK(run({"gamma", "--fn", "digamma", "--t", "1", "--k", "1"}).out == "-0.5772156649015329\n");
    CHECK(run({"gamma", "--fn", "beta", "--x", "1", "--y", "1", "--k", "1"}).out == "1\n");
    CHECK(run({"gamma", "--fn", "pochhammer", "--x", "2", "--n", "3", "--k", "1"}).out == "24\n");
    CHECK(run({"gamma", "--fn", "gamma", "--t", "0", "--k", "1"}).code == 2);
    CHECK(run({"gamma", "--fn", "gamma", "--t", "400", "--k", "1"}).code == 2);
    CHECK(run({"gamma", "--fn", "nope"}).code == 2);
}

TEST_CASE("table") {
    auto r = run({"table", "--k", "1", "--nu", "0", "--c", "1", "--x-start", "0", "--x-stop", "2", "--x-steps", "5",
                  "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 6);
    CHECK(r.out.rfind("x,W,normalized,est_error\n", 0) == 0);
    CHECK(r.out.find("x,W") == r.out.rfind("x,W"));
    // last row at x = 2 matches eval
    CHECK(r.out.find("\n2,0.22389077914123567,") != std::string::npos);
    r = run({"table", "--k", "1", "--nu", "0", "--c", "1", "--x-steps", "3", "--format", "json"});
    CHECK(count_lines(r.out) == 3);
}

TEST_CASE("verify and compare-integral") {
    auto r = run({"verify", "--checks", "turan", "--grid", "default"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"check\":\"turan\"") != std::string::npos);
    r = run({"verify", "--checks", "turan,bogus"});
    CHECK(r.code == 2);
    r = run({"verify", "--grid", "/nonexistent.json"});
    CHECK(r.code == 2);

    const std::string path = "cli_test_grid.json";
    {
        std::ofstream f(path);
        f << R"({"k":[1],"nu":[0.5,{"k_coef":1,"offset":0}],"alpha":[1],"c":[1],"x":[1,2]})";
    }
    r = run({"compare-integral", "--grid", path, "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("path,k,nu,param,x,series,integral,abs_diff,scaled_diff,doubling_delta,nodes\n", 0) == 0);
    CHECK(count_lines(r.out) == 1 + 4 + 4 + 4);
    r = run({"verify", "--grid", path, "--checks", "ode", "--format", "csv", "--out", "cli_test_out.csv"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in("cli_test_out.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "check,kind,status,point,value,tolerance,notes,details");
    std::remove(path.c_str());
    std::remove("cli_test_out.csv");
}

TEST_CASE("deterministic output") {
    const std::vector<std::string> args = {"verify", "--checks", "ode,rr1,chebyshev"};
    CHECK(run(args).out == run(args).out);
}

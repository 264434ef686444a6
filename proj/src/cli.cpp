#include "kbessel/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kbessel/error.hpp"
#include "kbessel/kgamma.hpp"
#include "kbessel/report.hpp"
#include "kbessel/series.hpp"
#include "kbessel/verify.hpp"

namespace kbessel {
namespace {

enum class Format { Plain, Csv, Json };

struct Options {
    // eval / table
    double k = 1.0;
    double nu = 0.0;
    double c = 1.0;
    std::vector<double> x;
    std::uint32_t deriv = 0;
    bool normalized = false;
    double tol = 1e-14;
    std::uint32_t max_terms = 500;
    std::string format = "plain";
    std::string out_path;
    // table
    double x_start = 0.0;
    double x_stop = 1.0;
    std::uint32_t x_steps = 11;
    // gamma
    std::string fn = "gamma";
    double t = 1.0;
    double gx = 1.0;
    double gy = 1.0;
    std::uint32_t n = 0;
    // compare-integral / verify
    std::string grid = "default";
    std::vector<std::string> checks;
    std::vector<std::string> paths;
    unsigned threads = 0;
};

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::Plain;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    fail(ErrorKind::InvalidParameter, "unknown format '" + s + "'");
}

SeriesConfig series_config(const Options& o) {
    SeriesConfig cfg{o.tol, o.max_terms};
    cfg.validate();
    return cfg;
}

GridSpec grid_from(const std::string& g) {
    return g == "default" ? GridSpec::default_grid() : load_grid_file(g);
}

EvalResult evaluate(const Options& o, double x, const SeriesConfig& cfg) {
    const KBesselParams p{o.k, o.nu, o.c};
    if (o.deriv > 0) {
        if (o.normalized) fail(ErrorKind::InvalidParameter, "--deriv and --normalized cannot be combined");
        return deriv_w(p, x, o.deriv, cfg);
    }
    return o.normalized ? eval_normalized_w(p, x, cfg) : eval_w(p, x, cfg);
}

void cmd_eval(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const SeriesConfig cfg = series_config(o);
    if (o.x.empty()) fail(ErrorKind::InvalidParameter, "--x is required");
    std::vector<EvalResult> results;
    for (double x : o.x) results.push_back(evaluate(o, x, cfg));
    if (fmt == Format::Csv) out << "x,value,terms_used,est_error\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const EvalResult& r = results[i];
        switch (fmt) {
            case Format::Plain:
                out << format_shortest(r.value) << '\n';
                break;
            case Format::Csv:
                out << format_g17(o.x[i]) << ',' << format_g17(r.value) << ',' << r.terms_used << ','
                    << format_g17(r.est_error) << '\n';
                break;
            case Format::Json:
                out << "{\"k\":" << json_number(o.k) << ",\"nu\":" << json_number(o.nu)
                    << ",\"c\":" << json_number(o.c) << ",\"x\":" << json_number(o.x[i])
                    << ",\"value\":" << json_number(r.value) << ",\"terms_used\":" << r.terms_used
                    << ",\"est_error\":" << json_number(r.est_error) << "}\n";
                break;
        }
    }
}

void cmd_gamma(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    double v = 0.0;
    if (o.fn == "gamma") {
        v = k_gamma(o.t, o.k);
    } else if (o.fn == "lngamma") {
        v = ln_k_gamma(o.t, o.k);
    } else if (o.fn == "digamma") {
        v = k_digamma(o.t, o.k);
    } else if (o.fn == "trigamma") {
        v = k_trigamma(o.t, o.k);
    } else if (o.fn == "beta") {
        v = k_beta(o.gx, o.gy, o.k);
    } else if (o.fn == "pochhammer") {
        v = k_pochhammer(o.gx, o.n, o.k);
    } else {
        fail(ErrorKind::InvalidParameter, "unknown --fn '" + o.fn + "'");
    }
    switch (fmt) {
        case Format::Plain: out << format_shortest(v) << '\n'; break;
        case Format::Csv: out << "fn,value\n" << csv_field(o.fn) << ',' << format_g17(v) << '\n'; break;
        case Format::Json: out << "{\"fn\":" << json_string(o.fn) << ",\"value\":" << json_number(v) << "}\n"; break;
    }
}

void cmd_table(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const SeriesConfig cfg = series_config(o);
    if (o.x_steps < 1) fail(ErrorKind::InvalidParameter, "--x-steps must be >= 1");
    if (!std::isfinite(o.x_start) || !std::isfinite(o.x_stop)) fail(ErrorKind::InvalidParameter, "x range must be finite");
    const KBesselParams p{o.k, o.nu, o.c};
    p.validate();
    const char sep = fmt == Format::Csv ? ',' : ' ';
    if (fmt != Format::Json) out << "x" << sep << "W" << sep << "normalized" << sep << "est_error\n";
    for (std::uint32_t i = 0; i < o.x_steps; ++i) {
        const double x = o.x_steps == 1 ? o.x_start
                                        : o.x_start + (o.x_stop - o.x_start) * i / (o.x_steps - 1.0);
        const EvalResult w = eval_w(p, x, cfg);
        const EvalResult nw = eval_normalized_w(p, x, cfg);
        if (fmt == Format::Json) {
            out << "{\"x\":" << json_number(x) << ",\"W\":" << json_number(w.value)
                << ",\"normalized\":" << json_number(nw.value) << ",\"est_error\":" << json_number(w.est_error)
                << "}\n";
        } else {
            out << format_g17(x) << sep << format_g17(w.value) << sep << format_g17(nw.value) << sep
                << format_g17(w.est_error) << '\n';
        }
    }
}

std::string detail(const VerifyReport& r, const std::string& name) {
    for (const NamedValue& v : r.details)
        if (v.name == name) return format_g17(v.value);
    return "nan";
}

int cmd_compare_integral(const Options& o, std::ostream& out, std::ostream& err) {
    Format fmt = parse_format(o.format);
    if (fmt == Format::Plain) fmt = Format::Csv;
    std::vector<std::string> checks;
    const std::vector<std::string> paths = o.paths.empty() ? std::vector<std::string>{"cos", "cosh", "kernel"} : o.paths;
    for (const std::string& path : paths) {
        if (path != "cos" && path != "cosh" && path != "kernel") {
            fail(ErrorKind::InvalidParameter, "unknown integral path '" + path + "'");
        }
        checks.push_back("integral_" + path);
    }
    const auto reports = run_grid(grid_from(o.grid), checks, o.threads);

    if (fmt == Format::Csv) out << "path,k,nu,param,x,series,integral,abs_diff,scaled_diff,doubling_delta,nodes\n";
    double max_scaled = 0.0;
    std::size_t failed = 0;
    for (const VerifyReport& r : reports) {
        if (r.skipped()) continue;
        const std::string path = r.check_name.substr(std::string("integral_").size());
        if (!r.notes.empty() && r.details.empty()) {
            ++failed;
            err << "error at " << path << ": " << r.notes << '\n';
            continue;
        }
        const double scale = r.tolerance / kIntegralRelTol;
        const double scaled = r.value / scale;
        max_scaled = std::max(max_scaled, scaled);
        if (!r.passed()) ++failed;
        if (fmt == Format::Csv) {
            out << path;
            for (const NamedValue& v : r.grid_point) out << ',' << format_g17(v.value);
            out << ',' << detail(r, "series") << ',' << detail(r, "integral") << ',' << format_g17(r.value) << ','
                << format_g17(scaled) << ',' << detail(r, "doubling_delta") << ',' << detail(r, "nodes") << '\n';
        } else {
            out << "{\"path\":" << json_string(path);
            for (const NamedValue& v : r.grid_point) {
                out << ',' << json_string(v.name == "alpha" || v.name == "c" ? "param" : v.name) << ':'
                    << json_number(v.value);
            }
            out << ",\"series\":" << detail(r, "series") << ",\"integral\":" << detail(r, "integral")
                << ",\"abs_diff\":" << json_number(r.value) << ",\"scaled_diff\":" << json_number(scaled)
                << ",\"doubling_delta\":" << detail(r, "doubling_delta") << ",\"nodes\":" << detail(r, "nodes")
                << "}\n";
        }
    }
    err << "max scaled |diff| = " << format_g17(max_scaled) << ", failures = " << failed << '\n';
    return failed ? kExitVerifyFailed : kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    Format fmt = parse_format(o.format);
    if (fmt == Format::Plain) fmt = Format::Json;
    const std::vector<std::string> checks = o.checks.empty() ? known_checks() : o.checks;
    const auto reports = run_grid(grid_from(o.grid), checks, o.threads);
    std::size_t pass = 0, fail_count = 0, skip = 0;
    if (fmt == Format::Csv) out << report_csv_header() << '\n';
    for (const VerifyReport& r : reports) {
        out << (fmt == Format::Csv ? report_to_csv(r) : report_to_json(r)) << '\n';
        if (r.passed()) ++pass;
        else if (r.skipped()) ++skip;
        else ++fail_count;
    }
    err << pass << " passed, " << fail_count << " failed, " << skip << " skipped\n";
    return fail_count ? kExitVerifyFailed : kExitOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonConvergence:
        case ErrorKind::QuadratureFailure: return kExitNumerical;
        default: return kExitUsage;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized k-Bessel functions: evaluation, tables and verification"};
    app.name("kbessel");
    app.require_subcommand(1, 1);
    Options o;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--k", o.k, "k > 0")->required();
        cmd->add_option("--nu", o.nu, "order, nu > -k")->required();
        cmd->add_option("--c", o.c, "real parameter c")->required();
        cmd->add_option("--tol", o.tol, "series relative tolerance");
        cmd->add_option("--max-terms", o.max_terms, "series term cap");
    };
    auto add_output = [&](CLI::App* cmd, const std::string& default_format) {
        o.format = default_format;
        cmd->add_option("--format", o.format, "plain, csv or json");
        cmd->add_option("--out", o.out_path, "write output to this file");
    };

    auto* eval = app.add_subcommand("eval", "evaluate W, its derivatives or the normalized form");
    add_params(eval);
    eval->add_option("--x", o.x, "argument(s), comma separated")->required()->delimiter(',');
    eval->add_option("--deriv", o.deriv, "derivative order m");
    eval->add_flag("--normalized", o.normalized, "normalized series instead of W");
    add_output(eval, "plain");

    auto* gamma = app.add_subcommand("gamma", "k-gamma family");
    gamma->add_option("--fn", o.fn, "gamma, lngamma, digamma, trigamma, beta, pochhammer");
    gamma->add_option("--t", o.t, "argument");
    gamma->add_option("--k", o.k, "k > 0");
    gamma->add_option("--x", o.gx, "first beta argument or pochhammer base");
    gamma->add_option("--y", o.gy, "second beta argument");
    gamma->add_option("--n", o.n, "pochhammer length");
    gamma->add_option("--format", o.format, "plain, csv or json");
    gamma->add_option("--out", o.out_path, "write output to this file");

    auto* table = app.add_subcommand("table", "tabulate W and the normalized form over an x grid");
    add_params(table);
    table->add_option("--x-start", o.x_start);
    table->add_option("--x-stop", o.x_stop);
    table->add_option("--x-steps", o.x_steps);
    table->add_option("--format", o.format, "plain, csv or json");
    table->add_option("--out", o.out_path, "write output to this file");

    auto* compare = app.add_subcommand("compare-integral", "series against integral representations");
    compare->add_option("--grid", o.grid, "'default' or a JSON grid file");
    compare->add_option("--paths", o.paths, "cos, cosh, kernel")->delimiter(',');
    compare->add_option("--threads", o.threads);
    compare->add_option("--format", o.format, "csv or json");
    compare->add_option("--out", o.out_path, "write output to this file");

    auto* verify = app.add_subcommand("verify", "run the verification grid");
    verify->add_option("--checks", o.checks, "comma list of checks (default: all)")->delimiter(',');
    verify->add_option("--grid", o.grid, "'default' or a JSON grid file");
    verify->add_option("--threads", o.threads);
    verify->add_option("--format", o.format, "json or csv");
    verify->add_option("--out", o.out_path, "write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        std::ofstream file;
        if (!o.out_path.empty()) {
            file.open(o.out_path);
            if (!file) fail(ErrorKind::InvalidParameter, "cannot open output file '" + o.out_path + "'");
        }
        std::ostream& sink = o.out_path.empty() ? out : file;
        int code = kExitOk;
        if (app.got_subcommand(eval)) cmd_eval(o, sink);
        else if (app.got_subcommand(gamma)) cmd_gamma(o, sink);
        else if (app.got_subcommand(table)) cmd_table(o, sink);
        else if (app.got_subcommand(compare)) code = cmd_compare_integral(o, sink, err);
        else if (app.got_subcommand(verify)) code = cmd_verify(o, sink, err);
        sink.flush();
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

}  // namespace kbessel

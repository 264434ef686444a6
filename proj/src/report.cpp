#include "kbessel/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kbessel/error.hpp"

namespace kbessel {

std::string format_g17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_shortest(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string json_number(double v) { return std::isfinite(v) ? format_g17(v) : "null"; }

namespace {

std::string json_object(const std::vector<NamedValue>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += json_string(values[i].name) + ':' + json_number(values[i].value);
    }
    return out + '}';
}

std::string joined(const std::vector<NamedValue>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += values[i].name + '=' + format_g17(values[i].value);
    }
    return out;
}

}  // namespace

std::string report_to_json(const VerifyReport& r) {
    std::string out = "{\"check\":" + json_string(r.check_name);
    out += ",\"kind\":" + json_string(to_string(r.kind));
    out += ",\"status\":" + json_string(to_string(r.status));
    out += ",\"point\":" + json_object(r.grid_point);
    out += ",\"value\":" + json_number(r.value);
    out += ",\"tolerance\":" + json_number(r.tolerance);
    out += ",\"notes\":" + json_string(r.notes);
    out += ",\"details\":" + json_object(r.details);
    return out + '}';
}

std::string report_csv_header() { return "check,kind,status,point,value,tolerance,notes,details"; }

std::string report_to_csv(const VerifyReport& r) {
    std::string out = csv_field(r.check_name);
    out += ',' + csv_field(to_string(r.kind));
    out += ',' + csv_field(to_string(r.status));
    out += ',' + csv_field(joined(r.grid_point));
    out += ',' + format_g17(r.value);
    out += ',' + format_g17(r.tolerance);
    out += ',' + csv_field(r.notes);
    out += ',' + csv_field(joined(r.details));
    return out;
}

namespace {

std::vector<double> number_list(const nlohmann::json& j, const char* key) {
    if (!j.is_array()) fail(ErrorKind::InvalidParameter, std::string("grid key '") + key + "' must be an array");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) fail(ErrorKind::InvalidParameter, std::string("grid key '") + key + "' must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

GridSpec parse_grid_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::InvalidParameter, std::string("grid file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::InvalidParameter, "grid file must be a JSON object");

    static const char* known[] = {"k", "nu", "c", "alpha", "x", "x_path", "a", "alpha_cvx"};
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* name : known) ok = ok || key == name;
        if (!ok) fail(ErrorKind::InvalidParameter, "unknown grid key '" + key + "'");
    }

    GridSpec g = GridSpec::default_grid();
    if (doc.contains("k")) g.k_values = number_list(doc["k"], "k");
    if (doc.contains("c")) g.c_values = number_list(doc["c"], "c");
    if (doc.contains("alpha")) g.alpha_values = number_list(doc["alpha"], "alpha");
    if (doc.contains("x")) g.x_values = number_list(doc["x"], "x");
    if (doc.contains("x_path")) g.x_path = number_list(doc["x_path"], "x_path");
    if (doc.contains("a")) g.a_values = number_list(doc["a"], "a");
    if (doc.contains("alpha_cvx")) g.alpha_cvx = number_list(doc["alpha_cvx"], "alpha_cvx");
    if (doc.contains("nu")) {
        const auto& nu = doc["nu"];
        if (!nu.is_array()) fail(ErrorKind::InvalidParameter, "grid key 'nu' must be an array");
        g.nu_values.clear();
        for (const auto& v : nu) {
            if (v.is_number()) {
                g.nu_values.push_back(NuValue::absolute(v.get<double>()));
            } else if (v.is_object() && v.contains("k_coef") && v["k_coef"].is_number() &&
                       (!v.contains("offset") || v["offset"].is_number())) {
                g.nu_values.push_back({v["k_coef"].get<double>(), v.value("offset", 0.0)});
            } else {
                fail(ErrorKind::InvalidParameter, "nu entries must be numbers or {\"k_coef\", \"offset\"} objects");
            }
        }
    }
    g.validate();
    return g;
}

GridSpec load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidParameter, "cannot open grid file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid_json(buf.str());
}

}  // namespace kbessel

#pragma once

// Text output for numbers and verification reports, and grid-file parsing.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kbessel/verify.hpp"

namespace kbessel {

/// 17 significant digits ("%.17g"); non-finite values become nan/inf/-inf.
std::string format_g17(double v);

/// Shortest text that parses back to the same double.
std::string format_shortest(double v);

/// RFC-4180 field: quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view s);

/// JSON string literal with escapes.
std::string json_string(std::string_view s);

/// JSON number, or null for non-finite values.
std::string json_number(double v);

std::string report_to_json(const VerifyReport& r);
std::string report_csv_header();
std::string report_to_csv(const VerifyReport& r);

/// Grid file: JSON object with arrays "k", "nu", "c", "alpha", "x",
/// "x_path", "a", "alpha_cvx". Missing keys fall back to the default grid.
/// A "nu" entry is a number or {"k_coef": .., "offset": ..}.
GridSpec parse_grid_json(std::string_view text);
GridSpec load_grid_file(const std::string& path);

}  // namespace kbessel

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kbessel {

enum class ErrorKind {
    InvalidParameter,
    DomainError,
    Overflow,
    NonConvergence,
    QuadratureFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure in the library is reported through this type; no routine
/// returns NaN to signal an error.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace kbessel

#include "kbessel/error.hpp"

namespace kbessel {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    }
    return "Unknown";
}

void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace kbessel

#pragma once

// Classical gamma-function family on the positive real axis. These are the
// building blocks for the k-deformed functions in kgamma.hpp.

namespace kbessel {

/// Euler–Mascheroni constant, 20 significant digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// ln Γ(x) for x > 0. Stirling series after upward shifting to x >= 12.
double log_gamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
double digamma(double x);

/// ψ'(x) for x > 0.
double trigamma(double x);

}  // namespace kbessel

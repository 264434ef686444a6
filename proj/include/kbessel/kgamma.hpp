#pragma once

// k-deformed gamma family: Γ_k(t) = ∫₀^∞ s^{t-1} exp(-s^k/k) ds and the
// functions derived from it. Everything is evaluated through the classical
// functions via Γ_k(t) = k^{t/k - 1} Γ(t/k).

#include <cstdint>

namespace kbessel {

/// x (x+k) (x+2k) ... (x+(n-1)k); 1 for n = 0.
double k_pochhammer(double x, std::uint32_t n, double k);

/// ln Γ_k(t), t > 0. Stays finite where Γ_k itself overflows.
double ln_k_gamma(double t, double k);

/// Γ_k(t) for t in (-k, 0) ∪ (0, ∞). Negative arguments use one step of
/// Γ_k(t) = Γ_k(t + k) / t. Throws Overflow rather than returning inf.
double k_gamma(double t, double k);

/// Ψ_k(t) = Γ_k'(t) / Γ_k(t) = (ln k)/k + ψ(t/k)/k, t > 0.
double k_digamma(double t, double k);

/// Ψ_k'(t) = Σ_{n≥0} 1/(nk + t)² = ψ'(t/k)/k², t > 0.
double k_trigamma(double t, double k);

/// B_k(x, y) = Γ_k(x) Γ_k(y) / Γ_k(x + y), x, y > 0.
double k_beta(double x, double y, double k);

/// Throws InvalidParameter unless k is finite and positive.
void require_valid_k(double k);

}  // namespace kbessel

#pragma once
#include <cstdint>

#include "syk/hamiltonian.hpp"

namespace syk {

enum class Extreme { max, min };

struct LanczosOptions {
    double tol = 1e-8;                         // Ritz-change and residual threshold
    int max_iter = 300;                        // Krylov dimension budget
    std::uint64_t start_seed = 0xC0FFEEULL;    // start-vector stream, mixed with h.seed
    std::size_t matrix_free_cap = 1ull << 16;  // largest dim we will iterate on
};

struct LanczosResult {
    double value = 0.0;
    double residual = 0.0; // |beta_k * (bottom Ritz-vector component)|
    int iterations = 0;
};

// Extreme eigenvalue by Lanczos with full reorthogonalization on the
// matrix-free apply.  Deterministic: seeded start vector, serial reductions.
// Throws numeric_error (carrying the best estimate and residual) when the
// iteration budget runs out before both the Ritz value stabilizes to tol and
// the residual bound drops below tol * max(1, |value|).
LanczosResult lanczos_extreme(const Hamiltonian& h, Extreme which, const LanczosOptions& opt = {});

} // namespace syk

#pragma once
#include <cstdint>
#include <vector>

#include "syk/couplings.hpp"
#include "syk/spectra.hpp"

namespace syk {

// Real antisymmetric coupling matrix (J_ji = -J_ij, zero diagonal), dense
// row-major; n even.
struct AntisymmetricMatrix {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<double> a; // n*n entries
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

// B from a q=2 coupling tensor: value of pair {i<j} goes to B_{ij} = J_{ij},
// antisymmetrized.  Seed-identical to the Hamiltonian route by construction.
AntisymmetricMatrix antisymmetric_from_couplings(const CouplingTensor& t);
AntisymmetricMatrix sample_antisymmetric(int n, Dist dist, std::uint64_t seed);

// mu_j >= 0 with the eigenvalues of B being +-i*mu_j; descending, length n/2.
// Computed as the nonnegative eigenvalues of the Hermitian matrix iB; the
// exact +- pairing is asserted to 1e-10 * max|mu|.
std::vector<double> mu_spectrum(const AntisymmetricMatrix& b);

// binom(n,2)^{-1/2} * sum_j mu_j — the largest SYK eigenvalue at q = 2.
double q2_lambda_max(const AntisymmetricMatrix& b);

// All 2^{n/2} eigenvalues binom(n,2)^{-1/2} * sum_j (+-mu_j), every sign
// pattern; equals the dense q=2 spectrum of the same couplings.
EmpiricalMeasure q2_full_spectrum(const AntisymmetricMatrix& b, int n_cap = 24);

struct SemicircleCheck {
    double ks = 0.0;        // KS distance of pooled +-mu_j/sqrt(n-1) to the semicircle
    double mean_sq = 0.0;   // <x^2> of the pooled measure (expectation: exactly 1)
    double mean_abs = 0.0;  // <|x|>, limit 8/(3*pi)
    std::uint64_t pooled = 0;
};
// Gaussian ensemble of antisymmetric matrices; pools the scaled +-mu values.
SemicircleCheck antisymmetric_semicircle_check(int n, int samples, std::uint64_t seed);

} // namespace syk

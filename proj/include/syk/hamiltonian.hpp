#pragma once
#include <complex>
#include <cstdint>
#include <vector>

#include "syk/couplings.hpp"
#include "syk/pauli.hpp"

namespace syk {

using cplx = std::complex<double>;
using StateVector = std::vector<cplx>;

struct HamTerm {
    double coeff = 0.0;  // real by construction (Hermiticity is structural)
    PauliString str;     // phase_exp always 0
};

// H = i^{q/2} binom(n,q)^{-1/2} sum_R J_R Psi_R (even q), i^{(q-1)/2} for odd q.
// The i-prefactor times each Psi_R's canonical phase lands in {+1,-1} and is
// absorbed into coeff.  Terms are usable matrix-free through the packed kernel
// arrays (split by i^{#Y} being real or imaginary) or materialized densely.
struct Hamiltonian {
    int n = 0;
    int q = 0;
    std::uint64_t seed = 0; // coupling-tensor seed, carried as measure metadata
    std::vector<HamTerm> terms;

    // flattened apply kernel: [0, imag_begin) carry real factors c = coeff*(+-1),
    // [imag_begin, end) carry imaginary factors i*c
    struct Kernel {
        std::vector<std::uint32_t> x, z;
        std::vector<double> c;
        std::size_t imag_begin = 0;
    } kernel;

    int sites() const { return n / 2; }
    std::size_t dim() const { return std::size_t{1} << (n / 2); }
};

Hamiltonian build_hamiltonian(const CouplingTensor& J);

// w = H v, gather form: w[i] = sum_t factor_t(i) v[i ^ x_t].  No write
// conflicts, so the parallel version is bit-identical to the serial one.
void apply_serial(const Hamiltonian& h, const cplx* v, cplx* w);
void apply_parallel(const Hamiltonian& h, const cplx* v, cplx* w);
StateVector apply(const Hamiltonian& h, const StateVector& v);

// Exact dense materialization, row-major dim x dim.
std::vector<cplx> dense_matrix(const Hamiltonian& h, std::size_t cap_dim = 4096);

// tilde-H = i^{n/2-q} psi_1...psi_n H: the (n-q)-body dual with H^2 = tilde-H^2.
Hamiltonian dual_hamiltonian(const Hamiltonian& h);

// Z(beta) = sum_j e^{-beta lambda_j}; log variant is max-shifted so it stays
// finite when Z itself would overflow.
double partition_function(const std::vector<double>& spectrum, double beta);
double log_partition_function(const std::vector<double>& spectrum, double beta);

} // namespace syk

#pragma once
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "syk/errors.hpp"

namespace syk {

// Signed tensor product of single-site Pauli operators on `sites` qubits.
// Site s carries P(x_s,z_s) = i^{x_s z_s} X^{x_s} Z^{z_s}, so the both-bits
// string is exactly Y and every canonical site factor is Hermitian.  The whole
// string is scaled by the global phase i^{phase_exp}.  Phase is an exponent
// mod 4, never a float, so products and traces stay exact.
struct PauliString {
    int sites = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    int phase_exp = 0; // power of i, in {0,1,2,3}
    friend bool operator==(const PauliString&, const PauliString&) = default;
};

PauliString identity_string(int sites);

// i^k for integer k (any sign).
std::complex<double> i_power(long long k);

// Jordan-Wigner Majorana mode i in [1,n] on n/2 sites (n even):
//   psi_{2k-1} = Z^{otimes(k-1)} X,   psi_{2k} = Z^{otimes(k-1)} Y.
// All spectra downstream are invariant under the choice of Clifford
// representation; this one has O(1) mask construction.
PauliString majorana(int i, int n);

// Matrix product a*b with exact mod-4 phase bookkeeping.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

// Sorted distinct mode indices in [1,n]; the sets A and R of the trace rules.
struct MajoranaIndexSet {
    int n = 0;
    std::vector<int> indices;
    MajoranaIndexSet(int n_, std::vector<int> idx);
};

// Psi_R = psi_{i_1} ... psi_{i_m} (left-to-right); empty set gives identity.
PauliString majorana_product(const MajoranaIndexSet& R);

// (1/2^sites) Tr P: i^{phase_exp} when both masks vanish, else exactly 0.
std::complex<double> normalized_trace(const PauliString& P);

// Canonical site factors are Hermitian, so hermiticity is a phase question.
bool is_hermitian(const PauliString& P);

// Row-major 2^sites x 2^sites materialization; oracle/test use only.
std::vector<std::complex<double>> dense_matrix_of(const PauliString& P, int cap_sites = 12);

// Checks the trace-sign identity for a pair partition of {1..k} and k/2 mode
// sets of size q: the symbolic value of
//   i^{qk/2} (1/L) Tr Psi_{R_{pi(1)}} ... Psi_{R_{pi(k)}}
// against (-1)^{sum over crossings |R_r cap R_s|}.  Blocks are matched to
// `sets` in order of their smallest element.  With odd_variant (odd q), the
// prefactor exponent is (q-1)k/2 and each crossing contributes |R_r cap R_s|+1.
bool trace_sign_check(const std::vector<std::pair<int, int>>& pairing,
                      const std::vector<MajoranaIndexSet>& sets,
                      int q, bool odd_variant = false);

} // namespace syk

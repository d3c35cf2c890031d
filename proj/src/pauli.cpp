#include "syk/pauli.hpp"

#include <algorithm>
#include <stdexcept>

#include "syk/bits.hpp"

namespace syk {

PauliString identity_string(int sites) {
    if (sites < 0 || sites > 63) throw std::invalid_argument("identity_string: bad site count");
    return PauliString{sites, 0, 0, 0};
}

std::complex<double> i_power(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

PauliString majorana(int i, int n) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("majorana: n must be positive even");
    if (i < 1 || i > n) throw std::invalid_argument("majorana: mode index out of range");
    const int site = (i - 1) / 2; // 0-based qubit the X/Y lands on
    PauliString p;
    p.sites = n / 2;
    p.x_mask = 1ULL << site;
    // odd mode: Z-string below an X; even mode: Z-string below a Y (z bit also at `site`)
    p.z_mask = (i % 2 == 1) ? ((1ULL << site) - 1) : ((2ULL << site) - 1);
    p.phase_exp = 0;
    return p;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    if (a.sites != b.sites) throw std::invalid_argument("pauli_mul: site count mismatch");
    PauliString r;
    r.sites = a.sites;
    r.x_mask = a.x_mask ^ b.x_mask;
    r.z_mask = a.z_mask ^ b.z_mask;
    // Per site: i^{x1z1} X^{x1}Z^{z1} i^{x2z2} X^{x2}Z^{z2}
    //         = i^{x1z1 + x2z2 + 2 z1x2 - x3z3} * canonical(x3, z3).
    const int g = popcount64(a.x_mask & a.z_mask) + popcount64(b.x_mask & b.z_mask)
                + 2 * popcount64(a.z_mask & b.x_mask)
                - popcount64(r.x_mask & r.z_mask);
    r.phase_exp = ((a.phase_exp + b.phase_exp + g) % 4 + 4) % 4;
    return r;
}

MajoranaIndexSet::MajoranaIndexSet(int n_, std::vector<int> idx) : n(n_), indices(std::move(idx)) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("MajoranaIndexSet: n must be positive even");
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 1 || indices[j] > n) throw std::invalid_argument("MajoranaIndexSet: index out of range");
        if (j > 0 && indices[j] <= indices[j - 1])
            throw std::invalid_argument("MajoranaIndexSet: indices must be strictly increasing");
    }
}

PauliString majorana_product(const MajoranaIndexSet& R) {
    PauliString p = identity_string(R.n / 2);
    for (int i : R.indices) p = pauli_mul(p, majorana(i, R.n));
    return p;
}

std::complex<double> normalized_trace(const PauliString& P) {
    if (P.x_mask == 0 && P.z_mask == 0) return i_power(P.phase_exp);
    return {0.0, 0.0};
}

bool is_hermitian(const PauliString& P) {
    return P.phase_exp == 0 || P.phase_exp == 2;
}

std::vector<std::complex<double>> dense_matrix_of(const PauliString& P, int cap_sites) {
    if (P.sites > cap_sites) throw resource_limit_error("dense_matrix_of: site count exceeds cap");
    const std::size_t dim = std::size_t{1} << P.sites;
    std::vector<std::complex<double>> m(dim * dim, {0.0, 0.0});
    const std::complex<double> base = i_power(P.phase_exp + popcount64(P.x_mask & P.z_mask));
    for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t r = c ^ P.x_mask;
        const double sign = parity64(P.z_mask & c) ? -1.0 : 1.0;
        m[r * dim + c] = sign * base;
    }
    return m;
}

namespace {
// crossing test for two blocks (a<b), (c<d): a<c<b<d or c<a<d<b
bool blocks_cross(std::pair<int, int> u, std::pair<int, int> v) {
    return (u.first < v.first && v.first < u.second && u.second < v.second) ||
           (v.first < u.first && u.first < v.second && v.second < u.second);
}
} // namespace

bool trace_sign_check(const std::vector<std::pair<int, int>>& pairing,
                      const std::vector<MajoranaIndexSet>& sets,
                      int q, bool odd_variant) {
    if (q < 1) throw std::invalid_argument("trace_sign_check: q must be >= 1");
    if (q % 2 != 0 && !odd_variant)
        throw std::invalid_argument("trace_sign_check: odd q requires the odd variant");
    if (q % 2 == 0 && odd_variant)
        throw std::invalid_argument("trace_sign_check: odd variant requires odd q");
    if (pairing.empty() || sets.size() != pairing.size())
        throw std::invalid_argument("trace_sign_check: need one mode set per block");

    const int k = 2 * static_cast<int>(pairing.size());
    const int n = sets.front().n;
    for (const auto& s : sets) {
        if (s.n != n || static_cast<int>(s.indices.size()) != q)
            throw std::invalid_argument("trace_sign_check: all sets must have size q on common n");
    }

    // normalize blocks, match them to sets in order of smallest element
    std::vector<std::pair<int, int>> blocks(pairing);
    for (auto& b : blocks)
        if (b.first > b.second) std::swap(b.first, b.second);
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> block_of(k + 1, -1);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        auto [a, b] = blocks[j];
        if (a < 1 || b > k || a == b || block_of[a] != -1 || block_of[b] != -1)
            throw std::invalid_argument("trace_sign_check: not a pair partition of 1..k");
        block_of[a] = block_of[b] = static_cast<int>(j);
    }

    PauliString prod = identity_string(n / 2);
    for (int pos = 1; pos <= k; ++pos)
        prod = pauli_mul(prod, majorana_product(sets[block_of[pos]]));

    const long long pref = static_cast<long long>(q % 2 == 0 ? q : q - 1) * k / 2;
    const std::complex<double> lhs = i_power(pref) * normalized_trace(prod);

    long long expo = 0;
    for (std::size_t r = 0; r < blocks.size(); ++r) {
        for (std::size_t s = r + 1; s < blocks.size(); ++s) {
            if (!blocks_cross(blocks[r], blocks[s])) continue;
            const auto& a = sets[r].indices;
            const auto& b = sets[s].indices;
            std::size_t ia = 0, ib = 0;
            long long isect = 0;
            while (ia < a.size() && ib < b.size()) {
                if (a[ia] < b[ib]) ++ia;
                else if (a[ia] > b[ib]) ++ib;
                else { ++isect; ++ia; ++ib; }
            }
            expo += isect + (odd_variant ? 1 : 0);
        }
    }
    const std::complex<double> rhs = (expo % 2 == 0) ? 1.0 : -1.0;
    return lhs == rhs; // both sides are exact integers in the complex plane
}

} // namespace syk

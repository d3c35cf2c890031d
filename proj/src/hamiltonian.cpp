#include "syk/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "syk/bits.hpp"
#include "syk/subsets.hpp"

namespace syk {

namespace {

// Split terms into real-factor and imaginary-factor groups: the term's matrix
// elements are coeff * i^{#Y} * (+-1), and i^{#Y} is +-1 or +-i.
void finalize_kernel(Hamiltonian& h) {
    auto& k = h.kernel;
    k.x.clear();
    k.z.clear();
    k.c.clear();
    k.x.reserve(h.terms.size());
    k.z.reserve(h.terms.size());
    k.c.reserve(h.terms.size());
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& t : h.terms) {
            const int y = popcount64(t.str.x_mask & t.str.z_mask) & 3;
            const bool imag = y & 1;
            if (imag != (pass == 1)) continue;
            k.x.push_back(static_cast<std::uint32_t>(t.str.x_mask));
            k.z.push_back(static_cast<std::uint32_t>(t.str.z_mask));
            k.c.push_back((y == 0 || y == 1) ? t.coeff : -t.coeff);
        }
        if (pass == 0) k.imag_begin = k.c.size();
    }
}

} // namespace

Hamiltonian build_hamiltonian(const CouplingTensor& J) {
    if (J.n <= 0 || J.n % 2 != 0 || J.n > 64) throw std::invalid_argument("build_hamiltonian: bad n");
    if (J.q < 1 || J.q >= J.n) throw std::invalid_argument("build_hamiltonian: need 1 <= q < n");
    const std::uint64_t count = binomial_u64(J.n, J.q);
    if (J.values.size() != count) throw std::invalid_argument("build_hamiltonian: coupling length mismatch");

    Hamiltonian h;
    h.n = J.n;
    h.q = J.q;
    h.seed = J.seed;
    h.terms.reserve(count);
    const double norm = 1.0 / std::sqrt(static_cast<double>(count));
    const int pref = (J.q % 2 == 0 ? J.q / 2 : (J.q - 1) / 2) % 4;

    for (std::uint64_t r = 0; r < count; ++r) {
        PauliString s = majorana_product({J.n, colex_unrank(r, J.n, J.q)});
        const int tot = (pref + s.phase_exp) % 4;
        // Eq-(1)/(5) prefactor times the canonical phase of Psi_R must be real
        if (tot % 2 != 0) throw std::logic_error("build_hamiltonian: term phase not +-1 (representation bug)");
        s.phase_exp = 0;
        h.terms.push_back({J.values[r] * norm * (tot == 0 ? 1.0 : -1.0), s});
    }
    finalize_kernel(h);
    return h;
}

namespace {

inline void apply_row(const Hamiltonian::Kernel& k, const cplx* v, cplx* w, std::size_t i) {
    const std::uint32_t* xs = k.x.data();
    const std::uint32_t* zs = k.z.data();
    const double* cs = k.c.data();
    const std::size_t nr = k.imag_begin, nt = k.c.size();
    double ar = 0.0, ai = 0.0;
    for (std::size_t t = 0; t < nr; ++t) {
        const std::size_t j = i ^ xs[t];
        const double c = parity64(zs[t] & j) ? -cs[t] : cs[t];
        ar += c * v[j].real();
        ai += c * v[j].imag();
    }
    for (std::size_t t = nr; t < nt; ++t) {
        const std::size_t j = i ^ xs[t];
        const double c = parity64(zs[t] & j) ? -cs[t] : cs[t];
        ar -= c * v[j].imag(); // factor i*c
        ai += c * v[j].real();
    }
    w[i] = {ar, ai};
}

} // namespace

void apply_serial(const Hamiltonian& h, const cplx* v, cplx* w) {
    const std::size_t dim = h.dim();
    for (std::size_t i = 0; i < dim; ++i) apply_row(h.kernel, v, w, i);
}

void apply_parallel(const Hamiltonian& h, const cplx* v, cplx* w) {
    const std::size_t dim = h.dim();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < dim; ++i) apply_row(h.kernel, v, w, i);
}

StateVector apply(const Hamiltonian& h, const StateVector& v) {
    if (v.size() != h.dim()) throw std::invalid_argument("apply: dimension mismatch");
    StateVector w(v.size());
    apply_parallel(h, v.data(), w.data());
    return w;
}

std::vector<cplx> dense_matrix(const Hamiltonian& h, std::size_t cap_dim) {
    const std::size_t dim = h.dim();
    if (dim > cap_dim) throw resource_limit_error("dense_matrix: dimension exceeds dense cap");
    std::vector<cplx> m(dim * dim, cplx{0.0, 0.0});
#pragma omp parallel for schedule(static)
    for (std::size_t col = 0; col < dim; ++col) {
        for (const auto& t : h.terms) {
            const std::size_t row = col ^ t.str.x_mask;
            const int y = popcount64(t.str.x_mask & t.str.z_mask);
            cplx val = t.coeff * i_power(y);
            if (parity64(t.str.z_mask & col)) val = -val;
            m[row * dim + col] += val;
        }
    }
    return m;
}

Hamiltonian dual_hamiltonian(const Hamiltonian& h) {
    if (h.q % 2 != 0) throw std::invalid_argument("dual_hamiltonian: duality requires even q");
    std::vector<int> all(h.n);
    for (int i = 0; i < h.n; ++i) all[i] = i + 1;
    const PauliString full = majorana_product({h.n, all});
    const int ge = ((h.n / 2 - h.q) % 4 + 4) % 4;

    Hamiltonian d;
    d.n = h.n;
    d.q = h.n - h.q;
    d.terms.reserve(h.terms.size());
    for (const auto& t : h.terms) {
        PauliString s = pauli_mul(full, t.str);
        const int tot = (ge + s.phase_exp) % 4;
        if (tot % 2 != 0) throw std::logic_error("dual_hamiltonian: term phase not +-1 (representation bug)");
        s.phase_exp = 0;
        d.terms.push_back({t.coeff * (tot == 0 ? 1.0 : -1.0), s});
    }
    finalize_kernel(d);
    return d;
}

double log_partition_function(const std::vector<double>& spectrum, double beta) {
    if (spectrum.empty()) throw std::invalid_argument("partition_function: empty spectrum");
    double shift = -beta * spectrum.front();
    for (double lam : spectrum) shift = std::max(shift, -beta * lam);
    double acc = 0.0;
    for (double lam : spectrum) acc += std::exp(-beta * lam - shift);
    return shift + std::log(acc);
}

double partition_function(const std::vector<double>& spectrum, double beta) {
    if (spectrum.empty()) throw std::invalid_argument("partition_function: empty spectrum");
    double shift = -beta * spectrum.front();
    for (double lam : spectrum) shift = std::max(shift, -beta * lam);
    double acc = 0.0;
    for (double lam : spectrum) acc += std::exp(-beta * lam - shift);
    return std::exp(shift) * acc;
}

} // namespace syk

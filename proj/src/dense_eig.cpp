#include "syk/dense_eig.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

#include "syk/bits.hpp"
#include "syk/errors.hpp"

namespace syk {

namespace {

// A row-major Hermitian buffer reinterpreted column-major is the (elementwise)
// conjugate matrix — same spectrum, conjugated eigenvectors.  We exploit that
// instead of transposing.
std::vector<double> zheevd_colmajor(char jobz, cplx* a, std::size_t dim) {
    if (dim == 0) return {};
    if (dim > 46340) throw resource_limit_error("dense eigensolve dimension too large");
    const lapack_int n = static_cast<lapack_int>(dim);
    std::vector<double> w(dim);
    const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, jobz, 'L', n,
                                           reinterpret_cast<lapack_complex_double*>(a), n, w.data());
    if (info != 0)
        throw numeric_error("zheevd failed with info = " + std::to_string(info), 0.0, 0.0);
    return w;
}

} // namespace

std::vector<double> hermitian_eigenvalues_inplace(cplx* a, std::size_t dim) {
    return zheevd_colmajor('N', a, dim);
}

std::vector<double> hermitian_eigenpairs_inplace(cplx* a, std::size_t dim) {
    auto w = zheevd_colmajor('V', a, dim);
    // columns of conj(H)'s eigenbasis live in the rows of the row-major buffer;
    // conjugate to get H's eigenvectors
    for (std::size_t i = 0; i < dim * dim; ++i) a[i] = std::conj(a[i]);
    return w;
}

std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
    if (e.size() + 1 != d.size() && !(d.empty() && e.empty()))
        throw std::invalid_argument("tridiag: off-diagonal must have length n-1");
    if (d.empty()) return {};
    const lapack_int n = static_cast<lapack_int>(d.size());
    const lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'N', n, d.data(), e.data(), nullptr, n);
    if (info != 0)
        throw numeric_error("dstev failed with info = " + std::to_string(info), 0.0, 0.0);
    return d;
}

TridiagPairs tridiag_eigenpairs(std::vector<double> d, std::vector<double> e) {
    if (e.size() + 1 != d.size() && !(d.empty() && e.empty()))
        throw std::invalid_argument("tridiag: off-diagonal must have length n-1");
    TridiagPairs out;
    if (d.empty()) return out;
    const lapack_int n = static_cast<lapack_int>(d.size());
    std::vector<double> zmat(d.size() * d.size());
    const lapack_int info =
        LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', n, d.data(), e.data(), zmat.data(), n);
    if (info != 0)
        throw numeric_error("dstev failed with info = " + std::to_string(info), 0.0, 0.0);
    out.values = std::move(d);
    out.last_components.resize(out.values.size());
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.last_components[k] = zmat[(k + 1) * out.values.size() - 1]; // bottom entry of column k
    return out;
}

bool parity_sector_applicable(const Hamiltonian& h) { return h.q % 2 == 0 && h.sites() >= 2; }

std::vector<double> parity_sector_eigenvalues(const Hamiltonian& h, int parity) {
    if (!parity_sector_applicable(h))
        throw std::invalid_argument("parity sectors require even q (and at least 2 sites)");
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    const std::size_t dim = h.dim();
    const std::size_t half = dim / 2;
    // sector basis: words w with popcount parity p, indexed by u = w >> 1
    // (bit 0 is determined: w = (u << 1) | (parity(u) ^ p))
    std::vector<cplx> m(half * half, cplx{0.0, 0.0});
    const auto p = static_cast<std::uint64_t>(parity);
#pragma omp parallel for schedule(static)
    for (long long uc = 0; uc < static_cast<long long>(half); ++uc) {
        const std::uint64_t col = static_cast<std::uint64_t>(uc);
        const std::uint64_t w_col = (col << 1) | (parity64(col) ^ p);
        for (const HamTerm& t : h.terms) {
            const std::uint64_t w_row = w_col ^ t.str.x_mask;
            const std::uint64_t row = w_row >> 1;
            const int y = popcount64(t.str.x_mask & t.str.z_mask);
            cplx v = t.coeff * i_power(y);
            if (parity64(t.str.z_mask & w_col)) v = -v;
            m[row * half + col] += v;
        }
    }
    return hermitian_eigenvalues_inplace(m.data(), half);
}

} // namespace syk

#include "syk/lanczos.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "syk/bits.hpp"
#include "syk/dense_eig.hpp"
#include "syk/errors.hpp"

namespace syk {

namespace {

// serial reductions on purpose: bit-identical results regardless of thread count
cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const std::vector<cplx>& a) {
    double s = 0.0;
    for (const cplx& v : a) s += std::norm(v);
    return std::sqrt(s);
}

void axpy(const cplx& alpha, const std::vector<cplx>& x, std::vector<cplx>& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

} // namespace

LanczosResult lanczos_extreme(const Hamiltonian& h, Extreme which, const LanczosOptions& opt) {
    const std::size_t dim = h.dim();
    if (dim > opt.matrix_free_cap)
        throw resource_limit_error("lanczos: dimension exceeds the matrix-free cap");
    if (opt.max_iter < 2) throw std::invalid_argument("lanczos: max_iter must be >= 2");

    std::mt19937_64 rng(derive_seed(opt.start_seed, h.seed));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<cplx>> basis;
    basis.emplace_back(dim);
    for (cplx& v : basis[0]) v = cplx{gauss(rng), gauss(rng)};
    {
        const double nv = norm(basis[0]);
        for (cplx& v : basis[0]) v /= nv;
    }

    std::vector<double> alphas, betas;
    std::vector<cplx> w(dim);
    double prev_theta = 0.0;
    bool have_prev = false;
    double best_theta = 0.0, best_res = 0.0;

    for (int k = 0; k < opt.max_iter; ++k) {
        apply_parallel(h, basis[k].data(), w.data());
        const double alpha = dot(basis[k], w).real(); // imaginary part is 0 for Hermitian H
        alphas.push_back(alpha);
        axpy(cplx{-alpha, 0.0}, basis[k], w);
        if (k > 0) axpy(cplx{-betas[k - 1], 0.0}, basis[k - 1], w);
        // full reorthogonalization against the entire basis (kills ghost pairs)
        for (const auto& qv : basis) {
            const cplx c = dot(qv, w);
            axpy(-c, qv, w);
        }
        const double beta = norm(w);

        // Ritz step on the current tridiagonal
        TridiagPairs tp = tridiag_eigenpairs(alphas, betas);
        const std::size_t idx = which == Extreme::max ? tp.values.size() - 1 : 0;
        const double theta = tp.values[idx];
        const double res = std::abs(beta * tp.last_components[idx]);
        best_theta = theta;
        best_res = res;
        const double scale = std::max(1.0, std::abs(theta));
        const bool ritz_settled = have_prev && std::abs(theta - prev_theta) <= opt.tol * scale;
        if (ritz_settled && res <= opt.tol * scale)
            return LanczosResult{theta, res, k + 1};
        if (beta <= 1e-13 * scale) // exact invariant subspace: Ritz values are exact
            return LanczosResult{theta, res, k + 1};
        prev_theta = theta;
        have_prev = true;

        betas.push_back(beta);
        basis.emplace_back(dim);
        for (std::size_t i = 0; i < dim; ++i) basis.back()[i] = w[i] / beta;
    }
    throw numeric_error("lanczos: no convergence within max_iter", best_theta, best_res);
}

} // namespace syk

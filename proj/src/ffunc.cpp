#include "syk/ffunc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "syk/errors.hpp"

namespace syk {

ExactInteger binomial_exact(long n, long k) {
    if (k < 0 || k > n) return 0;
    ExactInteger r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

ExactRational f_alternating(long p, long q, long m) {
    if (m < 1 || p < 0 || p > m || q < 0 || q > m)
        throw std::invalid_argument("f_alternating requires 0 <= p,q <= m, m >= 1");
    ExactInteger num = 0;
    const long lo = std::max(0L, q - (m - p));
    const long hi = std::min(p, q);
    for (long k = lo; k <= hi; ++k) {
        ExactInteger term = binomial_exact(p, k) * binomial_exact(m - p, q - k);
        if (k & 1) num -= term; else num += term;
    }
    ExactRational f(num, binomial_exact(m, q));
    f.canonicalize();
    return f;
}

FBoundReport f_bound_check(int m_max) {
    if (m_max < 1) throw std::invalid_argument("f_bound_check requires m_max >= 1");
    if (m_max > 60) throw resource_limit_error("f_bound_check sweep capped at m_max = 60");
    FBoundReport rep;
    for (long m = 1; m <= m_max; ++m)
        for (long p = 0; p <= m; ++p)
            for (long q = 0; q <= m; ++q) {
                ExactRational f = abs(f_alternating(p, q, m));
                const double af = f.get_d();
                const double expo =
                    static_cast<double>(std::min(p, m - p)) * static_cast<double>(std::min(q, m - q)) / (2.0 * m);
                const double bound = std::exp(-expo);
                const double ratio = af / bound;
                ++rep.cases_checked;
                if (ratio > rep.max_ratio) {
                    rep.max_ratio = ratio;
                    rep.worst = FBoundRow{p, q, m, af, bound, ratio};
                }
                // equality holds when either argument pins |F| = 1 (exponent 0);
                // allow only rounding slack beyond that
                if (ratio > 1.0 + 1e-12) rep.all_pass = false;
            }
    return rep;
}

} // namespace syk

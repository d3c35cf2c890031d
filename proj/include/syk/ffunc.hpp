#pragma once
#include <vector>

#include "syk/rational.hpp"

namespace syk {

// F(p,q,m) = sum_k (-1)^k C(p,k) C(m-p,q-k) / C(m,q), exact.
// Requires 0 <= p,q <= m.
ExactRational f_alternating(long p, long q, long m);

struct FBoundRow {
    long p, q, m;
    double abs_f;    // |F(p,q,m)|
    double bound;    // exp(-min(p,m-p)min(q,m-q)/(2m))
    double ratio;    // abs_f / bound
};

struct FBoundReport {
    bool all_pass = true;
    double max_ratio = 0.0;
    FBoundRow worst{};
    long cases_checked = 0;
};

// Sweeps every (p,q,m) with 1 <= m <= m_max, checking |F| <= exp(-min(p,m-p)min(q,m-q)/(2m)).
// m_max <= 60 keeps the sweep O(m_max^3) exact-rational evaluations.
FBoundReport f_bound_check(int m_max);

} // namespace syk

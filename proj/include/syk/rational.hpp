#pragma once
#include <gmpxx.h>

namespace syk {

// Exact arithmetic for the alternating binomial sums; GMP rationals keep the
// cancellation-heavy sums exact for any m we care about.
using ExactRational = mpq_class;
using ExactInteger = mpz_class;

ExactInteger binomial_exact(long n, long k);

} // namespace syk

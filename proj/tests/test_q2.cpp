#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "syk/q2.hpp"
#include "syk/subsets.hpp"

using namespace syk;

TEST_CASE("mu_spectrum: two-by-two closed form and block diagonal") {
    AntisymmetricMatrix b;
    b.n = 2;
    b.a = {0, -1.7, 1.7, 0};
    const auto mu = mu_spectrum(b);
    REQUIRE(mu.size() == 1);
    CHECK(mu[0] == doctest::Approx(1.7).epsilon(1e-13));

    AntisymmetricMatrix b2;
    b2.n = 4;
    b2.a.assign(16, 0.0);
    b2.at(0, 1) = 0.4;
    b2.at(1, 0) = -0.4;
    b2.at(2, 3) = -2.2;
    b2.at(3, 2) = 2.2;
    const auto mu2 = mu_spectrum(b2);
    REQUIRE(mu2.size() == 2);
    CHECK(mu2[0] == doctest::Approx(2.2).epsilon(1e-13)); // descending
    CHECK(mu2[1] == doctest::Approx(0.4).epsilon(1e-13));
}

TEST_CASE("mu_spectrum: Frobenius identity and +- pairing on random matrices") {
    for (int n : {6, 10, 16}) {
        const auto t = sample_couplings(n, 2, Dist::gaussian, 400 + n);
        const auto b = antisymmetric_from_couplings(t);
        // antisymmetry is exact
        for (int i = 0; i < n; ++i) {
            CHECK(b.at(i, i) == 0.0);
            for (int j = 0; j < n; ++j) CHECK(b.at(i, j) == -b.at(j, i));
        }
        const auto mu = mu_spectrum(b);
        REQUIRE(mu.size() == static_cast<std::size_t>(n / 2));
        double mu_sq = 0, j_sq = 0;
        for (double m : mu) {
            CHECK(m >= 0.0);
            mu_sq += m * m;
        }
        for (double v : t.values) j_sq += v * v;
        CHECK(mu_sq == doctest::Approx(j_sq).epsilon(1e-10));
        CHECK(std::is_sorted(mu.rbegin(), mu.rend()));
    }
    AntisymmetricMatrix odd;
    odd.n = 3;
    odd.a.assign(9, 0.0);
    CHECK_THROWS_AS(mu_spectrum(odd), std::invalid_argument);
}

TEST_CASE("q2_lambda_max: normalized mu sum, exact max of the sign-pattern spectrum") {
    const auto b = sample_antisymmetric(12, Dist::gaussian, 99);
    const auto mu = mu_spectrum(b);
    double expect = 0;
    for (double m : mu) expect += m;
    expect /= std::sqrt(binomial_d(12, 2));
    const double lmax = q2_lambda_max(b);
    CHECK(lmax == doctest::Approx(expect).epsilon(1e-14));
    const auto full = q2_full_spectrum(b);
    CHECK(full.eigenvalues.back() == lmax); // bitwise: same accumulation order

    AntisymmetricMatrix zero;
    zero.n = 8;
    zero.a.assign(64, 0.0);
    CHECK(q2_lambda_max(zero) == 0.0);
    for (double ev : q2_full_spectrum(zero).eigenvalues) CHECK(ev == 0.0);
}

TEST_CASE("q2_full_spectrum: sign-pattern enumeration and exact symmetry") {
    const auto b = sample_antisymmetric(10, Dist::rademacher, 1717);
    const auto m = q2_full_spectrum(b);
    REQUIRE(m.eigenvalues.size() == 32);
    CHECK(m.n == 10);
    CHECK(m.q == 2);
    CHECK(m.seed == 1717);
    const std::size_t L = m.eigenvalues.size();
    for (std::size_t i = 0; i < L; ++i)
        CHECK(m.eigenvalues[i] == -m.eigenvalues[L - 1 - i]); // exact sign-flip bijection

    AntisymmetricMatrix big;
    big.n = 26;
    big.a.assign(26 * 26, 0.0);
    CHECK_THROWS_AS(q2_full_spectrum(big), resource_limit_error);
    CHECK_NOTHROW(q2_full_spectrum(big, 26));
}

TEST_CASE("q2 route equals the Hamiltonian route, same seed") {
    for (int n : {8, 12, 16}) {
        const auto t = sample_couplings(n, 2, Dist::gaussian, 2222 + n);
        const auto closed = q2_full_spectrum(antisymmetric_from_couplings(t));
        const auto dense = full_spectrum(build_hamiltonian(t));
        REQUIRE(closed.eigenvalues.size() == dense.eigenvalues.size());
        const double scale =
            std::max(1.0, std::max(std::abs(dense.eigenvalues.front()), dense.eigenvalues.back()));
        for (std::size_t i = 0; i < closed.eigenvalues.size(); ++i)
            CHECK(std::abs(closed.eigenvalues[i] - dense.eigenvalues[i]) <= 1e-8 * scale);
    }
    const auto t3 = sample_couplings(8, 3, Dist::gaussian, 5);
    CHECK_THROWS_AS(antisymmetric_from_couplings(t3), std::invalid_argument);
}

TEST_CASE("antisymmetric_semicircle_check: moments and KS at modest n") {
    const auto chk = antisymmetric_semicircle_check(300, 3, 808);
    CHECK(chk.pooled == 900);
    // E<x^2> = 1 exactly at every n; fluctuations are tiny at 900 pooled values
    CHECK(chk.mean_sq == doctest::Approx(1.0).epsilon(0.1));
    CHECK(chk.mean_abs == doctest::Approx(8.0 / (3 * std::acos(-1.0))).epsilon(0.05));
    CHECK(chk.ks > 0.0);
    CHECK(chk.ks < 0.1);
    // determinism
    const auto again = antisymmetric_semicircle_check(300, 3, 808);
    CHECK(again.ks == chk.ks);
    CHECK(again.mean_sq == chk.mean_sq);
}

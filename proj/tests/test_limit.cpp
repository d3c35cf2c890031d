#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "syk/ffunc.hpp"
#include "syk/limit.hpp"
#include "syk/partitions.hpp"
#include "syk/subsets.hpp"

using namespace syk;

namespace {

// independent crossing oracle: count quadruples a<b<c<d where {a,c} and {b,d}
// are both blocks, via an element -> partner map
int crossing_oracle(const PairPartition& p, int k) {
    std::vector<int> partner(k + 1, 0);
    for (auto [a, b] : p.blocks) {
        partner[a] = b;
        partner[b] = a;
    }
    int c = 0;
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b)
            for (int cc = b + 1; cc <= k; ++cc)
                for (int d = cc + 1; d <= k; ++d)
                    if (partner[a] == cc && partner[b] == d) ++c;
    return c;
}

double dfact(int k) { // (k-1)!! reference
    double v = 1;
    for (int m = k - 1; m > 1; m -= 2) v *= m;
    return v;
}

} // namespace

TEST_CASE("pair partition enumeration: counts and uniqueness") {
    const std::map<int, std::size_t> expected{{2, 1}, {4, 3}, {6, 15}, {8, 105}, {10, 945},
                                              {12, 10395}, {14, 135135}};
    for (auto [k, want] : expected) {
        std::size_t count = 0;
        for_each_pair_partition(k, [&](const PairPartition&) { ++count; });
        CHECK(count == want);
    }
    // duplicate-freeness + structural validity for k <= 8
    for (int k : {2, 4, 6, 8}) {
        std::set<std::vector<int>> seen;
        for (const auto& p : enumerate_pair_partitions(k)) {
            std::vector<int> flat, cover;
            for (auto [a, b] : p.blocks) {
                CHECK(a < b);
                flat.push_back(a);
                flat.push_back(b);
            }
            cover = flat;
            std::sort(cover.begin(), cover.end());
            for (int i = 1; i <= k; ++i) CHECK(cover[i - 1] == i);
            CHECK(seen.insert(flat).second); // sorted-by-smallest form is canonical
        }
        CHECK(seen.size() == static_cast<std::size_t>(dfact(k)));
    }
    CHECK_THROWS_AS(enumerate_pair_partitions(3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pair_partitions(18), resource_limit_error);
}

TEST_CASE("crossing number: pinned values and quadruple oracle") {
    PairPartition seq{{{1, 2}, {3, 4}}};
    PairPartition crossed{{{1, 3}, {2, 4}}};
    PairPartition chain{{{1, 4}, {2, 5}, {3, 6}}};
    CHECK(crossing_number(seq) == 0);
    CHECK(crossing_number(crossed) == 1);
    CHECK(crossing_number(chain) == 3);
    for (int k : {6, 8, 10})
        for (const auto& p : enumerate_pair_partitions(k))
            CHECK(crossing_number(p) == crossing_oracle(p, k));
}

TEST_CASE("limit moments: closed forms at the ends and in between") {
    // odd k vanish
    for (int k : {1, 3, 5, 7}) CHECK(limit_moment(k, 0.7, Parity::even) == 0.0);
    // k = 2: single partition, no crossing
    CHECK(limit_moment(2, 1.3, Parity::even) == doctest::Approx(1.0).epsilon(1e-14));
    // k = 4: 2 + y, k = 6: 5 + 6y + 3y^2 + y^3 (crossing census over 15 partitions)
    for (double a : {0.0, 0.1, 0.5, 1.0, 3.0}) {
        const double y = std::exp(-2 * a);
        CHECK(limit_moment(4, a, Parity::even) == doctest::Approx(2 + y).epsilon(1e-13));
        CHECK(limit_moment(6, a, Parity::even) ==
              doctest::Approx(5 + 6 * y + 3 * y * y + y * y * y).epsilon(1e-13));
        const double ym = -y;
        CHECK(limit_moment(4, a, Parity::odd) == doctest::Approx(2 + ym).epsilon(1e-13));
        CHECK(limit_moment(6, a, Parity::odd) ==
              doctest::Approx(5 + 6 * ym + 3 * ym * ym + ym * ym * ym).epsilon(1e-13));
    }
    // a = 0, even parity: (k-1)!!; odd parity: identically 1
    for (int k : {2, 4, 6, 8, 10, 12}) {
        CHECK(limit_moment(k, 0.0, Parity::even) == doctest::Approx(dfact(k)).epsilon(1e-12));
        CHECK(limit_moment(k, 0.0, Parity::odd) == doctest::Approx(1.0).epsilon(1e-9));
    }
    // a = infinity: Catalan numbers
    const std::map<int, double> catalan{{2, 1}, {4, 2}, {6, 5}, {8, 14}, {10, 42}, {12, 132}};
    for (auto [k, c] : catalan) {
        CHECK(limit_moment(k, AParam::infinity(), Parity::even) == c);
        CHECK(limit_moment(k, AParam::infinity(), Parity::odd) == c);
        CHECK(static_cast<double>(catalan_moment(k)) == c);
    }
    CHECK_THROWS_AS(limit_moment(0, 1.0, Parity::even), std::invalid_argument);
}

TEST_CASE("limit moments: monotone degeneration between (k-1)!! and Catalan") {
    for (int k : {4, 6, 8}) {
        double prev = dfact(k) + 1e-9;
        for (double a : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double m = limit_moment(k, a, Parity::even);
            CHECK(m < prev);
            CHECK(m >= static_cast<double>(catalan_moment(k)));
            prev = m;
        }
    }
}

TEST_CASE("AParam: state machine") {
    CHECK(AParam::infinity().is_infinite());
    CHECK_FALSE(AParam(2.5).is_infinite());
    CHECK(AParam(2.5).value() == 2.5);
    CHECK(AParam(std::numeric_limits<double>::infinity()).is_infinite());
    CHECK_THROWS_AS(AParam(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(AParam::infinity().value(), std::logic_error);
}

TEST_CASE("adaptive simpson: analytic integrals") {
    CHECK(adaptive_simpson([](double x) { return x * x; }, 0, 1, 1e-12) ==
          doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0, std::acos(-1.0), 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-11));
    // integrable sqrt kink
    CHECK(adaptive_simpson([](double x) { return std::sqrt(x); }, 0, 1, 1e-10) ==
          doctest::Approx(2.0 / 3).epsilon(1e-8));
}

TEST_CASE("density_eval: pinned values, support, nonnegativity") {
    const double pi = std::acos(-1.0);
    CHECK(density_eval(LimitDensity::semicircle(), 0.0) == doctest::Approx(1 / pi).epsilon(1e-14));
    CHECK(density_eval(LimitDensity::gaussian(), 0.0) ==
          doctest::Approx(1 / std::sqrt(2 * pi)).epsilon(1e-14));
    CHECK(density_eval(LimitDensity::semicircle(), 2.0) == 0.0);
    CHECK(density_eval(LimitDensity::semicircle(), 2.5) == 0.0);
    for (double y : {0.8, 0.3, -0.3, -0.9}) {
        const auto d = LimitDensity::qhermite(y);
        const double edge = 2 / std::sqrt(1 - y);
        CHECK(d.support_max() == doctest::Approx(edge));
        CHECK(density_eval(d, edge) == 0.0);
        CHECK(density_eval(d, edge + 0.1) == 0.0);
        CHECK(density_eval(d, -edge - 0.1) == 0.0);
        for (int i = 0; i <= 1000; ++i) {
            const double x = -edge + 2 * edge * i / 1000.0;
            CHECK(density_eval(d, x) >= 0.0);
            CHECK(density_eval(d, x) == density_eval(d, -x)); // even function
        }
    }
    CHECK_THROWS_AS(LimitDensity::qhermite(1.0), std::invalid_argument);
    CHECK_THROWS_AS(LimitDensity::qhermite(-1.2), std::invalid_argument);
    CHECK_THROWS_AS(LimitDensity::qhermite(0.0), std::invalid_argument);
}

TEST_CASE("densities: unit mass") {
    CHECK(density_mass(LimitDensity::gaussian()) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(density_mass(LimitDensity::semicircle()) == doctest::Approx(1.0).epsilon(1e-8));
    for (double a : {0.1, 0.5, 1.0, 2.0, 5.0})
        CHECK(density_mass(LimitDensity::qhermite(std::exp(-2 * a))) ==
              doctest::Approx(1.0).epsilon(1e-6));
    for (double a : {0.05, 0.25, 1.0})
        CHECK(density_mass(LimitDensity::qhermite(-std::exp(-2 * a))) ==
              doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("density_moment: closed forms and the moment bridge") {
    // semicircle moments are Catalan, Gaussian moments are (k-1)!!
    CHECK(density_moment(LimitDensity::semicircle(), 2) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(density_moment(LimitDensity::semicircle(), 4) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(density_moment(LimitDensity::semicircle(), 6) == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(density_moment(LimitDensity::gaussian(), 4) == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(density_moment(LimitDensity::gaussian(), 6) == doctest::Approx(15.0).epsilon(1e-8));
    for (int k : {1, 3, 5})
        CHECK(density_moment(LimitDensity::qhermite(0.4), k) == doctest::Approx(0.0).epsilon(1e-8));
    // central consistency check: quadrature against partition enumeration
    for (double a : {0.25, 0.5, 1.0, 2.0}) {
        for (int k = 2; k <= 8; k += 2) {
            CHECK(density_moment(LimitDensity::qhermite(std::exp(-2 * a)), k) ==
                  doctest::Approx(limit_moment(k, a, Parity::even)).epsilon(2e-7));
            CHECK(density_moment(LimitDensity::qhermite(-std::exp(-2 * a)), k) ==
                  doctest::Approx(limit_moment(k, a, Parity::odd)).epsilon(2e-7));
        }
    }
    CHECK_THROWS_AS(density_moment(LimitDensity::gaussian(), 13), std::invalid_argument);
}

TEST_CASE("density_cdf: erf and closed-form semicircle oracles, monotone") {
    const double pi = std::acos(-1.0);
    const auto g = LimitDensity::gaussian();
    // grid-level accuracy: 1e4 cells -> linear-interpolation error ~ f' h^2/8 ~ 1e-7
    for (double x : {-3.0, -1.0, -0.3, 0.0, 0.7, 2.2}) {
        const double phi = 0.5 * (1 + std::erf(x / std::sqrt(2.0)));
        CHECK(density_cdf(g, x) == doctest::Approx(phi).epsilon(1e-5));
    }
    const auto s = LimitDensity::semicircle();
    for (double x : {-1.9, -1.0, 0.0, 0.5, 1.5}) {
        const double ref = 0.5 + x * std::sqrt(4 - x * x) / (4 * pi) + std::asin(x / 2) / pi;
        CHECK(density_cdf(s, x) == doctest::Approx(ref).epsilon(1e-5));
    }
    CHECK(density_cdf(s, -2.5) == 0.0);
    CHECK(density_cdf(s, 2.5) == doctest::Approx(1.0).epsilon(1e-8));
    const auto qh = LimitDensity::qhermite(std::exp(-2 * 0.5));
    double prev = -1;
    for (int i = 0; i <= 400; ++i) {
        const double x = qh.support_min() + (qh.support_max() - qh.support_min()) * i / 400.0;
        const double c = density_cdf(qh, x);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(density_cdf(qh, 0.0) == doctest::Approx(0.5).epsilon(1e-9)); // even density
}

TEST_CASE("density_cdf: grid persists under SYK_CACHE_DIR") {
    const std::string dir = "/tmp/syk_cache_test";
    std::filesystem::remove_all(dir);
    setenv("SYK_CACHE_DIR", dir.c_str(), 1);
    const auto d = LimitDensity::qhermite(0.37219); // fresh y: forces a build
    CHECK(density_cdf(d, 0.3) > 0.5);
    bool found = false;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".bin" && e.file_size() > 8 * 10000) found = true;
    CHECK(found);
    unsetenv("SYK_CACHE_DIR");
}

TEST_CASE("select_limit: dispatch and degeneration") {
    // a = q^2/n > 20: indistinguishable from the semicircle
    const auto near_semi = select_limit(26, 24, Parity::even);
    for (int i = 0; i <= 200; ++i) {
        const double x = -2.0 + 4.0 * i / 200.0;
        CHECK(std::abs(density_eval(near_semi, x) - density_eval(LimitDensity::semicircle(), x)) <
              1e-6);
    }
    // tiny a, even parity: exact Gaussian dispatch
    CHECK(select_limit(1000000, 1, Parity::even).family() == DensityFamily::gaussian);
    // moderate a: the q-Hermite density with y = e^{-2a}
    const auto mid = select_limit(24, 4, Parity::even);
    CHECK(mid.family() == DensityFamily::qhermite);
    CHECK(mid.y() == doctest::Approx(std::exp(-2.0 * 16 / 24)).epsilon(1e-15));
    const auto modd = select_limit(450, 3, Parity::odd);
    CHECK(modd.family() == DensityFamily::qhermite);
    CHECK(modd.y() == doctest::Approx(-std::exp(-2.0 * 9 / 450)).epsilon(1e-15));
    CHECK_THROWS_AS(select_limit(11, 2, Parity::even), std::invalid_argument);
    CHECK_THROWS_AS(select_limit(8, 8, Parity::even), std::invalid_argument);
}

TEST_CASE("select_limit: odd parity near a = 0 concentrates at +-1") {
    // a = 9/18000 = 5e-4: mass within 0.01 of the half-half atom law outside (+-1 -+ 0.1)
    const auto d = select_limit(18000, 3, Parity::odd);
    REQUIRE(d.family() == DensityFamily::qhermite);
    CHECK(density_cdf(d, -1.1) < 0.01);
    CHECK(density_cdf(d, -0.9) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(density_cdf(d, 0.9) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(density_cdf(d, 1.1) > 0.99);
}

TEST_CASE("f_alternating: pinned values and a double-precision oracle") {
    CHECK(f_alternating(3, 0, 9) == ExactRational(1));
    CHECK(f_alternating(0, 5, 9) == ExactRational(1));
    CHECK(f_alternating(1, 1, 2) == ExactRational(0));
    // small-m double oracle (binomials exact in double at these sizes)
    auto oracle = [](int p, int q, int m) {
        double s = 0;
        for (int k = 0; k <= q; ++k) {
            const double t = binomial_d(p, k) * binomial_d(m - p, q - k);
            s += (k % 2 ? -t : t);
        }
        return s / binomial_d(m, q);
    };
    for (int m = 1; m <= 12; ++m)
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q)
                CHECK(f_alternating(p, q, m).get_d() ==
                      doctest::Approx(oracle(p, q, m)).epsilon(1e-12));
    CHECK_THROWS_AS(f_alternating(5, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(f_alternating(-1, 2, 4), std::invalid_argument);
}

TEST_CASE("f_alternating: symmetry identities exact for all m <= 30") {
    for (long m = 1; m <= 30; ++m)
        for (long p = 0; p <= m; ++p)
            for (long q = 0; q <= m; ++q) {
                const ExactRational f = f_alternating(p, q, m);
                CHECK(f == f_alternating(q, p, m));
                ExactRational flip_p = f_alternating(m - p, q, m);
                if (q % 2) flip_p = -flip_p;
                CHECK(f == flip_p);
                ExactRational flip_q = f_alternating(p, m - q, m);
                if (p % 2) flip_q = -flip_q;
                CHECK(f == flip_q);
            }
}

TEST_CASE("f_bound_check: exhaustive sweep to m = 40") {
    const auto rep = f_bound_check(40);
    CHECK(rep.all_pass);
    CHECK(rep.cases_checked == 23820); // sum over m<=40 of (m+1)^2
    CHECK(rep.max_ratio <= 1.0 + 1e-12);
    // the p = 0 equality case makes the max ratio exactly 1
    CHECK(rep.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(f_bound_check(61), resource_limit_error);
}

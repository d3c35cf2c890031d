#include "syk/limit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "syk/partitions.hpp"

namespace syk {

AParam::AParam(double v) : v_(v), inf_(false) {
    if (!(v >= 0.0)) throw std::invalid_argument("a must be >= 0");
    if (std::isinf(v)) { inf_ = true; v_ = 0; }
}

AParam AParam::infinity() { return AParam(); }

double AParam::value() const {
    if (inf_) throw std::logic_error("AParam::value() on infinite a");
    return v_;
}

double limit_moment(int k, AParam a, Parity parity) {
    if (k < 1) throw std::invalid_argument("limit_moment requires k >= 1");
    if (k % 2 != 0) return 0.0;
    if (a.is_infinite()) {
        // e^{-2a} -> 0: only non-crossing partitions survive
        double count = 0;
        for_each_pair_partition(k, [&](const PairPartition& p) {
            if (crossing_number(p) == 0) count += 1.0;
        });
        return count;
    }
    double y = std::exp(-2.0 * a.value());
    if (parity == Parity::odd) y = -y;
    double sum = 0.0;
    for_each_pair_partition(k, [&](const PairPartition& p) {
        const int c = crossing_number(p);
        sum += (c == 0) ? 1.0 : std::pow(y, c);
    });
    return sum;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGaussWindow = 8.5; // |x|>8.5 carries < 1e-17 Gaussian mass
constexpr int kCdfCells = 10000;

double simpson_est(double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double simpson_rec(const std::function<double(double)>& f, double lo, double mid, double hi,
                   double flo, double fmid, double fhi, double whole, double tol, int depth) {
    const double lm = 0.5 * (lo + mid), mh = 0.5 * (mid + hi);
    const double flm = f(lm), fmh = f(mh);
    const double left = simpson_est(lo, mid, flo, flm, fmid);
    const double right = simpson_est(mid, hi, fmid, fmh, fhi);
    const double delta = left + right - whole;
    if (depth <= 0) {
        if (std::abs(delta) > 64.0 * tol)
            throw numeric_error("adaptive quadrature failed to converge", left + right,
                                std::abs(delta));
        return left + right + delta / 15.0;
    }
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, lo, lm, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, mid, mh, hi, fmid, fmh, fhi, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(hi >= lo)) throw std::invalid_argument("adaptive_simpson requires hi >= lo");
    if (hi == lo) return 0.0;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = simpson_est(lo, hi, flo, fmid, fhi);
    return simpson_rec(f, lo, mid, hi, flo, fmid, fhi, whole, tol, 48);
}

LimitDensity LimitDensity::gaussian() {
    LimitDensity d;
    d.family_ = DensityFamily::gaussian;
    d.support_ = kGaussWindow;
    return d;
}

LimitDensity LimitDensity::semicircle() {
    LimitDensity d;
    d.family_ = DensityFamily::semicircle;
    d.support_ = 2.0;
    return d;
}

LimitDensity LimitDensity::qhermite(double y) {
    if (!(std::abs(y) < 1.0)) throw std::invalid_argument("qhermite requires |y| < 1");
    if (y == 0.0) throw std::invalid_argument("qhermite y = 0 degenerates to the semicircle");
    LimitDensity d;
    d.family_ = DensityFamily::qhermite;
    d.y_ = y;
    d.support_ = 2.0 / std::sqrt(1.0 - y);
    // truncate the product where |y|^K < 1e-16
    const double lk = std::log(1e-16) / std::log(std::abs(y));
    const std::size_t K = static_cast<std::size_t>(std::min(std::ceil(lk), 1e5));
    auto c1 = std::make_shared<std::vector<double>>();
    auto c2 = std::make_shared<std::vector<double>>();
    c1->reserve(K);
    c2->reserve(K);
    double yk = y; // y^k, starting at k = 1 (the k = 0 factor is absorbed analytically)
    for (std::size_t k = 1; k <= K; ++k) {
        const double yk2 = yk * yk;            // y^{2k}
        const double y2kp2 = yk2 * y * y;      // y^{2k+2}
        const double y2kp1 = yk2 * y;          // y^{2k+1}
        c1->push_back((1.0 - y2kp2) / (1.0 - y2kp1));
        const double onep = 1.0 + yk;
        c2->push_back((1.0 - y) * yk / (onep * onep));
        yk *= y;
    }
    d.c1_ = std::move(c1);
    d.c2_ = std::move(c2);
    return d;
}

double density_eval(const LimitDensity& d, double x) {
    switch (d.family_) {
        case DensityFamily::gaussian:
            return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
        case DensityFamily::semicircle: {
            const double disc = 4.0 - x * x;
            return disc <= 0.0 ? 0.0 : std::sqrt(disc) / (2.0 * kPi);
        }
        case DensityFamily::qhermite: {
            if (std::abs(x) >= d.support_) return 0.0; // exact zero at and beyond the edge
            const double y = d.y_;
            const double disc = 1.0 - (1.0 - y) * x * x / 4.0;
            if (disc <= 0.0) return 0.0;
            // k = 0 product factor absorbed into the prefactor: the 1/sqrt(disc)
            // pole cancels against (1 - x^2(1-y)/4), leaving sqrt(disc)
            double v = std::sqrt(1.0 - y) / kPi * ((1.0 - y * y) / (1.0 - y)) * std::sqrt(disc);
            const double x2 = x * x;
            const auto& c1 = *d.c1_;
            const auto& c2 = *d.c2_;
            for (std::size_t k = 0; k < c1.size(); ++k) v *= c1[k] * (1.0 - x2 * c2[k]);
            return std::max(v, 0.0);
        }
    }
    return 0.0;
}

namespace {

struct CdfTable {
    double lo = 0, hi = 0;
    std::vector<double> cum; // cum[j] = integral from lo to lo + j*h
};

std::uint64_t double_bits(double v) {
    std::uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
}

std::string cache_file_name(const LimitDensity& d) {
    const char* base;
    switch (d.family()) {
        case DensityFamily::gaussian: base = "gauss"; break;
        case DensityFamily::semicircle: base = "semi"; break;
        default: base = "qh"; break;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "cdf_%s_%016llx_%d.bin", base,
                  static_cast<unsigned long long>(double_bits(d.y())), kCdfCells);
    return buf;
}

bool load_table(const std::filesystem::path& p, CdfTable& t) {
    std::FILE* f = std::fopen(p.c_str(), "rb");
    if (!f) return false;
    double header[2];
    bool ok = std::fread(header, sizeof(double), 2, f) == 2;
    if (ok) {
        t.lo = header[0];
        t.hi = header[1];
        t.cum.assign(kCdfCells + 1, 0.0);
        ok = std::fread(t.cum.data(), sizeof(double), t.cum.size(), f) == t.cum.size();
    }
    std::fclose(f);
    return ok;
}

void store_table(const std::filesystem::path& p, const CdfTable& t) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    const std::filesystem::path tmp = p.string() + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) return; // cache is best-effort
    const double header[2] = {t.lo, t.hi};
    bool ok = std::fwrite(header, sizeof(double), 2, f) == 2 &&
              std::fwrite(t.cum.data(), sizeof(double), t.cum.size(), f) == t.cum.size();
    std::fclose(f);
    if (ok)
        std::filesystem::rename(tmp, p, ec);
    else
        std::filesystem::remove(tmp, ec);
}

std::shared_ptr<const CdfTable> cdf_table_for(const LimitDensity& d) {
    struct Key {
        int family;
        std::uint64_t ybits;
        bool operator<(const Key& o) const {
            return family != o.family ? family < o.family : ybits < o.ybits;
        }
    };
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const CdfTable>> cache;
    const Key key{static_cast<int>(d.family()), double_bits(d.y())};
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<CdfTable>();
    t->lo = d.support_min();
    t->hi = d.support_max();
    const char* dir = std::getenv("SYK_CACHE_DIR");
    const std::filesystem::path file =
        dir ? std::filesystem::path(dir) / cache_file_name(d) : std::filesystem::path();
    bool loaded = dir && load_table(file, *t) && t->lo == d.support_min() && t->hi == d.support_max();
    if (!loaded) {
        t->lo = d.support_min();
        t->hi = d.support_max();
        t->cum.assign(kCdfCells + 1, 0.0);
        const double h = (t->hi - t->lo) / kCdfCells;
        auto f = [&](double x) { return density_eval(d, x); };
        double acc = 0.0;
        for (int j = 0; j < kCdfCells; ++j) {
            acc += adaptive_simpson(f, t->lo + j * h, t->lo + (j + 1) * h, 1e-13);
            t->cum[j + 1] = acc;
        }
        if (dir) store_table(file, *t);
    }
    std::lock_guard<std::mutex> g(mu);
    auto [it, inserted] = cache.emplace(key, std::move(t));
    return it->second;
}

} // namespace

double density_cdf(const LimitDensity& d, double x) {
    auto t = cdf_table_for(d);
    if (x <= t->lo) return 0.0;
    if (x >= t->hi) return t->cum.back();
    const double h = (t->hi - t->lo) / kCdfCells;
    const double pos = (x - t->lo) / h;
    const int j = std::min(static_cast<int>(pos), kCdfCells - 1);
    const double frac = pos - j;
    return t->cum[j] + frac * (t->cum[j + 1] - t->cum[j]);
}

double density_moment(const LimitDensity& d, int k) {
    if (k < 0 || k > 12) throw std::invalid_argument("density_moment supports 0 <= k <= 12");
    auto f = [&](double x) { return std::pow(x, k) * density_eval(d, x); };
    const double lo = d.support_min(), hi = d.support_max();
    // graded panels toward the support edges: the square-root edge behavior is
    // only C^0, so give the adaptive rule geometrically refined seams
    std::vector<double> cuts{lo};
    const double w = hi - lo;
    for (int j = 6; j >= 1; --j) cuts.push_back(lo + w * std::pow(2.0, -(j + 2)));
    for (int j = 1; j <= 6; ++j) cuts.push_back(hi - w * std::pow(2.0, -(j + 2)));
    cuts.push_back(hi);
    double total = 0.0;
    const double tol = 1e-9 / static_cast<double>(cuts.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += adaptive_simpson(f, cuts[i], cuts[i + 1], tol);
    return total;
}

double density_mass(const LimitDensity& d) { return density_moment(d, 0); }

LimitDensity select_limit(int n, int q, Parity parity) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("n must be positive even");
    if (q < 1 || q >= n) throw std::invalid_argument("q must satisfy 1 <= q < n");
    const double a = static_cast<double>(q) * q / n;
    if (parity == Parity::even && a < 1e-4) return LimitDensity::gaussian();
    const double mag = std::exp(-2.0 * a);
    if (mag < 1e-300) return LimitDensity::semicircle();
    return LimitDensity::qhermite(parity == Parity::even ? mag : -mag);
}

} // namespace syk

#pragma once
#include <functional>
#include <memory>
#include <vector>

#include "syk/errors.hpp"

namespace syk {

enum class Parity { even, odd };

// Crossing-weight parameter a in [0, inf]; infinity is an explicit state.
class AParam {
  public:
    AParam(double v); // NOLINT(google-explicit-constructor): numeric literals are the common case
    static AParam infinity();
    bool is_infinite() const { return inf_; }
    double value() const; // throws logic_error when infinite
  private:
    AParam() : v_(0), inf_(true) {}
    double v_;
    bool inf_;
};

// Sum over pair partitions of (+-e^{-2a})^{crossings}; odd k gives 0,
// a = 0 gives (k-1)!! (even parity), a = inf counts non-crossing partitions.
double limit_moment(int k, AParam a, Parity parity);

enum class DensityFamily { gaussian, qhermite, semicircle };

// Limiting spectral density: standard Gaussian, semicircle on [-2,2], or the
// q-Hermite product density with parameter y in (-1,1)\{0} supported on
// [-2/sqrt(1-y), 2/sqrt(1-y)].
class LimitDensity {
  public:
    static LimitDensity gaussian();
    static LimitDensity semicircle();
    static LimitDensity qhermite(double y);

    DensityFamily family() const { return family_; }
    double y() const { return y_; }
    double support_min() const { return -support_; }
    double support_max() const { return support_; }

    friend double density_eval(const LimitDensity& d, double x);
    friend double density_cdf(const LimitDensity& d, double x);
    friend double density_moment(const LimitDensity& d, int k);

  private:
    LimitDensity() = default;
    DensityFamily family_ = DensityFamily::gaussian;
    double y_ = 0.0;
    double support_ = 0.0; // half-width of the quadrature window
    // per-k product factors for qhermite: factor_k(x) = c1[k]*(1 - x^2*c2[k])
    std::shared_ptr<const std::vector<double>> c1_, c2_;
};

// Density value at x; 0 outside support, 0 at the support edge.
double density_eval(const LimitDensity& d, double x);

// Theory CDF via cached 1e4-cell quadrature grid with monotone linear
// interpolation; grids persist under $SYK_CACHE_DIR when that is set.
double density_cdf(const LimitDensity& d, double x);

// Integral of x^k against the density, adaptive quadrature (abs. tol 1e-8); k <= 12.
double density_moment(const LimitDensity& d, int k);

// Total mass (k = 0 moment); callers check |mass - 1| themselves.
double density_mass(const LimitDensity& d);

// Finite-n comparison density for the (n, q) ensemble: qhermite(+-e^{-2a}) with
// a = q^2/n, with the even-parity a < 1e-4 window dispatched to the Gaussian
// closed form and underflowing y dispatched to the semicircle.
LimitDensity select_limit(int n, int q, Parity parity);

// Adaptive Simpson quadrature to an absolute tolerance (shared utility).
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol);

} // namespace syk

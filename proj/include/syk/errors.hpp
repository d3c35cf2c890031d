#pragma once
#include <stdexcept>
#include <string>

namespace syk {

// Thrown when a request exceeds a configured budget (dense cap, matrix-free
// cap, coupling memory budget, enumeration size).
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on solver failures: eigensolver non-convergence, quadrature that
// cannot reach tolerance.  Carries the best estimate available so callers can
// report diagnostics.
struct numeric_error : std::runtime_error {
    double best_estimate;
    double residual;
    explicit numeric_error(const std::string& msg, double best = 0.0, double res = 0.0)
        : std::runtime_error(msg), best_estimate(best), residual(res) {}
};

// Thrown on malformed input files; line is 1-based, 0 = not line-specific.
struct parse_error : std::runtime_error {
    long line;
    explicit parse_error(const std::string& msg, long line_no = 0)
        : std::runtime_error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
};

} // namespace syk

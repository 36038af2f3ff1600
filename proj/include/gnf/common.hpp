#pragma once

// Shared aliases, error taxonomy and small numeric helpers used by every
// other header of the library.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gnf {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline constexpr Complex kImag{0.0, 1.0};
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// ============================================================================
// Error taxonomy
// ============================================================================

/// Thrown when an evaluation point sits on (or numerically too close to) the
/// singular set of a formula: poles of Gamma factors, vanishing denominators
/// of R-matrix entries, degenerate dynamical coordinates, lattice points of
/// the double sine, and so on.  Callers that sample parameters are expected
/// to treat this as "choose another point", not as a bug.
class singular_parameter_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when a series, infinite product or quadrature fails to reach its
/// termination criterion within the configured budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ============================================================================
// Small helpers
// ============================================================================

/// Largest entry magnitude of a matrix (0 for an empty matrix).
[[nodiscard]] inline double max_abs(const Mat& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

/// True when |v| is below an absolute threshold; used for zero-pattern tests.
[[nodiscard]] inline bool is_negligible(Complex v, double eps = 1e-12) {
    return std::abs(v) < eps;
}

}  // namespace gnf

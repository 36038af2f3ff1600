#pragma once

// Complex special functions backing the normalization factors and twist
// solutions: Euler/Barnes gamma functions, the double sine, q-Pochhammer
// products, Jacobi theta quotients, the Gauss hypergeometric function with
// connection formulas, the Omega cotangent kernel and the q-exponential.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <gnf/common.hpp>

namespace gnf::specfun {

// ============================================================================
// Configuration
// ============================================================================

/// Controls the adaptive quadratures used by double_sine (and everything
/// built on it).  max_intervals bounds the dyadic refinement of the
/// tanh-sinh/exp-sinh rules; the tolerances are handed to the integrator as
/// its termination target.
struct QuadratureConfig {
    int max_intervals = 4096;
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;

    void validate() const {
        if (max_intervals < 16)
            throw std::invalid_argument("QuadratureConfig: max_intervals must be >= 16");
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    }
};

/// Controls truncation of infinite series and products (q-Pochhammer,
/// hypergeometric series, q-exponential).
struct TruncationConfig {
    int max_terms = 4096;
    double term_tol = 1e-15;

    void validate() const {
        if (max_terms < 8)
            throw std::invalid_argument("TruncationConfig: max_terms must be >= 8");
        if (!(term_tol > 0.0))
            throw std::invalid_argument("TruncationConfig: term_tol must be positive");
    }
};

// ============================================================================
// Gamma function
// ============================================================================

namespace detail {

[[nodiscard]] inline bool near_integer(Complex v, double tol) {
    return std::abs(v.imag()) <= tol &&
           std::abs(v.real() - std::round(v.real())) <= tol;
}

[[nodiscard]] inline bool near_nonpositive_integer(Complex v, double tol) {
    return v.real() < 0.5 && near_integer(v, tol);
}

// Stirling coefficients B_{2k} / (2k (2k-1)) for the asymptotic log-gamma
// series; eight terms give ~1e-16 truncation error once Re z >= 12.
inline constexpr double kStirling[] = {
    1.0 / 12.0,        -1.0 / 360.0,       1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0,  1.0 / 156.0,   -3617.0 / 122400.0,
};

/// log Gamma for Re z >= 0.5: shift the argument up to Re >= 12, apply the
/// Stirling series, subtract the logs of the shift factors.
[[nodiscard]] inline Complex log_gamma_right(Complex z) {
    Complex shift_log = 0.0;
    while (z.real() < 12.0) {
        shift_log += std::log(z);
        z += 1.0;
    }
    const Complex lz = std::log(z);
    Complex s = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * kPi);
    const Complex z2 = z * z;
    Complex w = z;
    for (double c : kStirling) {
        s += c / w;
        w *= z2;
    }
    return s - shift_log;
}

}  // namespace detail

/// Euler Gamma function on the complex plane (reflection formula for
/// Re z < 1/2).  Relative accuracy ~1e-14 for moderate |z|.
/// Throws singular_parameter_error at (numerically) non-positive integers.
[[nodiscard]] inline Complex gamma(Complex z) {
    if (detail::near_nonpositive_integer(z, 1e-12))
        throw singular_parameter_error("gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const Complex s = std::sin(kPi * z);
        return kPi / (s * std::exp(detail::log_gamma_right(1.0 - z)));
    }
    return std::exp(detail::log_gamma_right(z));
}

/// Reciprocal Gamma function; entire, returns exactly 0 at the poles of
/// Gamma.  Used to assemble hypergeometric connection coefficients where a
/// pole of a denominator Gamma kills the whole term.
[[nodiscard]] inline Complex rgamma(Complex z) {
    if (detail::near_nonpositive_integer(z, 1e-12)) return 0.0;
    return 1.0 / gamma(z);
}

/// First Barnes gamma: Gamma_1(x|omega) = omega^{x/omega} / sqrt(2 pi omega)
/// * Gamma(x/omega).  Satisfies Gamma_1(x+omega|omega)/Gamma_1(x|omega) = x.
[[nodiscard]] inline Complex gamma1(Complex x, Complex omega) {
    if (std::abs(omega) == 0.0)
        throw std::invalid_argument("gamma1: omega must be non-zero");
    const Complex ratio = x / omega;
    return std::pow(omega, ratio) / std::sqrt(2.0 * kPi * omega) * gamma(ratio);
}

// ============================================================================
// Double sine
// ============================================================================

namespace detail {

template <class Quad, class F>
[[nodiscard]] Complex integrate_complex(Quad& quad, F f, double a, double b,
                                        double tol) {
    auto re = [&f](double t) { return f(t).real(); };
    auto im = [&f](double t) { return f(t).imag(); };
    return {quad.integrate(re, a, b, tol), quad.integrate(im, a, b, tol)};
}

/// log S2(x | w1, w2) on the strip 0 < Re x < w1 + w2, via the integral
///   I(x) = int_0^inf [ sinh(eps t / 2) / (2 sinh(w1 t/2) sinh(w2 t/2))
///                      - eps / (w1 w2 t) ] dt / t,   eps = w1 + w2 - 2x,
/// with log S2 = -I.  The 1/t^2 tail of the subtraction term is integrated
/// analytically; the hyperbolic ratio is evaluated in overflow-safe
/// exponential form.
[[nodiscard]] inline Complex log_double_sine_strip(Complex x, double w1,
                                                   double w2,
                                                   const QuadratureConfig& cfg) {
    const Complex eps = w1 + w2 - 2.0 * x;
    const double wsum = w1 + w2;

    auto ratio = [&](double t) -> Complex {
        const Complex a = 0.5 * eps * t;
        const double half_wt = 0.5 * wsum * t;
        Complex num;
        if (half_wt < 650.0) {
            num = 2.0 * std::sinh(a) * std::exp(-half_wt);
        } else {
            // both exponents decay at rate >= min period / 4 on the strip
            num = std::exp(a - half_wt) - std::exp(-a - half_wt);
        }
        const double d1 = -std::expm1(-w1 * t);
        const double d2 = -std::expm1(-w2 * t);
        return num / (d1 * d2);
    };

    // Small-t expansion of the regularized integrand, O(t^4) accurate at the
    // 1e-3 cutover.
    const Complex ah = 0.5 * eps;
    const double bh = 0.5 * w1, ch = 0.5 * w2;
    const double s2 = bh * bh + ch * ch;
    const double s4 = (bh * bh * bh * bh + ch * ch * ch * ch) / 120.0 +
                      bh * bh * ch * ch / 36.0;
    const Complex c0 = (ah * ah * ah - ah * s2) / 6.0;
    const Complex c2 = ah * ah * ah * ah * ah / 120.0 -
                       ah * ah * ah * s2 / 36.0 + ah * (s2 * s2 / 36.0 - s4);
    const double inv2bc = 1.0 / (2.0 * bh * ch);

    constexpr double t_cut = 1e-3;
    auto integrand = [&](double t) -> Complex {
        if (t < t_cut) return (c0 + c2 * t * t) * inv2bc;
        return (ratio(t) - eps / (w1 * w2 * t)) / t;
    };

    const int refinements = std::clamp(
        static_cast<int>(std::ceil(std::log2(double(cfg.max_intervals)))), 5, 15);
    boost::math::quadrature::tanh_sinh<double> finite(refinements);
    boost::math::quadrature::exp_sinh<double> tail(refinements);

    constexpr double split = 1.0;
    const Complex head = integrate_complex(finite, integrand, 0.0, split,
                                           cfg.rel_tol);
    auto tail_fn = [&](double t) -> Complex { return ratio(t) / t; };
    const Complex back = integrate_complex(
        tail, tail_fn, split, std::numeric_limits<double>::infinity(),
        cfg.rel_tol);
    return head + back - eps / (w1 * w2 * split);
}

}  // namespace detail

/// Barnes double sine S2(x | omega1, omega2) for positive real periods and
/// complex x.  The argument is shift-reduced into the central strip with
/// S2(x) = 2 sin(pi x / omega2) S2(x + omega1), then evaluated through the
/// strip integral.  Zeros/poles of the lattice m*omega1 + n*omega2 raise
/// singular_parameter_error.
[[nodiscard]] inline Complex double_sine(Complex x, double omega1,
                                         double omega2,
                                         const QuadratureConfig& cfg = {}) {
    cfg.validate();
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw std::invalid_argument("double_sine: periods must be positive");
    const double lo = 0.25 * std::min(omega1, omega2);
    const double hi = omega1 + omega2 - lo;

    Complex prefactor = 1.0;
    long guard = 0;
    const long guard_max = 4096 + static_cast<long>(std::abs(x) / omega1);
    while (x.real() < lo) {
        const Complex s = 2.0 * std::sin(kPi * x / omega2);
        if (std::abs(s) < 1e-12)
            throw singular_parameter_error(
                "double_sine: argument on the zero/pole lattice");
        prefactor *= s;
        x += omega1;
        if (++guard > guard_max)
            throw convergence_error("double_sine: shift reduction stalled");
    }
    while (x.real() > hi) {
        x -= omega1;
        const Complex s = 2.0 * std::sin(kPi * x / omega2);
        if (std::abs(s) < 1e-12)
            throw singular_parameter_error(
                "double_sine: argument on the zero/pole lattice");
        prefactor /= s;
        if (++guard > guard_max)
            throw convergence_error("double_sine: shift reduction stalled");
    }
    return prefactor *
           std::exp(-detail::log_double_sine_strip(x, omega1, omega2, cfg));
}

// ============================================================================
// Normalization factors for the rational / trigonometric families
// ============================================================================

/// rho_dy(u, N) = Gamma(u/N) Gamma(u/N + 1) / (Gamma((u+1)/N) Gamma((u+N-1)/N)).
[[nodiscard]] inline Complex rho_dy(Complex u, int N) {
    if (N < 2) throw std::invalid_argument("rho_dy: N must be >= 2");
    const double n = static_cast<double>(N);
    return gamma(u / n) * gamma(u / n + 1.0) /
           (gamma((u + 1.0) / n) * gamma((u + n - 1.0) / n));
}

/// rho_dyr(u, r, N) = S2(-u) S2(1+u) / (S2(u) S2(1-u)) with double-sine
/// periods (r, N).
[[nodiscard]] inline Complex rho_dyr(Complex u, double r, int N,
                                     const QuadratureConfig& cfg = {}) {
    if (N < 2) throw std::invalid_argument("rho_dyr: N must be >= 2");
    if (!(r > 0.0)) throw std::invalid_argument("rho_dyr: r must be positive");
    const double n = static_cast<double>(N);
    return double_sine(-u, r, n, cfg) * double_sine(1.0 + u, r, n, cfg) /
           (double_sine(u, r, n, cfg) * double_sine(1.0 - u, r, n, cfg));
}

// ============================================================================
// q-Pochhammer products and theta function
// ============================================================================

namespace detail {

[[nodiscard]] inline Complex qpoch_impl(Complex z, std::span<const Complex> bases,
                                        const TruncationConfig& cfg) {
    if (bases.empty()) return 1.0 - z;
    Complex total = 1.0;
    Complex zk = z;
    for (int n = 0; n < cfg.max_terms; ++n) {
        total *= qpoch_impl(zk, bases.subspan(1), cfg);
        if (std::abs(zk) < cfg.term_tol) return total;
        zk *= bases.front();
    }
    throw convergence_error("qpoch: product truncation did not converge");
}

}  // namespace detail

/// Multi-base q-Pochhammer symbol
///   (z; p_1, ..., p_m)_inf = prod_{n_1,...,n_m >= 0} (1 - z p_1^{n_1} ... p_m^{n_m}),
/// truncated once the running argument drops below term_tol.  Requires
/// |p_i| < 1 for every base.
[[nodiscard]] inline Complex qpoch(Complex z, const std::vector<Complex>& bases,
                                   const TruncationConfig& cfg = {}) {
    cfg.validate();
    for (const Complex& p : bases) {
        if (!(std::abs(p) < 1.0))
            throw std::domain_error("qpoch: every base must satisfy |p| < 1");
    }
    return detail::qpoch_impl(z, std::span<const Complex>(bases), cfg);
}

[[nodiscard]] inline Complex qpoch(Complex z, std::initializer_list<Complex> bases,
                                   const TruncationConfig& cfg = {}) {
    return qpoch(z, std::vector<Complex>(bases), cfg);
}

/// Theta function Theta_p(z) = (z; p) (p/z; p) (p; p), |p| < 1, z != 0.
/// Quasi-periodicity: Theta_p(p z) = -z^{-1} Theta_p(z).
[[nodiscard]] inline Complex theta_p(Complex z, Complex p,
                                     const TruncationConfig& cfg = {}) {
    if (std::abs(z) == 0.0)
        throw std::domain_error("theta_p: z must be non-zero");
    if (!(std::abs(p) < 1.0))
        throw std::domain_error("theta_p: |p| < 1 required");
    return qpoch(z, {p}, cfg) * qpoch(p / z, {p}, cfg) * qpoch(p, {p}, cfg);
}

// ============================================================================
// Gauss hypergeometric function
// ============================================================================

namespace detail {

[[nodiscard]] inline Complex hyp2f1_series(Complex a, Complex b, Complex c,
                                           Complex z, int max_terms) {
    Complex sum = 1.0;
    Complex term = 1.0;
    int small_run = 0;
    for (int k = 0; k < max_terms; ++k) {
        const double kk = static_cast<double>(k);
        const Complex den = (c + kk) * (kk + 1.0);
        if (std::abs(den) < 1e-300)
            throw singular_parameter_error("hyp2f1: series denominator vanished");
        term *= (a + kk) * (b + kk) / den * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++small_run >= 2) return sum;
        } else {
            small_run = 0;
        }
    }
    throw convergence_error("hyp2f1: series did not converge");
}

[[nodiscard]] inline double integer_distance(Complex v) {
    return std::hypot(v.real() - std::round(v.real()), v.imag());
}

}  // namespace detail

/// Gauss hypergeometric 2F1(a, b; c; z) with principal branches.  Dispatches
/// between the direct series, the Pfaff transformation, and the 1-z / 1/z
/// connection formulas, picking the representation with the smallest mapped
/// argument.  The connection formulas require c-a-b (resp. b-a) away from
/// integers; arguments too close to the unit circle in every region raise
/// convergence_error.
[[nodiscard]] inline Complex hyp2f1(Complex a, Complex b, Complex c, Complex z,
                                    const TruncationConfig& cfg = {}) {
    cfg.validate();
    if (detail::near_nonpositive_integer(c, 1e-12))
        throw singular_parameter_error("hyp2f1: c at a non-positive integer");
    if (std::abs(z) < 1e-15) return 1.0;

    if (std::abs(1.0 - z) < 1e-13) {
        // Gauss summation at z = 1, requires Re(c - a - b) > 0.
        const Complex cab = c - a - b;
        if (!(cab.real() > 0.0))
            throw singular_parameter_error(
                "hyp2f1: z = 1 requires Re(c - a - b) > 0");
        return gamma(c) * gamma(cab) * rgamma(c - a) * rgamma(c - b);
    }

    const int max_terms = std::max(cfg.max_terms, 512);
    constexpr double kAdmissible = 0.95;
    constexpr double kIntMargin = 0.05;

    const double r_direct = std::abs(z);
    const double r_pfaff = std::abs(z / (z - 1.0));
    const double r_sub = std::abs(1.0 - z);
    const double r_inv = 1.0 / std::abs(z);

    const bool sub_ok = detail::integer_distance(c - a - b) > kIntMargin;
    const bool inv_ok = detail::integer_distance(b - a) > kIntMargin;

    struct Option {
        double r;
        int id;
        bool ok;
    };
    Option options[] = {
        {r_direct, 0, true},
        {r_pfaff, 1, true},
        {r_sub, 2, sub_ok},
        {r_inv, 3, inv_ok},
    };
    const Option* best = nullptr;
    for (const Option& opt : options) {
        if (!opt.ok || opt.r > kAdmissible) continue;
        if (best == nullptr || opt.r < best->r) best = &opt;
    }
    if (best == nullptr)
        throw convergence_error(
            "hyp2f1: no convergent representation for this argument "
            "(z too close to the unit circle or exceptional parameters)");

    switch (best->id) {
        case 0:
            return detail::hyp2f1_series(a, b, c, z, max_terms);
        case 1:
            return std::pow(1.0 - z, -a) *
                   detail::hyp2f1_series(a, c - b, c, z / (z - 1.0), max_terms);
        case 2: {
            const Complex cab = c - a - b;
            const Complex g1 = gamma(c) * gamma(cab) * rgamma(c - a) * rgamma(c - b);
            const Complex g2 = gamma(c) * gamma(-cab) * rgamma(a) * rgamma(b);
            return g1 * detail::hyp2f1_series(a, b, a + b - c + 1.0, 1.0 - z,
                                              max_terms) +
                   g2 * std::pow(1.0 - z, cab) *
                       detail::hyp2f1_series(c - a, c - b, cab + 1.0, 1.0 - z,
                                             max_terms);
        }
        default: {
            const Complex ba = b - a;
            const Complex t1 = gamma(c) * gamma(ba) * rgamma(b) * rgamma(c - a) *
                               std::pow(-z, -a) *
                               detail::hyp2f1_series(a, a - c + 1.0, 1.0 - ba,
                                                     1.0 / z, max_terms);
            const Complex t2 = gamma(c) * gamma(-ba) * rgamma(a) * rgamma(c - b) *
                               std::pow(-z, -b) *
                               detail::hyp2f1_series(b, b - c + 1.0, 1.0 + ba,
                                                     1.0 / z, max_terms);
            return t1 + t2;
        }
    }
}

// ============================================================================
// Omega kernel
// ============================================================================

/// Omega_n(x) for the N-state trigonometric S-matrix:
///   Omega_n(x) = N ( e^{i pi x} / sin(pi x) * e^{-2 i pi n x / N} - i delta_{n,0} ),
/// equal to the cotangent sum sum_{k=0}^{N-1} omega^{n k} cot(pi (x+k)/N).
/// Requires n in [0, N-1]; integer x is a pole.
[[nodiscard]] inline Complex omega_fn(int n, Complex x, int N) {
    if (N < 1) throw std::invalid_argument("omega_fn: N must be >= 1");
    if (n < 0 || n >= N)
        throw std::domain_error("omega_fn: index n must lie in [0, N-1]");
    const Complex s = std::sin(kPi * x);
    if (std::abs(s) < 1e-12)
        throw singular_parameter_error("omega_fn: pole at integer argument");
    const double nn = static_cast<double>(N);
    Complex v = std::exp(kImag * kPi * x) / s *
                std::exp(-2.0 * kImag * kPi * static_cast<double>(n) * x / nn);
    if (n == 0) v -= kImag;
    return nn * v;
}

// ============================================================================
// q-exponential
// ============================================================================

/// Matrix q-exponential exp_q(M) = sum_k M^k / (k)_q! with the q-integer
/// (k)_q = (1 - q^k)/(1 - q).  Terminates early on nilpotent arguments
/// (exact zero term).  Throws when a q-integer vanishes (q at a root of
/// unity) or when max_order is insufficient.
[[nodiscard]] inline Mat qexp(const Mat& M, Complex q, int max_order = 64) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("qexp: square matrix required");
    if (max_order < 1) throw std::invalid_argument("qexp: max_order must be >= 1");
    Mat sum = Mat::Identity(M.rows(), M.cols());
    Mat term = sum;
    int small_run = 0;
    for (int k = 1; k <= max_order; ++k) {
        Complex qk;
        if (std::abs(q - 1.0) < 1e-12) {
            qk = static_cast<double>(k);
        } else {
            qk = (1.0 - std::pow(q, k)) / (1.0 - q);
        }
        if (std::abs(qk) < 1e-14)
            throw singular_parameter_error(
                "qexp: vanishing q-integer (q at a root of unity)");
        term = (term * M) / qk;
        const double tnorm = max_abs(term);
        if (tnorm == 0.0) return sum;  // nilpotent: series terminated exactly
        sum += term;
        if (tnorm <= 1e-16 * max_abs(sum)) {
            if (++small_run >= 2) return sum;
        } else {
            small_run = 0;
        }
    }
    throw convergence_error("qexp: series did not converge within max_order");
}

}  // namespace gnf::specfun

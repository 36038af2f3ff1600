#pragma once

// Twist construction and application: the hypergeometric block twist for the
// trigonometric Yangian-double family, constant-twist application (graded and
// ungraded), spectral reflection twists, the diagonal Fourier gauge, and the
// infinite-product form of the rational dynamical twist.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gnf/catalog.hpp>
#include <gnf/gtensor.hpp>
#include <gnf/specfun.hpp>

namespace gnf::twistlab {

// ============================================================================
// Hypergeometric block twist
// ============================================================================

/// Off-diagonal block data for the N x N block twist: for each ordered pair
/// (a, b), a != b, a diagonal coefficient b_ab (at position [ab, ab]) and an
/// exchange coefficient c_ab (at [ab, ba]); the [aa, aa] entries are 1.
struct BlockTwist {
    int N = 0;
    std::vector<std::vector<std::pair<Complex, Complex>>> blocks;

    BlockTwist() = default;
    explicit BlockTwist(int n)
        : N(n),
          blocks(static_cast<std::size_t>(n),
                 std::vector<std::pair<Complex, Complex>>(
                     static_cast<std::size_t>(n), {0.0, 0.0})) {
        if (n < 2) throw std::invalid_argument("BlockTwist: N must be >= 2");
    }

    [[nodiscard]] Mat assemble() const {
        Mat F = Mat::Zero(N * N, N * N);
        for (int a = 0; a < N; ++a) F(a * N + a, a * N + a) = 1.0;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                if (a == b) continue;
                const auto& [bc, cc] =
                    blocks[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                F(a * N + b, a * N + b) = bc;
                F(a * N + b, b * N + a) = cc;
            }
        return F;
    }
};

/// Diagonal block coefficient b(u; z) = Gamma((u-1)/r + 1)/Gamma(u/r + 1)
///   . 2F1(-1/r, (u-1)/r + 1; u/r + 1; z),  z a root of unity.
[[nodiscard]] inline Complex hyp_block_b(Complex u, double r, Complex z,
                                         const specfun::TruncationConfig& cfg = {}) {
    return specfun::gamma((u - 1.0) / r + 1.0) / specfun::gamma(u / r + 1.0) *
           specfun::hyp2f1(Complex(-1.0 / r), (u - 1.0) / r + 1.0, u / r + 1.0, z,
                           cfg);
}

/// Exchange block coefficient c(u; z) = -(z/r) Gamma((u-1)/r + 1)/Gamma(u/r + 2)
///   . 2F1(1 - 1/r, (u-1)/r + 1; u/r + 2; z).
[[nodiscard]] inline Complex hyp_block_c(Complex u, double r, Complex z,
                                         const specfun::TruncationConfig& cfg = {}) {
    return -z / r * specfun::gamma((u - 1.0) / r + 1.0) /
           specfun::gamma(u / r + 2.0) *
           specfun::hyp2f1(Complex(1.0 - 1.0 / r), (u - 1.0) / r + 1.0,
                           u / r + 2.0, z, cfg);
}

/// Solve for the block twist of the trigonometric Yangian-double family:
/// blocks (a, b) carry b(u; omega^{b-a}) and c(u; omega^{b-a}),
/// omega = exp(2 i pi / N).
[[nodiscard]] inline BlockTwist solve_dyr_twist(Complex u, double r, int N,
                                                const specfun::TruncationConfig& cfg = {}) {
    if (N < 2) throw std::invalid_argument("solve_dyr_twist: N must be >= 2");
    if (!(r > 0.0)) throw std::invalid_argument("solve_dyr_twist: r must be positive");
    BlockTwist bt(N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b) continue;
            const Complex z =
                std::exp(2.0 * kImag * kPi * static_cast<double>(b - a) /
                         static_cast<double>(N));
            bt.blocks[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = {
                hyp_block_b(u, r, z, cfg), hyp_block_c(u, r, z, cfg)};
        }
    return bt;
}

/// Relative residual of the three-term difference equation satisfied by the
/// diagonal block coefficient:
///   z (u+2r+1) b(u+2r) - (u + r + z (u+2r)) b(u+r) + (u+r-1) b(u) = 0.
[[nodiscard]] inline double block_difference_residual_b(Complex u, double r, Complex z) {
    const Complex t1 = z * (u + 2.0 * r + 1.0) * hyp_block_b(u + 2.0 * r, r, z);
    const Complex t2 =
        -(u + r + z * (u + 2.0 * r)) * hyp_block_b(u + r, r, z);
    const Complex t3 = (u + r - 1.0) * hyp_block_b(u, r, z);
    const double scale =
        std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
    return std::abs(t1 + t2 + t3) / scale;
}

/// Relative residual of the difference equation for the exchange coefficient;
/// the lag coefficients use the inverse root zi = 1/z:
///   (u+2r+1) c(u+2r) - (u + r + zi (u+2r)) c(u+r) + zi (u+r-1) c(u) = 0.
[[nodiscard]] inline double block_difference_residual_c(Complex u, double r, Complex z) {
    const Complex zi = 1.0 / z;
    const Complex t1 = (u + 2.0 * r + 1.0) * hyp_block_c(u + 2.0 * r, r, z);
    const Complex t2 =
        -(u + r + zi * (u + 2.0 * r)) * hyp_block_c(u + r, r, z);
    const Complex t3 = zi * (u + r - 1.0) * hyp_block_c(u, r, z);
    const double scale =
        std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
    return std::abs(t1 + t2 + t3) / scale;
}

/// Relative residual of the shift equation coupling the block twist to the
/// scalar-free rational R-matrix (entries 1, u/(u+1), 1/(u+1)):
///   F(u+r) = Phi1^{-1} F(u) Phi1 R(u+r),   Phi1 = diag(omega^{-(a+1)}) (x) I.
[[nodiscard]] inline double linear_shift_residual(Complex u, double r, int N) {
    const Mat lhs = solve_dyr_twist(u + r, r, N).assemble();
    Mat phi = Mat::Zero(N, N);
    for (int a = 0; a < N; ++a)
        phi(a, a) = std::exp(-2.0 * kImag * kPi * static_cast<double>(a + 1) /
                             static_cast<double>(N));
    const Mat Phi1 = gt::kron(phi, Mat::Identity(N, N));
    catalog::EvalPoint p;
    p.spectral = u + r;
    p.normalized = true;  // the shift equation fixes F only up to the scalar
    const Mat R = catalog::dy_slN(N)(p);
    const Mat rhs = Phi1.inverse() * solve_dyr_twist(u, r, N).assemble() * Phi1 * R;
    const double scale = std::max(max_abs(lhs), 1e-300);
    return max_abs(Mat(lhs - rhs)) / scale;
}

// ============================================================================
// Twist application
// ============================================================================

namespace detail {

[[nodiscard]] inline std::vector<std::string> merge_names(
    std::vector<std::string> a, const std::vector<std::string>& b) {
    for (const auto& n : b)
        if (std::find(a.begin(), a.end(), n) == a.end()) a.push_back(n);
    return a;
}

}  // namespace detail

/// Apply a twist to an R-matrix family, producing the twisted family.
///
/// CONSTANT twists use R^F = F21 R F^{-1} with F21 = P F P; when the target
/// family is a tilde-form graded solution the twist is first dressed with the
/// grading signs (F -> Dg F Dg) and the permutation stays non-graded.
/// ADDITIVE_REFLECT twists use R^F(u) = F21(-u) R(u) F(u)^{-1}.
[[nodiscard]] inline catalog::RMatrixFamily apply_twist(
    const catalog::Twist& twist, const catalog::RMatrixFamily& family,
    const std::string& name = "") {
    using catalog::EvalPoint;
    using catalog::Spectral;
    using catalog::TwistApplication;

    catalog::RMatrixFamily out = family;
    out.name = name.empty() ? twist.name + "@" + family.name : name;
    out.param_names = detail::merge_names(family.param_names, twist.param_names);

    if (twist.application == TwistApplication::CONSTANT) {
        if (twist.spectral != Spectral::NONE)
            throw std::invalid_argument(
                "apply_twist: constant application requires a non-spectral twist");
        if (family.dyn_rank == 0) {
            out.dyn_chart = twist.dyn_chart;
            out.dyn_rank = twist.dyn_rank;
            out.weights = twist.weights;
        } else if (family.dyn_chart != twist.dyn_chart ||
                   family.dyn_rank != twist.dyn_rank) {
            throw std::invalid_argument(
                "apply_twist: twist and family dynamical charts differ");
        }
        const bool graded = family.graded_output;
        const gt::GradedSpace space = family.space;
        out.evaluator = [twist, family, graded, space](const EvalPoint& p) -> Mat {
            const Mat P = gt::permutation(space, false);
            Mat F = twist(p);
            if (graded) {
                const Mat Dg = gt::grading_sign_diag(space);
                F = Dg * F * Dg;
            }
            const Mat R = family(p);
            return P * F * P * R * F.inverse();
        };
        return out;
    }

    // ADDITIVE_REFLECT
    if (family.spectral != Spectral::ADD || twist.spectral != Spectral::ADD)
        throw std::invalid_argument(
            "apply_twist: reflected application requires additive spectral "
            "parameters on both sides");
    if (family.graded_output)
        throw std::invalid_argument(
            "apply_twist: reflected application handles non-graded families only");
    const gt::GradedSpace space = family.space;
    out.evaluator = [twist, family, space](const EvalPoint& p) -> Mat {
        if (!p.spectral)
            throw std::invalid_argument("apply_twist: spectral argument required");
        const Mat P = gt::permutation(space, false);
        EvalPoint reflected = p;
        reflected.spectral = -*p.spectral;
        const Mat F21 = P * twist(reflected) * P;
        const Mat F12 = twist(p);
        return F21 * family(p) * F12.inverse();
    };
    return out;
}

/// The hypergeometric block twist packaged for reflected application to the
/// rational family: F(u) at parameter r.
[[nodiscard]] inline catalog::Twist dyr_block_twist(int N) {
    if (N < 2) throw std::invalid_argument("dyr_block_twist: N must be >= 2");
    catalog::Twist t{"dyr_block_twist",
                     gt::GradedSpace::even(N),
                     catalog::Spectral::ADD,
                     std::nullopt,
                     0,
                     catalog::TwistApplication::ADDITIVE_REFLECT,
                     std::nullopt,
                     {"r"},
                     nullptr};
    t.evaluator = [N](const catalog::EvalPoint& p) -> Mat {
        if (!p.spectral)
            throw std::invalid_argument("dyr_block_twist: spectral argument required");
        const Complex r = p.param("r");
        if (std::abs(r.imag()) > 1e-12)
            throw std::invalid_argument("dyr_block_twist: parameter 'r' must be real");
        return solve_dyr_twist(*p.spectral, r.real(), N).assemble();
    };
    return t;
}

// ============================================================================
// Diagonal Fourier gauge
// ============================================================================

/// The discrete-Fourier gauge matrix: V_ij = omega^{(i-1) j}/sqrt(N) in
/// 1-based indices, omega = exp(2 i pi / N).
[[nodiscard]] inline Mat v_gauge(int N) {
    if (N < 2) throw std::invalid_argument("v_gauge: N must be >= 2");
    Mat V(N, N);
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            V(i - 1, j - 1) =
                std::exp(2.0 * kImag * kPi * static_cast<double>((i - 1) * j) /
                         static_cast<double>(N)) *
                inv_sqrt;
    return V;
}

/// Conjugate a two-site matrix by V (x) V.
[[nodiscard]] inline Mat gauge(const Mat& R, const Mat& V) {
    const Mat VV = gt::kron(V, V);
    return VV * R * VV.inverse();
}

// ============================================================================
// Infinite-product form of the rational dynamical twist
// ============================================================================

struct ProductTwistResult {
    Mat value;
    /// max-norm of (factor_k - I), one entry per factor taken
    std::vector<double> correction_norms;
    bool converged = false;
};

/// Build the rational dynamical twist as the ordered product over k >= 0 of
/// the factors with entries Y_{(ab),(cd)} (xt_c/xt_a)^k, where
///   Y = I + (X (x) I)^{-1} rhat,  rhat = -2 sum_{a<b} E_ab (x) E_ba,
///   X = diag(xt_a),  xt_a = x_a + (N-1)/N.
/// Converges when |xt_b/xt_a| < 1 for all a < b, to the closed form
///   I - 2 sum_{a<b} E_ab (x) E_ba/(x_a - x_b).
[[nodiscard]] inline ProductTwistResult product_twist(const std::vector<Complex>& x,
                                                      int max_factors = 256,
                                                      double tol = 1e-15) {
    const int N = static_cast<int>(x.size());
    if (N < 2) throw std::invalid_argument("product_twist: need at least two coordinates");
    std::vector<Complex> xt(x);
    for (auto& v : xt) v += static_cast<double>(N - 1) / N;
    for (int a = 0; a < N; ++a) {
        if (std::abs(xt[static_cast<std::size_t>(a)]) < 1e-12)
            throw singular_parameter_error("product_twist: shifted coordinate is zero");
        for (int b = a + 1; b < N; ++b)
            if (std::abs(xt[static_cast<std::size_t>(b)] /
                         xt[static_cast<std::size_t>(a)]) >= 1.0 - 1e-9)
                throw convergence_error(
                    "product_twist: |xt_b/xt_a| >= 1, product does not converge");
    }

    ProductTwistResult res;
    res.value = Mat::Identity(N * N, N * N);
    std::vector<Complex> ratio_pow(static_cast<std::size_t>(N) *
                                       static_cast<std::size_t>(N),
                                   Complex(1.0));
    for (int k = 0; k < max_factors; ++k) {
        Mat Fk = Mat::Identity(N * N, N * N);
        double corr = 0.0;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b) {
                auto& pw = ratio_pow[static_cast<std::size_t>(a * N + b)];
                const Complex entry =
                    -2.0 / xt[static_cast<std::size_t>(a)] * pw;
                Fk(a * N + b, b * N + a) = entry;
                corr = std::max(corr, std::abs(entry));
                pw *= xt[static_cast<std::size_t>(b)] / xt[static_cast<std::size_t>(a)];
            }
        res.value = res.value * Fk;
        res.correction_norms.push_back(corr);
        if (corr < tol) {
            res.converged = true;
            break;
        }
    }
    if (!res.converged)
        throw convergence_error("product_twist: factor corrections did not reach tolerance");
    return res;
}

}  // namespace gnf::twistlab

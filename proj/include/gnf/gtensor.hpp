#pragma once

// Graded linear algebra for the three module spaces of the library
// (sl_N fundamental, osp(1|2) and sl(1|2) three-dimensional modules):
// graded Kronecker products, the tilde sign transform, permutation
// operators, dynamical-coordinate charts with their shift tables, and the
// spectator-shifted embeddings used by the dynamical Yang-Baxter engines.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <gnf/common.hpp>

namespace gnf::gt {

// ============================================================================
// Graded space
// ============================================================================

/// A Z2-graded vector space given by the parities of its basis vectors.
struct GradedSpace {
    std::vector<int> grading;  // 0 = even, 1 = odd

    explicit GradedSpace(std::vector<int> g) : grading(std::move(g)) {
        if (grading.empty())
            throw std::invalid_argument("GradedSpace: dimension must be >= 1");
        for (int v : grading) {
            if (v != 0 && v != 1)
                throw std::invalid_argument("GradedSpace: grading entries must be 0 or 1");
        }
    }

    [[nodiscard]] int dim() const { return static_cast<int>(grading.size()); }

    [[nodiscard]] bool purely_even() const {
        for (int v : grading)
            if (v != 0) return false;
        return true;
    }

    /// (-1)^{g_i g_j}
    [[nodiscard]] double pair_sign(int i, int j) const {
        return (grading[i] * grading[j]) % 2 ? -1.0 : 1.0;
    }

    /// All-even space of dimension n (the sl_N fundamental module).
    [[nodiscard]] static GradedSpace even(int n) {
        return GradedSpace(std::vector<int>(static_cast<std::size_t>(n), 0));
    }

    /// Three-dimensional module with parities (1, 0, 0).
    [[nodiscard]] static GradedSpace osp12() { return GradedSpace({1, 0, 0}); }

    /// Three-dimensional module with parities (1, 0, 1).
    [[nodiscard]] static GradedSpace sl12() { return GradedSpace({1, 0, 1}); }
};

/// Composite space V (x) W with grading g(i1,i2) = g1(i1) + g2(i2) mod 2.
[[nodiscard]] inline GradedSpace tensor_space(const GradedSpace& V,
                                              const GradedSpace& W) {
    std::vector<int> g;
    g.reserve(static_cast<std::size_t>(V.dim()) * W.dim());
    for (int a : V.grading)
        for (int b : W.grading) g.push_back((a + b) % 2);
    return GradedSpace(std::move(g));
}

// ============================================================================
// Elementary matrices and Kronecker products
// ============================================================================

/// Matrix unit E_ab on a d-dimensional space.
[[nodiscard]] inline Mat unit(int d, int a, int b) {
    Mat m = Mat::Zero(d, d);
    m(a, b) = 1.0;
    return m;
}

/// Plain (ungraded) Kronecker product.
[[nodiscard]] inline Mat kron(const Mat& A, const Mat& B) {
    Mat m = Mat::Zero(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            if (A(i, j) == 0.0) continue;
            m.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        }
    return m;
}

[[nodiscard]] inline Mat kron3(const Mat& A, const Mat& B, const Mat& C) {
    return kron(A, kron(B, C));
}

/// Graded Kronecker product: on matrix units,
///   E_{i1 j1} (x) E_{i2 j2}  carries the sign (-1)^{[i2]([i1]+[j1])},
/// the unique convention making the graded product rule
///   (a (x) b)(c (x) d) = (-1)^{[b][c]} (ac (x) bd)
/// an exact matrix identity.
[[nodiscard]] inline Mat graded_kron(const Mat& A, const Mat& B,
                                     const GradedSpace& V, const GradedSpace& W) {
    const int dA = V.dim(), dB = W.dim();
    if (A.rows() != dA || A.cols() != dA || B.rows() != dB || B.cols() != dB)
        throw std::invalid_argument("graded_kron: operand/space dimension mismatch");
    Mat m = Mat::Zero(dA * dB, dA * dB);
    for (int i1 = 0; i1 < dA; ++i1)
        for (int j1 = 0; j1 < dA; ++j1) {
            if (A(i1, j1) == 0.0) continue;
            const int par1 = (V.grading[i1] + V.grading[j1]) % 2;
            for (int i2 = 0; i2 < dB; ++i2)
                for (int j2 = 0; j2 < dB; ++j2) {
                    if (B(i2, j2) == 0.0) continue;
                    const double s = (W.grading[i2] * par1) % 2 ? -1.0 : 1.0;
                    m(i1 * dB + i2, j1 * dB + j2) = s * A(i1, j1) * B(i2, j2);
                }
        }
    return m;
}

/// Triple graded Kronecker product on V (x) V (x) V.
[[nodiscard]] inline Mat graded_kron3(const Mat& A, const Mat& B, const Mat& C,
                                      const GradedSpace& V) {
    return graded_kron(A, graded_kron(B, C, V, V), V, tensor_space(V, V));
}

// ============================================================================
// Sign transforms and permutations
// ============================================================================

/// Tilde transform: entry ((i1,i2),(j1,j2)) multiplied by (-1)^{[i1][i2]}.
/// Involutive; maps graded-YBE solutions to ordinary-YBE solutions.
[[nodiscard]] inline Mat tilde(const Mat& R, const GradedSpace& V) {
    const int d = V.dim();
    if (R.rows() != d * d || R.cols() != d * d)
        throw std::invalid_argument("tilde: matrix must act on V (x) V");
    Mat out = R;
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2)
            out.row(i1 * d + i2) *= V.pair_sign(i1, i2);
    return out;
}

/// Permutation operator on V (x) V: v_i (x) v_j -> v_j (x) v_i, optionally
/// with the graded sign (-1)^{[i][j]}.
[[nodiscard]] inline Mat permutation(const GradedSpace& V, bool graded) {
    const int d = V.dim();
    Mat P = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            P(j * d + i, i * d + j) = graded ? V.pair_sign(i, j) : 1.0;
    return P;
}

/// Diagonal of tilde signs: diag((-1)^{[i][j]}) on V (x) V.  This equals
/// tilde(identity) and is the dressing factor that converts a plain-world
/// constant twist into its tilde-world counterpart.
[[nodiscard]] inline Mat grading_sign_diag(const GradedSpace& V) {
    const int d = V.dim();
    Mat D = Mat::Identity(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) D(i * d + j, i * d + j) = V.pair_sign(i, j);
    return D;
}

// ============================================================================
// Dynamical coordinates
// ============================================================================

/// Coordinate chart for the dynamical parameter: the s_i weights (S_COORDS),
/// the x_a differences (X_COORDS), or multiplicative w coordinates
/// (W_COORDS, typically w = q^{x}).
enum class Chart { S_COORDS, X_COORDS, W_COORDS };

struct DynParams {
    std::vector<Complex> coords;
    Chart chart = Chart::X_COORDS;

    [[nodiscard]] int rank() const { return static_cast<int>(coords.size()); }
};

/// Per-basis-vector shift rows realizing the dynamical rule
/// lambda -> lambda + h^(k): when the k-th space carries basis vector c,
/// coordinate i moves by shifts[c][i] (additively for S/X charts,
/// multiplicatively by base^{shifts[c][i]} for the W chart).
struct WeightTable {
    std::vector<std::vector<double>> shifts;

    explicit WeightTable(std::vector<std::vector<double>> rows)
        : shifts(std::move(rows)) {
        if (shifts.empty())
            throw std::invalid_argument("WeightTable: at least one row required");
        const std::size_t r = shifts.front().size();
        for (const auto& row : shifts) {
            if (row.size() != r)
                throw std::invalid_argument("WeightTable: ragged rows");
        }
    }

    [[nodiscard]] int states() const { return static_cast<int>(shifts.size()); }
    [[nodiscard]] int rank() const {
        return static_cast<int>(shifts.front().size());
    }

    [[nodiscard]] static WeightTable zero(int states, int rank) {
        return WeightTable(std::vector<std::vector<double>>(
            static_cast<std::size_t>(states),
            std::vector<double>(static_cast<std::size_t>(rank), 0.0)));
    }
};

/// Apply one weight-table row to a dynamical point.  Additive charts add the
/// row; the multiplicative W chart multiplies coordinate i by
/// mult_base^{row[i]} and therefore needs the deformation base.
[[nodiscard]] inline DynParams shifted(const DynParams& p, const WeightTable& wt,
                                       int state, Complex mult_base = 1.0) {
    if (state < 0 || state >= wt.states())
        throw std::invalid_argument("shifted: state index out of range");
    if (p.rank() != wt.rank())
        throw std::invalid_argument("shifted: coordinate/table rank mismatch");
    DynParams out = p;
    const auto& row = wt.shifts[static_cast<std::size_t>(state)];
    if (p.chart == Chart::W_COORDS) {
        for (int i = 0; i < p.rank(); ++i) {
            if (row[static_cast<std::size_t>(i)] == 0.0) continue;
            if (std::abs(mult_base - 1.0) < 1e-15)
                throw std::invalid_argument(
                    "shifted: multiplicative chart requires the deformation base");
            out.coords[static_cast<std::size_t>(i)] *=
                std::pow(mult_base, row[static_cast<std::size_t>(i)]);
        }
    } else {
        for (int i = 0; i < p.rank(); ++i)
            out.coords[static_cast<std::size_t>(i)] += row[static_cast<std::size_t>(i)];
    }
    return out;
}

// ============================================================================
// Chart conversions
// ============================================================================

/// x_a = 2 s_a - 2 s_{a-1} with s_0 = s_N = 0; maps N-1 weight coordinates
/// to N traceless x coordinates.
[[nodiscard]] inline std::vector<Complex> x_from_s(const std::vector<Complex>& s) {
    const std::size_t n1 = s.size();
    std::vector<Complex> x(n1 + 1);
    Complex prev = 0.0;
    for (std::size_t a = 0; a < n1; ++a) {
        x[a] = 2.0 * s[a] - 2.0 * prev;
        prev = s[a];
    }
    x[n1] = -2.0 * prev;
    return x;
}

/// Inverse of x_from_s; requires the x coordinates to sum to zero.
[[nodiscard]] inline std::vector<Complex> s_from_x(const std::vector<Complex>& x,
                                                   double tol = 1e-9) {
    if (x.size() < 2)
        throw std::invalid_argument("s_from_x: need at least two coordinates");
    Complex total = 0.0;
    for (const Complex& v : x) total += v;
    if (std::abs(total) > tol)
        throw std::invalid_argument("s_from_x: coordinates must sum to zero");
    std::vector<Complex> s(x.size() - 1);
    Complex run = 0.0;
    for (std::size_t a = 0; a + 1 < x.size(); ++a) {
        run += x[a];
        s[a] = 0.5 * run;
    }
    return s;
}

// ============================================================================
// Spectator-shifted embeddings
// ============================================================================

/// Embed a two-site operator R(lambda) into slots (p,q) of V (x) V (x) V,
/// optionally shifting the dynamical argument by the weight row of the
/// spectator slot's basis vector: the block carrying basis vector c on the
/// spectator slot holds R(lambda + wt-row(c)).  Placement is non-graded
/// (super identities are stated for tilde matrices).  Slots are 1-based;
/// shift_space, when set, must be the spectator slot.
[[nodiscard]] inline Mat embed_with_shift(
    const std::function<Mat(const DynParams&)>& rfun, std::pair<int, int> slots,
    std::optional<int> shift_space, const DynParams& lambda,
    const WeightTable& wt, const GradedSpace& V, Complex mult_base = 1.0) {
    const auto [p, q] = slots;
    if (!((p == 1 && q == 2) || (p == 1 && q == 3) || (p == 2 && q == 3)))
        throw std::invalid_argument("embed_with_shift: slots must be (1,2), (1,3) or (2,3)");
    const int spectator = 6 - p - q;
    if (shift_space && *shift_space != spectator)
        throw std::invalid_argument("embed_with_shift: shift_space must be the spectator slot");

    const int d = V.dim();
    Mat out = Mat::Zero(d * d * d, d * d * d);
    Mat r_unshifted;
    if (!shift_space) r_unshifted = rfun(lambda);

    for (int c = 0; c < d; ++c) {
        const Mat& R = shift_space
                           ? (r_unshifted = rfun(shifted(lambda, wt, c, mult_base)))
                           : r_unshifted;
        if (R.rows() != d * d || R.cols() != d * d)
            throw std::invalid_argument("embed_with_shift: evaluator dimension mismatch");
        if (p == 1 && q == 2) {
            for (int i1 = 0; i1 < d; ++i1)
                for (int i2 = 0; i2 < d; ++i2)
                    for (int j1 = 0; j1 < d; ++j1)
                        for (int j2 = 0; j2 < d; ++j2) {
                            const Complex v = R(i1 * d + i2, j1 * d + j2);
                            if (v == 0.0) continue;
                            out((i1 * d + i2) * d + c, (j1 * d + j2) * d + c) = v;
                        }
        } else if (p == 2 && q == 3) {
            for (int i2 = 0; i2 < d; ++i2)
                for (int i3 = 0; i3 < d; ++i3)
                    for (int j2 = 0; j2 < d; ++j2)
                        for (int j3 = 0; j3 < d; ++j3) {
                            const Complex v = R(i2 * d + i3, j2 * d + j3);
                            if (v == 0.0) continue;
                            out((c * d + i2) * d + i3, (c * d + j2) * d + j3) = v;
                        }
        } else {
            for (int i1 = 0; i1 < d; ++i1)
                for (int i3 = 0; i3 < d; ++i3)
                    for (int j1 = 0; j1 < d; ++j1)
                        for (int j3 = 0; j3 < d; ++j3) {
                            const Complex v = R(i1 * d + i3, j1 * d + j3);
                            if (v == 0.0) continue;
                            out((i1 * d + c) * d + i3, (j1 * d + c) * d + j3) = v;
                        }
        }
    }
    return out;
}

}  // namespace gnf::gt

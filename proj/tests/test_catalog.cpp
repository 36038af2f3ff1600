// Catalog tests: printed-table cross-checks, boundary values, the
// universal-element product formula, frozen shift tables, registry behavior
// and structured singularity errors.

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gnf/catalog.hpp>
#include <gnf/gtensor.hpp>
#include <gnf/specfun.hpp>

using namespace gnf;
using catalog::EvalPoint;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

EvalPoint point(std::optional<Complex> spectral = std::nullopt) {
    EvalPoint p;
    p.spectral = spectral;
    return p;
}

EvalPoint w_point(std::optional<Complex> spectral, std::vector<Complex> w,
                  Complex q) {
    EvalPoint p;
    p.spectral = spectral;
    p.dyn = gt::DynParams{std::move(w), gt::Chart::W_COORDS};
    p.params["q"] = q;
    return p;
}

EvalPoint x_point(std::optional<Complex> spectral, std::vector<Complex> x) {
    EvalPoint p;
    p.spectral = spectral;
    p.dyn = gt::DynParams{std::move(x), gt::Chart::X_COORDS};
    return p;
}

/// All sl_N-type matrices in the catalog conserve the unordered index pair:
/// R_{ab}^{cd} = 0 unless (c,d) is (a,b) or (b,a).
void check_pair_conservation(const Mat& R, int N) {
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    const bool allowed = (c == a && d == b) || (c == b && d == a);
                    if (!allowed)
                        REQUIRE(std::abs(R(a * N + b, c * N + d)) == 0.0);
                }
}

}  // namespace

// ============================================================================
// Rational family
// ============================================================================

TEST_CASE("rational family entries and scalar factor") {
    const auto dy2 = catalog::dy_slN(2);

    SECTION("real point u = 1 on sl_2") {
        const Mat R = dy2(point(Complex(1.0)));
        const double h = kPi / 2.0;
        REQUIRE(std::abs(R(0, 0) - h) < 5e-14);
        REQUIRE(std::abs(R(3, 3) - h) < 5e-14);
        REQUIRE(std::abs(R(1, 1) - h / 2.0) < 5e-14);
        REQUIRE(std::abs(R(1, 2) - h / 2.0) < 5e-14);
        REQUIRE(std::abs(R(2, 1) - h / 2.0) < 5e-14);
        REQUIRE(std::abs(R(2, 2) - h / 2.0) < 5e-14);
        check_pair_conservation(R, 2);
    }

    SECTION("normalized entries at a complex point") {
        const Complex u(0.7, 0.4);
        EvalPoint p = point(u);
        p.normalized = true;
        const Mat R = dy2(p);
        REQUIRE(std::abs(R(0, 0) - 1.0) < 1e-15);
        REQUIRE(std::abs(R(1, 1) - u / (u + 1.0)) < 1e-15);
        REQUIRE(std::abs(R(1, 2) - 1.0 / (u + 1.0)) < 1e-15);
    }

    SECTION("raw equals the scalar factor times the normalized matrix") {
        for (int N : {2, 3}) {
            const auto fam = catalog::dy_slN(N);
            const Complex u(1.3, 0.25);
            EvalPoint raw = point(u);
            EvalPoint norm = point(u);
            norm.normalized = true;
            const Mat gap = fam(raw) - specfun::rho_dy(u, N) * fam(norm);
            REQUIRE(max_abs(gap) < 1e-14);
        }
    }

    SECTION("singular and missing arguments") {
        REQUIRE_THROWS_AS(dy2(point(Complex(-1.0))), singular_parameter_error);
        REQUIRE_THROWS_AS(dy2(point()), std::invalid_argument);
        REQUIRE_THROWS_AS(catalog::dy_slN(1), std::invalid_argument);
    }
}

TEST_CASE("trigonometric normalizations carry the same scalar") {
    SECTION("gauged trigonometric form") {
        const auto fam = catalog::dyr_slN(3);
        const Complex u(1.1, 0.3);
        EvalPoint raw = point(u);
        raw.params["r"] = 5.0;
        EvalPoint norm = raw;
        norm.normalized = true;
        const Mat A = fam(raw);
        const Mat B = fam(norm);
        // every nonzero entry of the raw matrix is prefactor * bare entry
        Complex ratio = 0.0;
        for (int i = 0; i < 9 && ratio == 0.0; ++i)
            for (int j = 0; j < 9; ++j)
                if (std::abs(B(i, j)) > 1e-8) {
                    ratio = A(i, j) / B(i, j);
                    break;
                }
        REQUIRE(max_abs(A - ratio * B) < 1e-12 * max_abs(A));
    }

    SECTION("affine trigonometric form") {
        const auto fam = catalog::uql_slN(2);
        EvalPoint raw = w_point(Complex(0.37, 0.21), {Complex(1.3, 0.4), Complex(0.5, -0.3)},
                                Complex(0.45, 0.08));
        EvalPoint norm = raw;
        norm.normalized = true;
        const Mat gap = fam(raw) - catalog::detail::rho_uql(Complex(0.37, 0.21),
                                                            Complex(0.45, 0.08), 2) *
                                       fam(norm);
        REQUIRE(max_abs(gap) < 1e-13);
    }
}

// ============================================================================
// Constant quantum-group family and the universal-element product
// ============================================================================

TEST_CASE("constant family matches its universal-element product image") {
    const Complex q(0.7, 0.2);
    for (int N : {2, 3, 4}) {
        const auto fam = catalog::uq_slN(N);
        EvalPoint p;
        p.params["q"] = q;
        const Mat direct = fam(p);
        const Mat product = catalog::uq_slN_from_product(N, q);
        REQUIRE(max_abs(direct - product) < 1e-13 * max_abs(direct));
        check_pair_conservation(direct, N);
    }
}

TEST_CASE("constant family collapses to the identity at q = 1") {
    const auto fam = catalog::uq_slN(3);
    EvalPoint p;
    p.params["q"] = 1.0;
    REQUIRE(max_abs(fam(p) - Mat::Identity(9, 9)) < 1e-14);
}

// ============================================================================
// Printed-table cross-checks
// ============================================================================

TEST_CASE("Baxterised family reproduces the printed coefficient table") {
    const auto fam = catalog::baxterised_osp12(catalog::BaxterisationBranch::MINUS_Q);
    const std::vector<Complex> zs{{0.3, 0.2}, {1.7, -0.5}, {-0.8, 0.4}};
    const std::vector<Complex> qs{{0.6, 0.1}, {1.4, -0.3}};
    for (const Complex& z : zs)
        for (const Complex& q : qs) {
            EvalPoint p = point(z);
            p.params["q"] = q;
            const Mat computed = fam(p);
            const Mat printed = catalog::baxterised_osp12_printed_minus_q(z, q);
            REQUIRE(max_abs(computed - printed) < 1e-12 * max_abs(printed));
        }
}

TEST_CASE("Baxterised family boundary values") {
    const Complex q(0.62, 0.14);
    const Mat Rt = catalog::detail::uq_osp12_matrix(q);
    const Mat P = gt::permutation(gt::GradedSpace::even(3), false);

    for (auto branch : {catalog::BaxterisationBranch::MINUS_Q,
                        catalog::BaxterisationBranch::Q_CUBED}) {
        const auto fam = catalog::baxterised_osp12(branch);
        EvalPoint p = point(Complex(0.0));
        p.params["q"] = q;

        SECTION(fam.name + ": z = 0 recovers the constant matrix") {
            REQUIRE(max_abs(fam(p) - Rt) < 1e-14);
        }

        SECTION(fam.name + ": z = 1 is the scaled permutation") {
            p.spectral = Complex(1.0);
            REQUIRE(max_abs(fam(p) - P / q) < 1e-13);
        }

        SECTION(fam.name + ": far field approaches the flipped inverse") {
            // O(1/z) from the z -> infinity anchor
            p.spectral = Complex(1e8);
            const Mat target = (P * Rt * P).inverse() / (q * q);
            REQUIRE(max_abs(fam(p) - target) < 1e-6);
        }
    }
}

TEST_CASE("constant graded matrix at q = 1 untildes to the identity") {
    const Mat M = catalog::detail::uq_osp12_matrix(Complex(1.0));
    REQUIRE(max_abs(gt::tilde(M, gt::GradedSpace::osp12()) - Mat::Identity(9, 9)) <
            1e-15);
}

TEST_CASE("twisted constant graded family reproduces the printed table") {
    const auto fam = catalog::bql_osp12();
    const std::vector<std::pair<Complex, Complex>> pts{
        {{0.55, 0.1}, {1.7, 0.6}},
        {{1.3, -0.2}, {0.4, 0.9}},
        {{0.8, 0.3}, {-2.1, 0.5}},
    };
    for (const auto& [q, w] : pts) {
        EvalPoint p;
        p.params["q"] = q;
        p.dyn = gt::DynParams{{w}, gt::Chart::W_COORDS};
        const Mat computed = fam(p);
        const Mat printed = catalog::bql_osp12_printed(q, w);
        REQUIRE(max_abs(computed - printed) < 1e-11 * max_abs(printed));
    }
}

// ============================================================================
// Frozen shift tables and family metadata
// ============================================================================

TEST_CASE("frozen shift tables") {
    SECTION("fundamental tables have zero row sums") {
        for (int N : {2, 3, 4}) {
            const auto wt = catalog::weight_table_slN(N);
            REQUIRE(wt.states() == N);
            REQUIRE(wt.rank() == N);
            for (int c = 0; c < N; ++c) {
                double sum = 0.0;
                for (int a = 0; a < N; ++a) {
                    const double expect = 2.0 * ((a == c ? 1.0 : 0.0) - 1.0 / N);
                    REQUIRE(wt.shifts[c][a] == Catch::Approx(expect).margin(1e-15));
                    sum += wt.shifts[c][a];
                }
                REQUIRE(sum == Catch::Approx(0.0).margin(1e-12));
            }
        }
    }

    SECTION("graded module tables are pinned") {
        const auto osp = catalog::weight_table_osp12();
        REQUIRE(osp.shifts == std::vector<std::vector<double>>{{0.0}, {2.0}, {-2.0}});
        const auto sl12 = catalog::weight_table_sl12();
        REQUIRE(sl12.shifts == std::vector<std::vector<double>>{
                                   {0.0, -1.0}, {1.0, -1.0}, {1.0, 0.0}});
    }

    SECTION("families carry their tables") {
        REQUIRE(catalog::bql_slN(2).weights.has_value());
        REQUIRE(catalog::bql_slN(2).weights->shifts ==
                catalog::weight_table_slN(2).shifts);
        REQUIRE(catalog::us_osp12().weights->shifts ==
                catalog::weight_table_osp12().shifts);
        REQUIRE(catalog::us_sl12().weights->shifts ==
                catalog::weight_table_sl12().shifts);
        REQUIRE_FALSE(catalog::dy_slN(2).weights.has_value());
    }
}

TEST_CASE("family metadata is consistent") {
    struct Expect {
        std::string name;
        catalog::Spectral spectral;
        bool graded_output;
        int dyn_rank;
    };
    const std::vector<Expect> table{
        {"dy_slN", catalog::Spectral::ADD, false, 0},
        {"dyr_slN", catalog::Spectral::ADD, false, 0},
        {"dy_sl12", catalog::Spectral::ADD, true, 0},
        {"dyr_sl12", catalog::Spectral::ADD, true, 0},
        {"uq_slN", catalog::Spectral::NONE, false, 0},
        {"bql_slN", catalog::Spectral::NONE, false, 3},
        {"uq_osp12", catalog::Spectral::NONE, true, 0},
        {"bql_osp12", catalog::Spectral::NONE, true, 1},
        {"us_slN", catalog::Spectral::NONE, false, 3},
        {"us_osp12", catalog::Spectral::NONE, true, 1},
        {"us_sl12", catalog::Spectral::NONE, true, 2},
        {"uql_slN", catalog::Spectral::MULT, false, 3},
        {"baxterised_osp12", catalog::Spectral::MULT, true, 0},
        {"uql_osp12", catalog::Spectral::MULT, true, 1},
        {"dys_slN", catalog::Spectral::ADD, false, 3},
        {"dys_sl12", catalog::Spectral::ADD, true, 2},
        {"bqpl_slN", catalog::Spectral::MULT, false, 3},
    };
    for (const auto& e : table) {
        const auto fam = catalog::make_family(e.name, {{"N", "3"}});
        INFO(e.name);
        REQUIRE(fam.spectral == e.spectral);
        REQUIRE(fam.graded_output == e.graded_output);
        REQUIRE(fam.dyn_rank == e.dyn_rank);
        REQUIRE(fam.evaluator != nullptr);
    }
}

// ============================================================================
// Registry
// ============================================================================

TEST_CASE("registry constructs every catalogued family and twist") {
    const auto names = catalog::family_names();
    REQUIRE(names.size() == 19);
    for (const auto& name : names) {
        const auto fam = catalog::make_family(name, {{"N", "2"}});
        REQUIRE_FALSE(fam.name.empty());
        REQUIRE(fam.space.dim() >= 2);
    }
    const auto twists = catalog::twist_names();
    REQUIRE(twists.size() == 5);
    for (const auto& name : twists) {
        const auto tw = catalog::make_twist(name, {{"N", "2"}});
        REQUIRE_FALSE(tw.name.empty());
        REQUIRE(tw.evaluator != nullptr);
    }
}

TEST_CASE("registry rejects malformed requests") {
    REQUIRE_THROWS_AS(catalog::make_family("no_such_family"), std::invalid_argument);
    REQUIRE_THROWS_WITH(catalog::make_family("no_such_family"),
                        ContainsSubstring("unknown family"));
    REQUIRE_THROWS_WITH(catalog::make_family("dy_slN"),
                        ContainsSubstring("option 'N' is required"));
    REQUIRE_THROWS_WITH(catalog::make_family("dy_slN", {{"N", "two"}}),
                        ContainsSubstring("must be an integer"));
    REQUIRE_THROWS_AS(catalog::make_family("baxterised_osp12", {{"a", "q^5"}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(catalog::make_family("bqpl_slN", {{"N", "2"}, {"variant", "x"}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(catalog::make_twist("no_such_twist"), std::invalid_argument);
}

TEST_CASE("registry option routing") {
    REQUIRE(catalog::make_family("baxterised_osp12").name == "baxterised_osp12[a=-q]");
    REQUIRE(catalog::make_family("baxterised_osp12", {{"a", "q^3"}}).name ==
            "baxterised_osp12[a=q^3]");
    REQUIRE(catalog::make_family("baxterised_osp12", {{"a", "q3"}}).name ==
            "baxterised_osp12[a=q^3]");
    REQUIRE(catalog::make_family("bqpl_slN", {{"N", "2"}}).name ==
            "bqpl_slN[standard]");
    REQUIRE(catalog::make_family("bqpl_slN", {{"N", "2"}, {"variant", "gauged"}}).name ==
            "bqpl_slN[gauged]");
    REQUIRE(catalog::make_family("bqpl_slN", {{"N", "2"}, {"variant", "bis"}}).name ==
            "bqpl_slN[gauged]");
}

// ============================================================================
// Structured singularity errors
// ============================================================================

TEST_CASE("dynamical singularities raise structured errors") {
    SECTION("coincident multiplicative coordinates") {
        const auto fam = catalog::bql_slN(2);
        REQUIRE_THROWS_MATCHES(
            fam(w_point(std::nullopt, {Complex(1.0), Complex(1.0)}, Complex(0.6))),
            singular_parameter_error, MessageMatches(ContainsSubstring("w_ab = 1")));
    }

    SECTION("vanishing multiplicative coordinate") {
        const auto tw = catalog::twist_bql_slN(2);
        REQUIRE_THROWS_MATCHES(
            tw(w_point(std::nullopt, {Complex(1.0), Complex(0.0)}, Complex(0.6))),
            singular_parameter_error, MessageMatches(ContainsSubstring("w_b = 0")));
    }

    SECTION("spectral pole of the affine family") {
        const auto fam = catalog::uql_slN(2);
        const Complex q(0.5, 0.0);
        // z = q^{-2} sits on the guarded pole
        REQUIRE_THROWS_MATCHES(
            fam(w_point(Complex(4.0), {Complex(2.0), Complex(0.7)}, q)),
            singular_parameter_error, MessageMatches(ContainsSubstring("q^2 z = 1")));
    }

    SECTION("coincident additive coordinates") {
        const auto fam = catalog::us_slN(2);
        REQUIRE_THROWS_MATCHES(fam(x_point(std::nullopt, {Complex(3.0), Complex(3.0)})),
                               singular_parameter_error,
                               MessageMatches(ContainsSubstring("x_a = x_b")));
    }

    SECTION("wrong chart or rank is a usage error, not a singularity") {
        const auto fam = catalog::bql_slN(2);
        EvalPoint p = x_point(std::nullopt, {Complex(1.0), Complex(2.0)});
        p.params["q"] = 0.6;
        REQUIRE_THROWS_MATCHES(fam(p), std::invalid_argument,
                               MessageMatches(ContainsSubstring("wrong chart")));
        REQUIRE_THROWS_MATCHES(
            fam(w_point(std::nullopt, {Complex(1.0)}, Complex(0.6))),
            std::invalid_argument, MessageMatches(ContainsSubstring("rank mismatch")));
    }

    SECTION("missing named parameter") {
        const auto fam = catalog::uq_slN(2);
        REQUIRE_THROWS_MATCHES(fam(point()), std::invalid_argument,
                               MessageMatches(ContainsSubstring("missing parameter 'q'")));
    }

    SECTION("elliptic nome must lie in the unit disc") {
        const auto fam = catalog::bqpl_slN(2, true);
        EvalPoint p = w_point(Complex(0.4, 0.1), {Complex(1.5), Complex(0.5)},
                              Complex(0.5));
        p.params["p"] = 1.2;
        REQUIRE_THROWS_AS(fam(p), std::domain_error);
    }
}

// ============================================================================
// Structural conservation law
// ============================================================================

TEST_CASE("fundamental-module matrices conserve the index pair") {
    const Complex q(0.55, 0.12);

    {
        EvalPoint p = w_point(std::nullopt, {Complex(1.4, 0.2), Complex(0.6, -0.3),
                                             Complex(2.2, 0.5)},
                              q);
        check_pair_conservation(catalog::bql_slN(3)(p), 3);
    }
    {
        EvalPoint p = w_point(Complex(0.3, 0.2), {Complex(1.4, 0.2),
                                                  Complex(0.6, -0.3)},
                              q);
        check_pair_conservation(catalog::uql_slN(2)(p), 2);
    }
    {
        EvalPoint p = w_point(Complex(0.3, 0.2), {Complex(1.4, 0.2),
                                                  Complex(0.6, -0.3)},
                              q);
        p.params["p"] = Complex(0.1, 0.05);
        check_pair_conservation(catalog::bqpl_slN(2, false)(p), 2);
        check_pair_conservation(catalog::bqpl_slN(2, true)(p), 2);
    }
    {
        EvalPoint p = x_point(Complex(0.8, 0.1), {Complex(1.0), Complex(7.5),
                                                  Complex(15.0)});
        check_pair_conservation(catalog::dys_slN(3)(p), 3);
        check_pair_conservation(catalog::us_slN(3)(x_point(std::nullopt,
                                                           {Complex(1.0), Complex(7.5),
                                                            Complex(15.0)})),
                                3);
    }
}

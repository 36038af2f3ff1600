// Twist-laboratory tests: the hypergeometric block twist and its difference /
// shift equations, reflected and constant twist application against the
// catalogued closed forms, the Fourier gauge and the infinite-product twist.

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <vector>

#include <gnf/catalog.hpp>
#include <gnf/twistlab.hpp>
#include <gnf/verify.hpp>

using namespace gnf;
using catalog::EvalPoint;

namespace {

EvalPoint spectral_point(Complex u, double r) {
    EvalPoint p;
    p.spectral = u;
    p.params["r"] = r;
    return p;
}

}  // namespace

// ============================================================================
// Block twist coefficients
// ============================================================================

TEST_CASE("block coefficients satisfy their three-term difference equations") {
    const std::vector<Complex> us{{0.7, 0.0}, {1.3, 0.4}, {0.45, -0.2}};
    for (int N : {2, 3}) {
        for (double r : {2.3, 5.0}) {
            for (int k = 1; k < N; ++k) {
                const Complex z =
                    std::exp(2.0 * kImag * kPi * static_cast<double>(k) /
                             static_cast<double>(N));
                for (const Complex& u : us) {
                    INFO("N=" << N << " r=" << r << " k=" << k << " u=" << u);
                    REQUIRE(twistlab::block_difference_residual_b(u, r, z) < 1e-11);
                    REQUIRE(twistlab::block_difference_residual_c(u, r, z) < 1e-11);
                }
            }
        }
    }
}

TEST_CASE("block twist satisfies the linear shift equation") {
    const std::vector<Complex> us{{0.6, 0.0}, {0.9, 0.3}, {1.4, -0.15}};
    for (int N : {2, 3}) {
        for (double r : {2.3, 5.0}) {
            for (const Complex& u : us) {
                INFO("N=" << N << " r=" << r << " u=" << u);
                REQUIRE(twistlab::linear_shift_residual(u, r, N) < 1e-10);
            }
        }
    }
}

TEST_CASE("block twist construction guards") {
    REQUIRE_THROWS_AS(twistlab::BlockTwist(1), std::invalid_argument);
    REQUIRE_THROWS_AS(twistlab::solve_dyr_twist(Complex(0.5), 2.0, 1),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(twistlab::solve_dyr_twist(Complex(0.5), -1.0, 2),
                      std::invalid_argument);

    const auto bt = twistlab::solve_dyr_twist(Complex(0.8), 3.0, 3);
    const Mat F = bt.assemble();
    REQUIRE(F.rows() == 9);
    REQUIRE(F.cols() == 9);
    for (int a = 0; a < 3; ++a) REQUIRE(F(4 * a, 4 * a) == Complex(1.0));
    // off-diagonal blocks carry the (diagonal, exchange) pair and nothing else
    REQUIRE(F(1, 1) == bt.blocks[0][1].first);
    REQUIRE(F(1, 3) == bt.blocks[0][1].second);
    REQUIRE(std::abs(F(1, 2)) == 0.0);
}

// ============================================================================
// Reflected application: twisting the rational family into the
// trigonometric one
// ============================================================================

TEST_CASE("reflected block twist turns the rational family trigonometric") {
    for (int N : {2, 3}) {
        const auto twisted =
            twistlab::apply_twist(twistlab::dyr_block_twist(N), catalog::dy_slN(N));
        const auto target = catalog::dyr_slN(N);
        for (double r : {2.3, 5.0}) {
            for (int k = 0; k < 5; ++k) {
                const Complex u(0.35 + 0.22 * k, 0.1 + 0.06 * k);
                const EvalPoint p = spectral_point(u, r);
                // the reflected product reproduces the target family up to a
                // u-dependent scalar, so compare patterns and spreads
                const auto prop = verify::proportionality(twisted(p), target(p));
                INFO("N=" << N << " r=" << r << " u=" << u);
                REQUIRE(prop.pattern_ok);
                REQUIRE(prop.spread < 1e-8);
            }
        }
    }
}

TEST_CASE("reflected application metadata and guards") {
    const auto tw = twistlab::dyr_block_twist(2);
    REQUIRE(tw.application == catalog::TwistApplication::ADDITIVE_REFLECT);

    const auto twisted = twistlab::apply_twist(tw, catalog::dy_slN(2));
    REQUIRE(twisted.name == "dyr_block_twist@dy_slN");
    REQUIRE(twisted.spectral == catalog::Spectral::ADD);
    REQUIRE(std::find(twisted.param_names.begin(), twisted.param_names.end(),
                      "r") != twisted.param_names.end());

    // reflected application refuses non-additive or tilde-form targets
    REQUIRE_THROWS_AS(twistlab::apply_twist(tw, catalog::uq_slN(2)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(twistlab::apply_twist(tw, catalog::dy_sl12()),
                      std::invalid_argument);

    // a spectral twist cannot be applied through the constant path
    catalog::Twist broken = tw;
    broken.application = catalog::TwistApplication::CONSTANT;
    REQUIRE_THROWS_AS(twistlab::apply_twist(broken, catalog::uq_slN(2)),
                      std::invalid_argument);

    // spectral argument is required at evaluation time
    EvalPoint p;
    p.params["r"] = 2.0;
    REQUIRE_THROWS_AS(twisted(p), std::invalid_argument);
    EvalPoint pc = spectral_point(Complex(0.5), 2.0);
    pc.params["r"] = Complex(2.0, 0.5);
    REQUIRE_THROWS_AS(twisted(pc), std::invalid_argument);
}

// ============================================================================
// Constant application against the catalogued closed forms
// ============================================================================

TEST_CASE("constant twist application reproduces the catalogued families") {
    SECTION("fundamental module") {
        for (int N : {2, 3}) {
            const auto twisted = twistlab::apply_twist(catalog::twist_bql_slN(N),
                                                       catalog::uq_slN(N));
            const auto target = catalog::bql_slN(N);
            EvalPoint p;
            p.params["q"] = Complex(0.63, 0.11);
            std::vector<Complex> w;
            for (int a = 0; a < N; ++a)
                w.emplace_back(1.2 + 0.8 * a, 0.3 - 0.2 * a);
            p.dyn = gt::DynParams{w, gt::Chart::W_COORDS};
            const Mat gap = twisted(p) - target(p);
            INFO("N=" << N);
            REQUIRE(max_abs(gap) < 1e-12 * max_abs(target(p)));
        }
    }

    SECTION("graded osp(1|2) module dresses the twist with grading signs") {
        const auto twisted = twistlab::apply_twist(catalog::twist_bql_osp12(),
                                                   catalog::uq_osp12());
        EvalPoint p;
        p.params["q"] = Complex(0.58, 0.2);
        p.dyn = gt::DynParams{{Complex(1.9, 0.7)}, gt::Chart::W_COORDS};
        const Mat expect = catalog::bql_osp12_printed(Complex(0.58, 0.2),
                                                      Complex(1.9, 0.7));
        REQUIRE(max_abs(Mat(twisted(p) - expect)) < 1e-11 * max_abs(expect));
        REQUIRE(twisted.dyn_chart == gt::Chart::W_COORDS);
        REQUIRE(twisted.dyn_rank == 1);
        REQUIRE(twisted.weights.has_value());
    }

    SECTION("graded sl(1|2) module: constant twist of the rational solution") {
        const auto twisted = twistlab::apply_twist(catalog::twist_us_sl12(),
                                                   catalog::dy_sl12());
        const auto target = catalog::dys_sl12();
        for (int k = 0; k < 4; ++k) {
            EvalPoint p;
            p.spectral = Complex(0.5 + 0.3 * k, 0.2);
            p.dyn = gt::DynParams{{Complex(2.3, 0.4), Complex(-1.7, 0.6)},
                                  gt::Chart::S_COORDS};
            const Mat gap = twisted(p) - target(p);
            INFO("k=" << k);
            REQUIRE(max_abs(gap) < 1e-12 * max_abs(target(p)));
        }
    }

    SECTION("chart mismatch between twist and dynamical family is rejected") {
        REQUIRE_THROWS_AS(
            twistlab::apply_twist(catalog::twist_us_slN(2), catalog::bql_slN(2)),
            std::invalid_argument);
    }
}

// ============================================================================
// Fourier gauge
// ============================================================================

TEST_CASE("Fourier gauge links the barred and gauged trigonometric forms") {
    for (int N : {2, 3}) {
        const Mat V = twistlab::v_gauge(N);

        // unitary up to machine precision
        const Mat VVh = V * V.adjoint();
        REQUIRE(max_abs(Mat(VVh - Mat::Identity(N, N))) < 1e-14);

        const auto barred = catalog::dyr_slN_bar(N);
        const auto gauged = catalog::dyr_slN(N);
        for (double r : {2.3, 5.0}) {
            for (int k = 0; k < 4; ++k) {
                const Complex u(0.4 + 0.25 * k, 0.15);
                const EvalPoint p = spectral_point(u, r);
                const Mat lhs = twistlab::gauge(barred(p), V);
                const Mat rhs = gauged(p);
                INFO("N=" << N << " r=" << r << " u=" << u);
                REQUIRE(max_abs(Mat(lhs - rhs)) < 1e-10 * max_abs(rhs));
            }
        }
    }
    REQUIRE_THROWS_AS(twistlab::v_gauge(1), std::invalid_argument);
}

// ============================================================================
// Infinite-product twist
// ============================================================================

TEST_CASE("infinite-product twist converges to the closed form") {
    const std::vector<Complex> x{{21.0, 0.3}, {5.1, -0.2}, {1.3, 0.4}};
    const auto res = twistlab::product_twist(x);
    REQUIRE(res.converged);
    REQUIRE(res.correction_norms.size() >= 2);
    REQUIRE(res.correction_norms.back() < 1e-15);

    EvalPoint p;
    p.dyn = gt::DynParams{x, gt::Chart::X_COORDS};
    const Mat closed = catalog::twist_us_slN(3)(p);
    REQUIRE(max_abs(Mat(res.value - closed)) < 1e-12);
}

TEST_CASE("infinite-product twist rejects non-contracting coordinates") {
    // increasing moduli: the factor corrections grow instead of decaying
    REQUIRE_THROWS_AS(twistlab::product_twist({Complex(1.0), Complex(9.0)}),
                      convergence_error);
    // a shifted coordinate at zero makes the factors singular (xt = x + 1/2)
    REQUIRE_THROWS_AS(twistlab::product_twist({Complex(4.0), Complex(-0.5)}),
                      singular_parameter_error);
    REQUIRE_THROWS_AS(twistlab::product_twist({Complex(1.0)}),
                      std::invalid_argument);
}

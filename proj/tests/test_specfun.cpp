#include <catch2/catch_amalgamated.hpp>

#include <gnf/specfun.hpp>

using gnf::Complex;
using gnf::kPi;
namespace sf = gnf::specfun;

namespace {

/// |actual - expect| relative to max(1, |expect|)
void check_close(Complex actual, Complex expect, double tol,
                 const char* what = "") {
    INFO(what << ": actual = " << actual.real() << " + " << actual.imag()
              << "i, expect = " << expect.real() << " + " << expect.imag() << "i");
    REQUIRE(std::abs(actual - expect) <=
            tol * std::max(1.0, std::abs(expect)));
}

}  // namespace

// ============================================================================
// Gamma
// ============================================================================

TEST_CASE("gamma matches high-precision anchors", "[specfun][gamma]") {
    check_close(sf::gamma({2.0, 3.0}),
                {-0.0823952726656118837, 0.0917742874352593146}, 5e-13);
    check_close(sf::gamma({-3.5, 1.2}),
                {-0.001676441726221882, 0.0147550978976297373}, 5e-13);
    check_close(sf::gamma({0.5, 0.0}), {1.77245385090551603, 0.0}, 5e-13);
    check_close(sf::gamma({-0.5, -0.5}),
                {-1.58147782825573001, 0.0548501708277647774}, 5e-13);
    // moderate and large moduli, relative accuracy
    REQUIRE(std::abs(sf::gamma({10.0, -7.0}) -
                     Complex(-27545.5815779388859, 19000.3111504226742)) <=
            5e-13 * 33000.0);
    REQUIRE(std::abs(sf::gamma({30.0, 2.0}) -
                     Complex(7.30120599642290163e+30, 3.86834830265203068e+30)) <=
            5e-13 * 8.3e30);
}

TEST_CASE("gamma functional equation and poles", "[specfun][gamma]") {
    for (const Complex z : {Complex(0.3, 0.7), Complex(-2.4, 1.1), Complex(5.5, -3.0)})
        check_close(sf::gamma(z + 1.0), z * sf::gamma(z), 1e-13, "recurrence");
    REQUIRE_THROWS_AS(sf::gamma({0.0, 0.0}), gnf::singular_parameter_error);
    REQUIRE_THROWS_AS(sf::gamma({-3.0, 0.0}), gnf::singular_parameter_error);
    REQUIRE(sf::rgamma({-5.0, 0.0}) == Complex(0.0));
    check_close(sf::rgamma({2.0, 3.0}) * sf::gamma({2.0, 3.0}), 1.0, 1e-13);
}

TEST_CASE("first Barnes gamma: anchors and shift", "[specfun][gamma1]") {
    check_close(sf::gamma1(0.8, 1.3), {0.59827227060534283, 0.0}, 5e-13);
    check_close(sf::gamma1({1.4, 0.5}, 0.7),
                {0.198700424699846305, 0.0140309189041893304}, 5e-13);
    for (const Complex x : {Complex(0.4, 0.0), Complex(0.9, 0.3), Complex(2.3, -0.45)})
        for (const double om : {0.7, 1.3, 2.1})
            check_close(sf::gamma1(x + om, om) / sf::gamma1(x, om), x, 1e-12,
                        "Gamma1(x+omega)/Gamma1(x) = x");
}

// ============================================================================
// Double sine
// ============================================================================

TEST_CASE("double sine matches quadrature anchors", "[specfun][double_sine]") {
    check_close(sf::double_sine(0.7, 1.1, 2.3), {1.52271624418011524, 0.0}, 1e-11);
    check_close(sf::double_sine({1.6, 0.4}, 1.0, 2.0),
                {0.860063568035455166, -0.296778376231424156}, 1e-11);
    check_close(sf::double_sine({-0.35, 0.0}, 2.3, 3.0),
                {-0.920130075462304252, 0.0}, 1e-11);
}

TEST_CASE("double sine shift and inversion", "[specfun][double_sine]") {
    const std::vector<Complex> xs = {Complex(0.4, 0.0), Complex(0.9, 0.3),
                                     Complex(1.6, -0.2), Complex(-1.2, 0.5)};
    for (const auto& [w1, w2] :
         std::vector<std::pair<double, double>>{{1.1, 2.3}, {2.0, 3.0}}) {
        for (const Complex& x : xs) {
            const Complex lhs = sf::double_sine(x, w1, w2);
            check_close(lhs,
                        2.0 * std::sin(kPi * x / w2) * sf::double_sine(x + w1, w1, w2),
                        1e-11, "shift in the first period");
            check_close(lhs,
                        2.0 * std::sin(kPi * x / w1) * sf::double_sine(x + w2, w1, w2),
                        1e-11, "shift in the second period");
            check_close(lhs * sf::double_sine(w1 + w2 - x, w1, w2), 1.0, 1e-11,
                        "inversion");
        }
    }
    check_close(sf::double_sine(0.5 * (1.1 + 2.3), 1.1, 2.3), 1.0, 1e-11,
                "midpoint self-inversion");
    REQUIRE_THROWS_AS(sf::double_sine(0.0, 1.1, 2.3), gnf::singular_parameter_error);
}

TEST_CASE("normalization factors", "[specfun][rho]") {
    check_close(sf::rho_dy(1.0, 2), {kPi / 2.0, 0.0}, 1e-13, "rho_dy(1, 2)");
    check_close(sf::rho_dyr(0.63, 3.1, 2), {-2.64122613485900074, 0.0}, 1e-10);
    check_close(sf::rho_dyr(1.21, 2.3, 3), {4.1301141336313889, 0.0}, 1e-10);
    // unitarity
    for (const double u : {0.37, 0.81})
        check_close(sf::rho_dyr(u, 3.1, 2) * sf::rho_dyr(-u, 3.1, 2), 1.0, 1e-10,
                    "rho_dyr(u) rho_dyr(-u) = 1");
}

// ============================================================================
// q-Pochhammer and theta
// ============================================================================

TEST_CASE("q-Pochhammer single and double base", "[specfun][qpoch]") {
    check_close(sf::qpoch({0.3, 0.2}, {Complex(0.4)}),
                {0.540798873608908773, -0.244229264640153981}, 5e-14);
    check_close(sf::qpoch({0.3, 0.2}, {Complex(0.4), Complex(0.25)}),
                {0.429908544050312504, -0.257896255814388238}, 5e-14);
    check_close(sf::qpoch({-1.5, 0.7}, {Complex(0.6), Complex(0.3)}),
                {-1.82898672551124796, -73.8018460186799411}, 5e-14);
    check_close(sf::qpoch({0.9, 0.0}, {Complex(0.81), Complex(0.09)}),
                {0.000355307279371995526, 0.0}, 5e-14);
    // base 0 collapses to a single factor
    check_close(sf::qpoch({0.3, 0.2}, {Complex(0.0)}), Complex(0.7, -0.2), 1e-15);
    REQUIRE_THROWS_AS(sf::qpoch(0.5, {Complex(1.0)}), std::domain_error);
}

TEST_CASE("theta anchors and quasi-periodicity", "[specfun][theta]") {
    check_close(sf::theta_p({0.7, 0.3}, 0.45),
                {0.0245247020238608487, -0.0103952049248223225}, 5e-14);
    check_close(sf::theta_p({-2.0, 1.0}, 0.3),
                {4.07192252975925601, -2.45035435301134172}, 5e-14);
    for (const Complex z : {Complex(0.7, 0.3), Complex(1.4, -0.2)})
        for (const Complex p : {Complex(0.45, 0.0), Complex(0.2, 0.15)})
            check_close(sf::theta_p(p * z, p), -sf::theta_p(z, p) / z, 1e-13,
                        "Theta_p(p z) = -Theta_p(z)/z");
    // zero at z = 1 and at z = p
    REQUIRE(std::abs(sf::theta_p(1.0, 0.45)) < 1e-14);
    REQUIRE(std::abs(sf::theta_p(0.45, 0.45)) < 1e-14);
    REQUIRE_THROWS_AS(sf::theta_p(0.0, 0.45), std::domain_error);
    REQUIRE_THROWS_AS(sf::theta_p(0.5, 1.2), std::domain_error);
}

// ============================================================================
// Gauss hypergeometric
// ============================================================================

TEST_CASE("hyp2f1 matches anchors in every transformation region",
          "[specfun][hyp2f1]") {
    // block-twist style parameters at roots of unity
    check_close(sf::hyp2f1(-1.0 / 2.3, (1.7 - 1.0) / 2.3 + 1.0, 1.7 / 2.3 + 1.0,
                           std::exp(2.0 * gnf::kImag * kPi / 3.0)),
                {1.17748313529998576, -0.22410196114962717}, 1e-12, "unit root");
    check_close(sf::hyp2f1(1.0 - 1.0 / 2.3, (1.7 - 1.0) / 2.3 + 1.0,
                           1.7 / 2.3 + 2.0, std::exp(4.0 * gnf::kImag * kPi / 3.0)),
                {0.849856927930303926, -0.141126515800142163}, 1e-12, "unit root 2");
    check_close(sf::hyp2f1(-0.2, 0.98, 1.18, -1.0),
                {1.12646516910206791, 0.0}, 1e-12, "z = -1");
    check_close(sf::hyp2f1({0.3, 0.1}, {1.2, -0.2}, {2.1, 0.3}, {0.45, 0.2}),
                {1.09885025354076619, 0.0594289244282184299}, 1e-12, "direct");
    check_close(sf::hyp2f1({0.3, 0.1}, {1.2, -0.2}, {2.1, 0.3}, {-3.0, 0.4}),
                {0.74213304206145219, -0.000328899731849761422}, 1e-12, "Pfaff");
    check_close(sf::hyp2f1(0.25, 0.75, 1.9, {0.92, 0.08}),
                {1.160109941889379, 0.0333726472443218854}, 1e-12, "near 1");
    check_close(sf::hyp2f1(0.25, 0.75, 1.9, {4.0, 3.0}),
                {0.861326456424931838, 0.323661928580614311}, 1e-12, "large z");
    check_close(sf::hyp2f1({0.2, 0.3}, {0.8, -0.1}, {1.6, 0.2}, {0.0, 1.0}),
                {0.863907141809423931, 0.071660772663918163}, 1e-12, "unit circle");
}

TEST_CASE("hyp2f1 classical identities", "[specfun][hyp2f1]") {
    // Gauss value at z = 1
    const Complex a(0.3, 0.1), b(0.4, -0.2), c(2.1, 0.3);
    check_close(sf::hyp2f1(a, b, c, 1.0),
                sf::gamma(c) * sf::gamma(c - a - b) * sf::rgamma(c - a) *
                    sf::rgamma(c - b),
                1e-12, "Gauss summation");
    // Euler transformation
    for (const Complex z : {Complex(0.4, 0.25), Complex(-0.6, 0.2)})
        check_close(sf::hyp2f1(a, b, c, z),
                    std::pow(1.0 - z, c - a - b) * sf::hyp2f1(c - a, c - b, c, z),
                    1e-12, "Euler");
    // contiguous relation c(1-z)F - c F(a-1) + (c-b) z F(c+1) = 0
    for (const Complex z : {Complex(0.45, 0.2), Complex(0.1, 0.75)}) {
        const Complex t = c * (1.0 - z) * sf::hyp2f1(a, b, c, z) -
                          c * sf::hyp2f1(a - 1.0, b, c, z) +
                          (c - b) * z * sf::hyp2f1(a, b, c + 1.0, z);
        REQUIRE(std::abs(t) < 1e-12 * std::abs(c));
    }
    REQUIRE_THROWS_AS(sf::hyp2f1(0.3, 0.7, -2.0, 0.5), gnf::singular_parameter_error);
}

// ============================================================================
// Root-of-unity cotangent kernel
// ============================================================================

TEST_CASE("omega kernel equals the cotangent sum", "[specfun][omega]") {
    for (int N = 1; N <= 6; ++N)
        for (int n = 0; n < N; ++n)
            for (const Complex x : {Complex(0.37, 0.0), Complex(0.8, 0.31),
                                    Complex(0.22, -0.6)}) {
                Complex sum = 0.0;
                for (int k = 0; k < N; ++k) {
                    const Complex ang = kPi * (x + static_cast<double>(k)) /
                                        static_cast<double>(N);
                    sum += std::exp(2.0 * gnf::kImag * kPi *
                                    static_cast<double>(n * k) /
                                    static_cast<double>(N)) *
                           std::cos(ang) / std::sin(ang);
                }
                check_close(sf::omega_fn(n, x, N), sum, 1e-12, "cotangent sum");
            }
    REQUIRE_THROWS_AS(sf::omega_fn(0, Complex(1.0, 0.0), 2),
                      gnf::singular_parameter_error);
    REQUIRE_THROWS_AS(sf::omega_fn(3, Complex(0.4, 0.0), 2), std::domain_error);
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wavetraj/elliptic.hpp"
#include "wavetraj/errors.hpp"

using namespace wavetraj;
using elliptic::Modulus;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("modulus validates and snaps degenerate endpoints") {
    CHECK_THROWS_AS(Modulus(-0.1), DomainError);
    CHECK_THROWS_AS(Modulus(1.1), DomainError);
    CHECK(Modulus(5e-13).is_zero());
    CHECK(Modulus(1.0 - 5e-13).is_one());
    CHECK(Modulus(0.5).value() == 0.5);
    CHECK_FALSE(Modulus(0.5).is_zero());
    CHECK_FALSE(Modulus(0.5).is_one());
}

TEST_CASE("complete integral matches reference values") {
    CHECK(elliptic::complete_K(Modulus(0.0)) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(elliptic::complete_K(Modulus(0.5)) ==
          doctest::Approx(oracle::frozen::K_half).epsilon(1e-15));
    for (double m : {0.05, 0.3, 0.7, 0.95}) {
        const double ref = static_cast<double>(oracle::complete_K(m));
        CHECK(elliptic::complete_K(Modulus(m)) == doctest::Approx(ref).epsilon(1e-14));
    }
}

TEST_CASE("complete integral is strictly increasing in the modulus") {
    double prev = elliptic::complete_K(Modulus(0.0));
    for (double m = 0.1; m < 0.995; m += 0.1) {
        const double k = elliptic::complete_K(Modulus(m));
        CHECK(k > prev);
        prev = k;
    }
}

TEST_CASE("incomplete integral matches direct quadrature") {
    CHECK(elliptic::incomplete_F(0.7, Modulus(0.5)) ==
          doctest::Approx(oracle::frozen::F_half).epsilon(1e-15));
    for (double m : {0.1, 0.5, 0.9}) {
        for (double phi = -3.0; phi <= 3.0; phi += 0.37) {
            const double ref = static_cast<double>(oracle::incomplete_F(phi, m));
            CHECK(elliptic::incomplete_F(phi, Modulus(m)) ==
                  doctest::Approx(ref).epsilon(1e-13));
        }
    }
}

TEST_CASE("incomplete integral is odd and quasi-periodic") {
    const Modulus m(0.7);
    const double K = elliptic::complete_K(m);
    CHECK(elliptic::incomplete_F(kPi / 2.0, m) == doctest::Approx(K).epsilon(1e-14));
    for (double phi = 0.1; phi < 2.0; phi += 0.3) {
        const double f = elliptic::incomplete_F(phi, m);
        CHECK(elliptic::incomplete_F(-phi, m) == doctest::Approx(-f).epsilon(1e-13));
        CHECK(elliptic::incomplete_F(phi + kPi, m) == doctest::Approx(f + 2.0 * K).epsilon(1e-13));
    }
}

TEST_CASE("jacobi functions match reference half-argument values") {
    const double u = oracle::frozen::K_half / 2.0;
    const auto j = elliptic::jacobi_sn_cn_dn(u, Modulus(0.5));
    CHECK(j.sn == doctest::Approx(oracle::frozen::sn_half_halfK).epsilon(1e-14));
    CHECK(j.cn == doctest::Approx(oracle::frozen::cn_half_halfK).epsilon(1e-14));
    CHECK(j.dn == doctest::Approx(oracle::frozen::dn_half_halfK).epsilon(1e-14));
    CHECK(elliptic::jacobi_sc(u, Modulus(0.5)) ==
          doctest::Approx(oracle::frozen::sc_half_halfK).epsilon(1e-14));
}

TEST_CASE("jacobi functions match the inversion oracle") {
    for (double m : {0.2, 0.6, 0.9}) {
        const double K = elliptic::complete_K(Modulus(m));
        for (double u : {-1.3 * K, -0.4 * K, 0.15 * K, 0.8 * K, 1.4 * K}) {
            const auto lib = elliptic::jacobi_sn_cn_dn(u, Modulus(m));
            const auto ref = oracle::jacobi(u, m);
            CHECK(lib.sn == doctest::Approx(static_cast<double>(ref.sn)).epsilon(5e-13));
            CHECK(lib.cn == doctest::Approx(static_cast<double>(ref.cn)).epsilon(5e-13));
            CHECK(lib.dn == doctest::Approx(static_cast<double>(ref.dn)).epsilon(5e-13));
        }
    }
}

TEST_CASE("pythagorean identities hold across the argument range") {
    for (double m : {0.01, 0.5, 0.99}) {
        for (double u = -20.0; u <= 20.0; u += 0.173) {
            const auto j = elliptic::jacobi_sn_cn_dn(u, Modulus(m));
            CHECK(std::fabs(j.sn * j.sn + j.cn * j.cn - 1.0) <= 1e-12);
            CHECK(std::fabs(j.dn * j.dn + m * j.sn * j.sn - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("degenerate moduli reduce to trigonometric and hyperbolic forms") {
    for (double u = -5.0; u <= 5.0; u += 0.31) {
        const auto j0 = elliptic::jacobi_sn_cn_dn(u, Modulus(0.0));
        CHECK(std::fabs(j0.sn - std::sin(u)) <= 1e-14);
        CHECK(std::fabs(j0.cn - std::cos(u)) <= 1e-14);
        CHECK(std::fabs(j0.dn - 1.0) <= 1e-14);
        const auto j1 = elliptic::jacobi_sn_cn_dn(u, Modulus(1.0));
        const double sech = 1.0 / std::cosh(u);
        CHECK(std::fabs(j1.sn - std::tanh(u)) <= 1e-14);
        CHECK(std::fabs(j1.cn - sech) <= 1e-14);
        CHECK(std::fabs(j1.dn - sech) <= 1e-14);
    }
}

TEST_CASE("parity and periodicity") {
    const Modulus m(0.8);
    const double K = elliptic::complete_K(m);
    for (double u = 0.1; u < 6.0; u += 0.77) {
        const auto p = elliptic::jacobi_sn_cn_dn(u, m);
        const auto n = elliptic::jacobi_sn_cn_dn(-u, m);
        CHECK(p.sn == doctest::Approx(-n.sn).epsilon(1e-13));
        CHECK(p.cn == doctest::Approx(n.cn).epsilon(1e-13));
        CHECK(p.dn == doctest::Approx(n.dn).epsilon(1e-13));
        const auto s = elliptic::jacobi_sn_cn_dn(u + 4.0 * K, m);
        CHECK(std::fabs(s.sn - p.sn) <= 1e-10);
        CHECK(std::fabs(s.cn - p.cn) <= 1e-10);
        const auto d = elliptic::jacobi_sn_cn_dn(u + 2.0 * K, m);
        CHECK(std::fabs(d.dn - p.dn) <= 1e-10);
    }
}

TEST_CASE("derivatives of sn and cn follow the product rules") {
    for (double m : {0.3, 0.8}) {
        const Modulus mod(m);
        auto sn_of = [&](double v) { return elliptic::jacobi_sn_cn_dn(v, mod).sn; };
        auto cn_of = [&](double v) { return elliptic::jacobi_sn_cn_dn(v, mod).cn; };
        for (double u : {-1.7, -0.4, 0.3, 1.1, 2.6}) {
            const auto j = elliptic::jacobi_sn_cn_dn(u, mod);
            const double dsn = oracle::derivative(sn_of, u, 1e-5);
            const double dcn = oracle::derivative(cn_of, u, 1e-5);
            CHECK(dsn == doctest::Approx(j.cn * j.dn).epsilon(1e-8));
            CHECK(dcn == doctest::Approx(-j.sn * j.dn).epsilon(1e-8));
        }
    }
}

TEST_CASE("unwrapped amplitude is continuous and quasi-periodic") {
    const Modulus m(0.6);
    const double K = elliptic::complete_K(m);
    for (double u = -3.0; u <= 3.0; u += 0.41) {
        const double a = elliptic::jacobi_am(u, m);
        CHECK(std::sin(a) == doctest::Approx(elliptic::jacobi_sn_cn_dn(u, m).sn).epsilon(1e-12));
        CHECK(elliptic::jacobi_am(u + 2.0 * K, m) == doctest::Approx(a + kPi).epsilon(1e-12));
    }
    // No jump across the quarter period, where sc itself has a pole.
    const double eps = 1e-6;
    const double lo = elliptic::jacobi_am(K - eps, m);
    const double hi = elliptic::jacobi_am(K + eps, m);
    CHECK(std::fabs(hi - lo) < 1e-4);
}

TEST_CASE("sc reports its poles with the nearest abscissa") {
    const Modulus m(0.5);
    const double K = elliptic::complete_K(m);
    try {
        elliptic::jacobi_sc(K, m);
        FAIL("expected a pole error at the quarter period");
    } catch (const PoleError& e) {
        CHECK(e.pole() == doctest::Approx(K).epsilon(1e-12));
        CHECK(e.module() == std::string("elliptic"));
    }
    try {
        elliptic::jacobi_sc(3.0 * K + 1e-14, m);
        FAIL("expected a pole error near 3K");
    } catch (const PoleError& e) {
        CHECK(e.pole() == doctest::Approx(3.0 * K).epsilon(1e-12));
    }
    CHECK(elliptic::jacobi_sc(0.5, m) ==
          doctest::Approx(std::tan(elliptic::jacobi_am(0.5, m))).epsilon(1e-12));
}

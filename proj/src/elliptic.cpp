#include "wavetraj/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavetraj/errors.hpp"

namespace wavetraj::elliptic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAgmIter = 64;
constexpr double kEndpointSnap = 1e-12;

// Arithmetic-geometric mean of (1, sqrt(1 - m)). Stops when
// |a_n - b_n| <= 4 eps a_n.
double agm_of_complement(double m) {
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    for (int i = 0; i < kMaxAgmIter; ++i) {
        if (std::fabs(a - b) <= 4.0 * kEps * a) break;
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return a;
}

}  // namespace

Modulus::Modulus(double m) : m_(m) {
    if (!(m >= 0.0 && m <= 1.0)) {
        throw DomainError("elliptic", "squared modulus must lie in [0, 1]");
    }
    if (m_ <= kEndpointSnap) m_ = 0.0;
    if (1.0 - m_ <= kEndpointSnap) m_ = 1.0;
}

double complete_K(Modulus m) {
    if (m.is_one()) {
        throw DomainError("elliptic", "quarter period K(m) diverges at m = 1");
    }
    if (m.is_zero()) return 0.5 * kPi;
    return 0.5 * kPi / agm_of_complement(m.value());
}

double incomplete_F(double phi, Modulus m) {
    if (m.is_one()) {
        throw DomainError("elliptic", "F(phi | m) diverges at m = 1");
    }
    if (m.is_zero()) return phi;

    // Ascending Landen: phi_{n+1} = phi_n + d where
    // tan(d - pi * round(phi_n / pi)) = (b_n / a_n) tan(phi_n), with the
    // branch of d chosen nearest pi * round(phi_n / pi) so the phase stays
    // continuous across odd multiples of pi/2.
    double a = 1.0;
    double b = std::sqrt(1.0 - m.value());
    double phase = phi;
    double two_n = 1.0;
    for (int i = 0; i < kMaxAgmIter; ++i) {
        if (std::fabs(a - b) <= 4.0 * kEps * a) break;
        const double mult = std::round(phase / kPi);
        const double r = phase - mult * kPi;
        phase += mult * kPi + std::atan2(b * std::sin(r), a * std::cos(r));
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        two_n *= 2.0;
    }
    return phase / (two_n * a);
}

double jacobi_am(double u, Modulus m) {
    if (m.is_zero()) return u;
    if (m.is_one()) return std::asin(std::tanh(u));

    // Descending Landen scales: run the AGM, then unwind the amplitude.
    double a[kMaxAgmIter + 1];
    double c[kMaxAgmIter + 1];
    double an = 1.0;
    double bn = std::sqrt(1.0 - m.value());
    a[0] = an;
    c[0] = std::sqrt(m.value());
    int n = 0;
    while (n < kMaxAgmIter && std::fabs(an - bn) > 4.0 * kEps * an) {
        const double a1 = 0.5 * (an + bn);
        const double c1 = 0.5 * (an - bn);
        bn = std::sqrt(an * bn);
        an = a1;
        ++n;
        a[n] = an;
        c[n] = c1;
    }
    double phi = std::ldexp(an * u, n);
    for (int i = n; i >= 1; --i) {
        const double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(s));
    }
    return phi;
}

JacobiValues jacobi_sn_cn_dn(double u, Modulus m) {
    if (m.is_zero()) return {std::sin(u), std::cos(u), 1.0};
    if (m.is_one()) {
        const double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }
    const double phi = jacobi_am(u, m);
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    // dn = sqrt(cn^2 + (1 - m) sn^2) avoids the cancellation in 1 - m sn^2
    // and keeps dn >= sqrt(1 - m) > 0 exactly.
    const double dn = std::sqrt(cn * cn + (1.0 - m.value()) * sn * sn);
    return {sn, cn, dn};
}

double jacobi_sc(double u, Modulus m, double cn_cutoff) {
    const JacobiValues v = jacobi_sn_cn_dn(u, m);
    if (!m.is_one() && std::fabs(v.cn) < cn_cutoff) {
        const double quarter = complete_K(m);
        const double j = std::round((u / quarter - 1.0) / 2.0);
        const double pole = (2.0 * j + 1.0) * quarter;
        throw PoleError("elliptic", "sc(u | m) evaluated at a pole of cn", pole);
    }
    return v.sn / v.cn;
}

}  // namespace wavetraj::elliptic

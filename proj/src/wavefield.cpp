#include "wavetraj/wavefield.hpp"

#include <cmath>

#include "wavetraj/errors.hpp"

namespace wavetraj {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
// Beyond this argument cosh/sinh overflow double, so the ratio helpers switch
// to the shifted exponential form.
constexpr double kExpSwitch = 700.0;

void require_depth(double delta) {
    if (!(delta > 0.0)) {
        throw DomainError("wavefield", "depth ratio delta must be positive");
    }
}

}  // namespace

double cosh_over_sinh(double y, double a) {
    const double ay = std::fabs(y);
    if (a <= kExpSwitch && ay <= kExpSwitch) {
        return std::cosh(y) / std::sinh(a);
    }
    // cosh(y)/sinh(a) = e^(|y|-a) (1 + e^(-2|y|)) / (1 - e^(-2a)).
    return std::exp(ay - a) * (1.0 + std::exp(-2.0 * ay)) / (1.0 - std::exp(-2.0 * a));
}

double sinh_over_sinh(double y, double a) {
    const double ay = std::fabs(y);
    const double sign = y < 0.0 ? -1.0 : 1.0;
    if (a <= kExpSwitch && ay <= kExpSwitch) {
        return std::sinh(y) / std::sinh(a);
    }
    return sign * std::exp(ay - a) * (1.0 - std::exp(-2.0 * ay)) / (1.0 - std::exp(-2.0 * a));
}

double dispersion_speed(double delta, double we) {
    require_depth(delta);
    if (!(we >= 0.0)) {
        throw DomainError("wavefield", "Weber number must be non-negative");
    }
    const double a = kTwoPi * delta;
    return std::sqrt(std::tanh(a) / a * (1.0 + a * a * we));
}

double amplitude_constant_a2(double delta, double c) {
    require_depth(delta);
    const double a = kTwoPi * delta;
    const double f = 2.0 * kPi * kPi * delta * c;  // A^2 = 2 (f / sinh a)^2
    if (a <= kExpSwitch) {
        const double r = f / std::sinh(a);
        return 2.0 * r * r;
    }
    const double r = 2.0 * f * std::exp(-a) / (1.0 - std::exp(-2.0 * a));
    return 2.0 * r * r;
}

WaveParameters WaveParameters::from_dispersion(double delta, double we, double c0) {
    const double c = dispersion_speed(delta, we);
    return with_speed(delta, c, c0, we);
}

WaveParameters WaveParameters::with_speed(double delta, double c, double c0, double we) {
    require_depth(delta);
    if (!(we >= 0.0)) {
        throw DomainError("wavefield", "Weber number must be non-negative");
    }
    WaveParameters wp;
    wp.delta = delta;
    wp.we = we;
    wp.c = c;
    wp.c0 = c0;
    wp.a2 = amplitude_constant_a2(delta, c);
    wp.b = kTwoPi * (c0 - c);
    return wp;
}

FieldSample linear_fields(const WaveParameters& wp, double x, double z, double t) {
    const double a = kTwoPi * wp.delta;
    const double theta = kTwoPi * (x - wp.c * t);
    const double ch = cosh_over_sinh(a * z, a);
    const double sh = sinh_over_sinh(a * z, a);
    FieldSample s;
    s.eta = std::cos(theta);
    s.u = a * wp.c * ch * std::cos(theta) + wp.c0;
    s.v = kTwoPi * wp.c * sh * std::sin(theta);
    s.p = a * wp.c * wp.c * ch * std::cos(theta);
    return s;
}

}  // namespace wavetraj

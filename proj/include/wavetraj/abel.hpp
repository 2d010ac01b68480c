#pragma once

#include <cstddef>
#include <vector>

#include "wavetraj/trajectory.hpp"
#include "wavetraj/wavefield.hpp"

namespace wavetraj::abel {

// Closure of a maximal tau interval on which the parametric solution below is
// real-valued. Capped flags mark ends truncated by the search radius instead
// of a genuine domain boundary.
struct TauInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_capped = false;
    bool hi_capped = false;
};

// Parametric trajectory data for the non-resonant current c0 != c. With
//   P(tau) = tau^2 - 2 A^2,
//   D(tau) = C - b ln|tau + sqrt(P)|,
//   Q(tau) = P - D^2,
// the slope is y = sign_y sqrt(Q)/|D|, time accumulates as
// dt = dtau / (sqrt(P) sqrt(Q)), and the vertical coordinate is
//   z = sign_z arctanh(e^{z_const} sqrt|(tau - sqrt(2) A)/(tau + sqrt(2) A)|) / (pi delta).
struct AbelConfig {
    double C = 0.0;
    double b = 0.0;  // 2 pi (c0 - c); must be nonzero
    double z_const = 0.0;
    Sign sign_y = Sign::plus;
    Sign sign_z = Sign::plus;
    TauInterval tau_domain;
    double a2 = 0.0;
};

// D(tau) = C - b ln|tau + sqrt(tau^2 - 2 A^2)|. Requires tau^2 > 2 A^2.
double denom_of_tau(const AbelConfig& cfg, double tau);

// Trajectory slope y(tau) = sign_y sqrt(P/D^2 - 1) at tau inside the domain.
double y_of_tau(const AbelConfig& cfg, double tau);

// Elapsed time between parameter values: integral of 1/(sqrt(P) sqrt(Q)) from
// tau0 to tau1, by endpoint-regularized adaptive Gauss-Kronrod.
double t_of_tau(const AbelConfig& cfg, double tau0, double tau1);

// Same integral by tanh-sinh quadrature; independent cross-check path.
double t_of_tau_de(const AbelConfig& cfg, double tau0, double tau1);

// Maximal valid tau interval around tau_hint: P > 0, Q > 0 and D keeping the
// sign it has at the hint. Boundaries are located by bisection; the search
// stops (capped) at tau_hint +- search_radius. Raises an empty-domain error
// when the hint itself is invalid.
TauInterval find_domain(double a2, double b, double C, double tau_hint,
                        double search_radius = 1e6);

// n parameter values uniformly spaced across the interval, inset from each
// uncapped boundary by inset_frac of the width.
std::vector<double> uniform_tau_samples(const TauInterval& dom, std::size_t n,
                                        double inset_frac = 1e-6);

// Samples the parametric trajectory at increasing tau values; t starts at 0.
Trajectory trajectory_param(const AbelConfig& cfg, const WaveParameters& wp,
                            const std::vector<double>& tau_samples);

}  // namespace wavetraj::abel

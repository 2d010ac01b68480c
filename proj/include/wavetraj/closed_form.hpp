#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wavetraj/trajectory.hpp"
#include "wavetraj/wavefield.hpp"

namespace wavetraj::closed {

// Exact trajectory description for the resonant current c0 = c. The moving
// frame splits into two independent oscillators with first integrals
//   c1 = X'^2 - A^2 cos 2X,   c2 = Z'^2 - A^2 cosh 2Z,
// and each branch is one Jacobi elliptic function; the family index packs the
// branch pair:
//   x branch: families 1-3 use sc (c1 > A^2), 4-6 use cn (|c1| < A^2);
//   z branch: families 1,4 use sn (c2 > A^2), 2,5 use cn (|c2| < A^2),
//             3,6 use dn (c2 < -A^2).
struct ClosedFormConfig {
    double c1 = 0.0;
    double c2 = 0.0;
    int family = 0;  // 1..6
    Sign sign_x = Sign::plus;
    Sign sign_z = Sign::plus;
    double m_x = 0.0;  // squared modulus of the x branch
    double m_z = 0.0;  // squared modulus of the z branch
    double a2 = 0.0;   // amplitude constant A^2

    double rate_x = 0.0;  // elliptic argument rate of the x branch
    double rate_z = 0.0;  // elliptic argument rate of the z branch
    double amp_x = 0.0;   // cn-branch amplitude sqrt((A^2+c1)/(A^2-c1)), families 4-6

    // Branch time origins. Zero reproduces the canonical zero-phase forms;
    // config_from_initial sets them so both branches pass through a given
    // moving-frame state at t = 0.
    double t_shift_x = 0.0;
    double t_shift_z = 0.0;
};

// First integrals of the moving-frame system at (X0, Z0). Requires c0 = c.
std::pair<double, double> constants_from_initial(const WaveParameters& wp, double X0, double Z0);

// Selects the trajectory family for the pair (c1, c2) and fills the derived
// moduli, rates and amplitudes. Separatrix values c1 = A^2, c2 = +-A^2 and
// the empty regime c1 <= -A^2 are configuration errors.
ClosedFormConfig classify_family(double c1, double c2, double a2);

// Full configuration (family, signs, branch time origins) of the exact
// solution through moving-frame state (X0, Z0) at t = 0, for c0 = c. The
// resulting config evaluates to the same trajectory as ODE integration of
// the same initial condition.
ClosedFormConfig config_from_initial(const WaveParameters& wp, double X0, double Z0);

// Moving-frame state (X, Z) at time t. With unwrap (default) the x branch of
// families 1-3 uses the continuous Jacobi amplitude; without it the
// principal-value arctangent form is used, which raises a pole error at the
// branch poles. Raises an asymptote error within `exclusion` of a vertical
// asymptote of the z branch.
std::pair<double, double> eval_moving(const ClosedFormConfig& cfg, double t, bool unwrap = true,
                                      double exclusion = 1e-9);

// Lab-frame position (x, z) at time t: x = c t + X / (2 pi), z = Z / (2 pi delta).
std::pair<double, double> eval_xz(const ClosedFormConfig& cfg, const WaveParameters& wp, double t,
                                  bool unwrap = true, double exclusion = 1e-9);

// Lab-frame velocity (dx/dt, dz/dt) at time t, from the closed-form
// derivatives of the two branches. Raises a pole error at the asymptotes,
// carrying the nearest asymptote time.
std::pair<double, double> eval_derivatives(const ClosedFormConfig& cfg, const WaveParameters& wp,
                                           double t);

// Times in [t_lo, t_hi] at which the z branch reaches |tanh Z| = 1 (vertical
// asymptotes of z(t)), in increasing order.
std::vector<double> asymptote_times(const ClosedFormConfig& cfg, double t_lo, double t_hi);

// Spacing between consecutive asymptotes: 2 K(m_z) / rate_z.
double asymptote_spacing(const ClosedFormConfig& cfg);

// Uniformly sampled trajectory over [t0, t1]; samples inside the asymptote
// exclusion radius are skipped and the asymptote times are recorded as
// breaks.
Trajectory sample_trajectory(const ClosedFormConfig& cfg, const WaveParameters& wp, double t0,
                             double t1, std::size_t n, double exclusion = 1e-9);

}  // namespace wavetraj::closed

#pragma once

#include <cstddef>
#include <utility>

#include "wavetraj/trajectory.hpp"
#include "wavetraj/wavefield.hpp"

namespace wavetraj::ode {

struct IntegratorOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    // Integration stops (with the crossing time reported) once the
    // moving-frame coordinate satisfies |Z| >= z_ceiling; trajectories with
    // c0 = c reach any ceiling in finite time.
    double z_ceiling = 30.0;
    std::size_t max_steps = 10'000'000;
};

// Lab-frame particle velocity (dx/dt, dz/dt) under the linearized fields.
std::pair<double, double> rhs_lab(const WaveParameters& wp, double x, double z, double t);

// Moving-frame system in X = 2 pi (x - c t), Z = 2 pi delta z:
//   dX/dt = 4 pi^2 delta c cosh(Z)/sinh(2 pi delta) cos(X) + 2 pi (c0 - c)
//   dZ/dt = 4 pi^2 delta c sinh(Z)/sinh(2 pi delta) sin(X).
std::pair<double, double> rhs_moving(const WaveParameters& wp, double X, double Z);

// Integrate the lab-frame trajectory from (x0, z0) at t0 to t1, reporting
// n_out uniformly spaced dense-output samples (n_out >= 2, endpoints
// included). If the Z ceiling is reached the sample list is truncated at the
// crossing and `ceiling_hit` records its time.
Trajectory integrate(const WaveParameters& wp, double x0, double z0, double t0, double t1,
                     std::size_t n_out, const IntegratorOptions& opt = {});

// Same integrator driving the moving-frame system directly; samples store
// (t, X, Z).
struct MovingSolution {
    std::vector<TrajectorySample> samples;
    std::optional<double> ceiling_hit;
};

MovingSolution integrate_moving(const WaveParameters& wp, double X0, double Z0, double t0,
                                double t1, std::size_t n_out, const IntegratorOptions& opt = {});

}  // namespace wavetraj::ode

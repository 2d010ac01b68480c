#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavetraj/wavefield.hpp"

namespace wavetraj {

// Branch sign selector used by the closed-form and parametric backends.
enum class Sign : int { plus = +1, minus = -1 };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

enum class TrajectorySource { ode, closed, abel };

std::string to_string(TrajectorySource s);
TrajectorySource trajectory_source_from_string(const std::string& s);

struct TrajectorySample {
    double t;
    double x;
    double z;
};

// A sampled particle path. `breaks` lists the times of vertical asymptotes
// inside the sampled window (closed-form backends only); `ceiling_hit` is
// set when ODE integration stopped early at the moving-frame Z ceiling.
struct Trajectory {
    std::vector<TrajectorySample> samples;
    TrajectorySource source = TrajectorySource::ode;
    WaveParameters params{};
    std::vector<double> breaks;
    std::optional<double> ceiling_hit;
};

}  // namespace wavetraj

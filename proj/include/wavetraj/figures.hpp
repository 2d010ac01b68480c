#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wavetraj/closed_form.hpp"
#include "wavetraj/trajectory.hpp"

namespace wavetraj::figures {

// Canned closed-form trajectory configurations. All four use c = c0 = 10 with
// the published first integrals; the sampling window spans four asymptote
// spacings starting at t = 0.
struct FigurePreset {
    std::string name;
    WaveParameters params;
    closed::ClosedFormConfig config;
    double t0 = 0.0;
    double t1 = 0.0;
    std::size_t n = 2000;
};

std::vector<std::string> preset_names();
FigurePreset preset(const std::string& name);
Trajectory sample(const FigurePreset& fp);

}  // namespace wavetraj::figures

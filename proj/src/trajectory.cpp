#include "wavetraj/trajectory.hpp"

#include "wavetraj/errors.hpp"

namespace wavetraj {

std::string to_string(TrajectorySource s) {
    switch (s) {
        case TrajectorySource::ode:
            return "ode";
        case TrajectorySource::closed:
            return "closed";
        default:
            return "abel";
    }
}

TrajectorySource trajectory_source_from_string(const std::string& s) {
    if (s == "ode") return TrajectorySource::ode;
    if (s == "closed") return TrajectorySource::closed;
    if (s == "abel") return TrajectorySource::abel;
    throw ConfigError("cli", "unknown trajectory source: " + s);
}

}  // namespace wavetraj

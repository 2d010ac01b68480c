#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "wavetraj/trajectory.hpp"

namespace wavetraj::io {

// CSV with header `t,x,z`, one row per sample, 17 significant digits, LF
// line endings. Byte-deterministic for identical input.
void write_csv(const Trajectory& traj, std::ostream& os);
std::string to_csv(const Trajectory& traj);

// JSON document with `params`, `source` and `samples` (plus `breaks` and
// `ceiling_hit` when present). Extra metadata is merged into the root object.
nlohmann::json to_json(const Trajectory& traj,
                       const nlohmann::json& metadata = nlohmann::json::object());
Trajectory from_json(const nlohmann::json& j);

struct SvgOptions {
    int width = 880;
    int height = 560;
    double margin_frac = 0.05;  // viewBox margin around the data bounds
    std::string title;
    std::string desc;
};

// Standalone SVG of the path in the (x, z) plane, z pointing up, viewBox
// autoscaled to the data plus margin. The polyline is broken at the recorded
// asymptote times so vertical asymptotes are not bridged.
void write_svg(const Trajectory& traj, std::ostream& os, const SvgOptions& opt = {});
std::string to_svg(const Trajectory& traj, const SvgOptions& opt = {});

// Writes `content` to `path`, raising an io error on failure.
void save_text(const std::string& path, const std::string& content);

}  // namespace wavetraj::io

#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "wavetraj/errors.hpp"
#include "wavetraj/io.hpp"
#include "wavetraj/trajectory.hpp"
#include "wavetraj/wavefield.hpp"

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

wavetraj::Trajectory two_sample_trajectory() {
    wavetraj::Trajectory traj;
    traj.params = wavetraj::WaveParameters::from_dispersion(0.7, 0.3, 0.2);
    traj.source = wavetraj::TrajectorySource::closed;
    // Dyadic values print exactly.
    traj.samples = {{0.0, 0.5, 0.25}, {1.5, -0.125, 0.0009765625}};
    return traj;
}

}  // namespace

TEST_CASE("csv export is byte exact for representable samples") {
    const auto traj = two_sample_trajectory();
    CHECK(wavetraj::io::to_csv(traj) == "t,x,z\n0,0.5,0.25\n1.5,-0.125,0.0009765625\n");

    std::ostringstream os;
    wavetraj::io::write_csv(traj, os);
    CHECK(os.str() == wavetraj::io::to_csv(traj));
}

TEST_CASE("exports refuse an empty trajectory") {
    wavetraj::Trajectory empty;
    CHECK_THROWS_AS(wavetraj::io::to_csv(empty), wavetraj::ConfigError);
    CHECK_THROWS_AS(wavetraj::io::to_json(empty), wavetraj::ConfigError);
    CHECK_THROWS_AS(wavetraj::io::to_svg(empty), wavetraj::ConfigError);
}

TEST_CASE("json round trip preserves every field bit for bit") {
    auto traj = two_sample_trajectory();
    traj.samples.push_back({2.25, 0.7853981633974483, -0.333333333333333315});
    traj.breaks = {0.5, 2.75};
    traj.ceiling_hit = 3.141592653589793;

    const auto j = wavetraj::io::to_json(traj);
    const auto rt = wavetraj::io::from_json(j);

    CHECK(rt.source == traj.source);
    CHECK(rt.params.delta == traj.params.delta);
    CHECK(rt.params.we == traj.params.we);
    CHECK(rt.params.c == traj.params.c);
    CHECK(rt.params.c0 == traj.params.c0);
    CHECK(rt.params.a2 == traj.params.a2);
    CHECK(rt.params.b == traj.params.b);
    REQUIRE(rt.samples.size() == traj.samples.size());
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        CHECK(rt.samples[i].t == traj.samples[i].t);
        CHECK(rt.samples[i].x == traj.samples[i].x);
        CHECK(rt.samples[i].z == traj.samples[i].z);
    }
    REQUIRE(rt.breaks.size() == 2);
    CHECK(rt.breaks[0] == 0.5);
    CHECK(rt.breaks[1] == 2.75);
    REQUIRE(rt.ceiling_hit.has_value());
    CHECK(*rt.ceiling_hit == 3.141592653589793);

    // Absent optional fields stay absent.
    const auto bare = wavetraj::io::from_json(wavetraj::io::to_json(two_sample_trajectory()));
    CHECK(bare.breaks.empty());
    CHECK(!bare.ceiling_hit.has_value());
}

TEST_CASE("json metadata merges into the document root") {
    const auto traj = two_sample_trajectory();
    nlohmann::json meta = {{"preset", "fig1"}, {"n", 2001}};
    const auto j = wavetraj::io::to_json(traj, meta);
    CHECK(j.at("preset") == "fig1");
    CHECK(j.at("n") == 2001);
    CHECK(j.contains("params"));
    CHECK(j.contains("samples"));
}

TEST_CASE("svg splits the path at recorded breaks and draws axis ticks") {
    wavetraj::Trajectory traj;
    traj.params = wavetraj::WaveParameters::from_dispersion(1.0, 0.0, 0.0);
    traj.source = wavetraj::TrajectorySource::closed;
    traj.samples = {{0.0, 0.0, 0.1}, {1.0, 0.3, 0.5}, {2.0, 0.6, 0.4}, {3.0, 0.9, 0.2}};
    traj.breaks = {1.5};

    wavetraj::io::SvgOptions opt;
    opt.title = "a<b&c";
    const auto svg = wavetraj::io::to_svg(traj, opt);

    CHECK(count_occurrences(svg, "<polyline") == 2);
    CHECK(count_occurrences(svg, "  <line ") == 10);
    CHECK(svg.find("<title>a&lt;b&amp;c</title>") != std::string::npos);
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}

TEST_CASE("svg ignores non-finite samples and needs two finite ones") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    wavetraj::Trajectory traj;
    traj.params = wavetraj::WaveParameters::from_dispersion(1.0, 0.0, 0.0);
    traj.samples = {{0.0, 0.0, 0.1}, {0.5, nan, 0.2}, {1.0, 0.3, 0.5}, {2.0, 0.6, 0.4}};
    const auto svg = wavetraj::io::to_svg(traj);
    CHECK(count_occurrences(svg, "<polyline") == 1);
    CHECK(count_occurrences(svg, "nan") == 0);

    wavetraj::Trajectory starved;
    starved.params = traj.params;
    starved.samples = {{0.0, 0.0, 0.1}, {0.5, nan, 0.2}};
    CHECK_THROWS_AS(wavetraj::io::to_svg(starved), wavetraj::ConfigError);
}

TEST_CASE("svg copes with zero-extent data") {
    wavetraj::Trajectory traj;
    traj.params = wavetraj::WaveParameters::from_dispersion(1.0, 0.0, 0.0);
    traj.samples = {{0.0, 0.4, 0.3}, {1.0, 0.4, 0.3}};
    const auto svg = wavetraj::io::to_svg(traj);
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(count_occurrences(svg, "<polyline") == 1);
    CHECK(count_occurrences(svg, "nan") == 0);
    CHECK(count_occurrences(svg, "inf") == 0);
}

TEST_CASE("text artifacts land on disk verbatim") {
    const std::string path = "/tmp/wavetraj_io_roundtrip.txt";
    const std::string content = "line one\nline two\n";
    wavetraj::io::save_text(path, content);

    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream read_back;
    read_back << f.rdbuf();
    CHECK(read_back.str() == content);

    CHECK_THROWS_AS(wavetraj::io::save_text("/no_such_dir_wavetraj/out.txt", content),
                    wavetraj::IoError);
}

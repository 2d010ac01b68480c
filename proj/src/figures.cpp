#include "wavetraj/figures.hpp"

#include "wavetraj/errors.hpp"

namespace wavetraj::figures {

namespace {

FigurePreset make(const std::string& name, double delta, double c1, double c2, Sign sign_x,
                  Sign sign_z) {
    FigurePreset fp;
    fp.name = name;
    fp.params = WaveParameters::with_speed(delta, 10.0, 10.0);
    fp.config = closed::classify_family(c1, c2, fp.params.a2);
    fp.config.sign_x = sign_x;
    fp.config.sign_z = sign_z;
    fp.t0 = 0.0;
    fp.t1 = 4.0 * closed::asymptote_spacing(fp.config);
    fp.n = 2000;
    return fp;
}

}  // namespace

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4"}; }

FigurePreset preset(const std::string& name) {
    if (name == "fig1") {
        // delta = 1: family 1, both branches increasing.
        return make(name, 1.0, 7.91296, 2.91296, Sign::plus, Sign::plus);
    }
    if (name == "fig2") {
        // delta = 1/2: family 1 with much larger first integrals.
        return make(name, 0.5, 177.93, 253.93, Sign::plus, Sign::plus);
    }
    if (name == "fig3") {
        // Family 1 with the x branch running against the wave.
        return make(name, 0.5, 3822.93, 2353.93, Sign::minus, Sign::plus);
    }
    if (name == "fig4") {
        // Family 6: bounded x oscillation, dn-type z branch.
        return make(name, 0.5, 46.07, -253.93, Sign::plus, Sign::plus);
    }
    throw ConfigError("cli", "unknown preset: " + name);
}

Trajectory sample(const FigurePreset& fp) {
    return closed::sample_trajectory(fp.config, fp.params, fp.t0, fp.t1, fp.n);
}

}  // namespace wavetraj::figures

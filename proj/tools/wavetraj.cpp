#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavetraj/runner.hpp"

namespace {

using nlohmann::json;

// Records only the flags the user actually passed, so file-provided config
// keys survive unless explicitly overridden.
struct Binder {
    CLI::App* app;
    json* out;

    void num(const std::string& flag, const std::string& key, const std::string& desc) {
        json* j = out;
        app->add_option_function<double>(flag, [j, key](double v) { (*j)[key] = v; }, desc);
    }

    void str(const std::string& flag, const std::string& key, const std::string& desc) {
        json* j = out;
        app->add_option_function<std::string>(
            flag, [j, key](const std::string& v) { (*j)[key] = v; }, desc);
    }
};

void add_wave_options(Binder& b) {
    b.num("--delta", "delta", "depth / wavelength ratio (default 1)");
    b.num("--we", "we", "Weber number (default 0)");
    b.num("--c", "c", "wave speed override (default: dispersion relation)");
    b.num("--c0", "c0", "mean current");
}

void add_output_options(Binder& b) {
    b.str("--format", "format", "csv, json or svg");
    b.str("--out", "out", "output file path (default: stdout)");
    b.str("--title", "title", "svg title");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Particle trajectories under linear capillary-gravity water waves"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override its values");

    json flags = json::object();
    std::string mode;

    auto make_sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->callback([&mode, name]() { mode = name; });
        return sub;
    };

    {
        CLI::App* sub = make_sub("dispersion", "phase speed and amplitude constant");
        Binder b{sub, &flags};
        b.num("--delta", "delta", "depth / wavelength ratio (default 1)");
        b.num("--we", "we", "Weber number (default 0)");
        b.str("--format", "format", "text or json");
    }
    {
        CLI::App* sub = make_sub("field", "linearized flow fields at a point");
        Binder b{sub, &flags};
        add_wave_options(b);
        b.num("--x", "x", "horizontal position");
        b.num("--z", "z", "vertical position");
        b.num("--t", "t", "time");
        b.str("--format", "format", "text or json");
    }
    {
        CLI::App* sub = make_sub("trajectory-ode", "numerically integrated particle path");
        Binder b{sub, &flags};
        add_wave_options(b);
        b.num("--x0", "x0", "initial horizontal position");
        b.num("--z0", "z0", "initial vertical position");
        b.num("--t0", "t0", "start time (default 0)");
        b.num("--t1", "t1", "end time (default 1)");
        b.num("--n", "n", "output samples (default 201)");
        b.num("--rtol", "rtol", "relative tolerance (default 1e-10)");
        b.num("--atol", "atol", "absolute tolerance (default 1e-12)");
        b.num("--ceiling", "ceiling", "moving-frame |Z| stop threshold (default 30)");
        b.num("--max-steps", "max_steps", "step budget (default 1e7)");
        add_output_options(b);
    }
    {
        CLI::App* sub = make_sub("trajectory-closed", "exact elliptic-function particle path");
        Binder b{sub, &flags};
        add_wave_options(b);
        b.str("--preset", "preset", "fig1, fig2, fig3 or fig4");
        b.num("--c1", "c1", "first integral of the x branch");
        b.num("--c2", "c2", "first integral of the z branch");
        b.str("--sign-x", "sign_x", "x branch sign, + or -");
        b.str("--sign-z", "sign_z", "z branch sign, + or -");
        b.num("--x0", "x0", "initial horizontal position (alternative to c1/c2)");
        b.num("--z0", "z0", "initial vertical position (alternative to c1/c2)");
        b.num("--t0", "t0", "start time (default 0)");
        b.num("--t1", "t1", "end time (default: four asymptote spacings)");
        b.num("--n", "n", "samples (default 2000)");
        b.num("--exclusion", "exclusion", "asymptote exclusion radius (default 1e-9)");
        add_output_options(b);
    }
    {
        CLI::App* sub = make_sub("trajectory-abel", "parametric particle path for c0 != c");
        Binder b{sub, &flags};
        add_wave_options(b);
        b.num("--C", "C", "integration constant of the slope denominator");
        b.num("--z-const", "z_const", "integration constant of the z quadrature (default 0)");
        b.str("--sign-y", "sign_y", "slope sign, + or -");
        b.str("--sign-z", "sign_z", "z sign, + or -");
        b.num("--tau-hint", "tau_hint", "parameter value inside the wanted domain");
        b.num("--search-radius", "search_radius", "domain search radius (default 1e6)");
        b.num("--n", "n", "samples (default 2000)");
        add_output_options(b);
    }
    {
        CLI::App* sub = make_sub("validate", "cross-check closed form against the ODE");
        Binder b{sub, &flags};
        add_wave_options(b);
        b.num("--x0", "x0", "initial horizontal position");
        b.num("--z0", "z0", "initial vertical position");
        b.num("--t0", "t0", "start time (default 0)");
        b.num("--t1", "t1", "end time (default: four asymptote spacings)");
        b.num("--n", "n", "comparison samples (default 1001)");
        b.num("--rtol", "rtol", "ODE relative tolerance");
        b.num("--atol", "atol", "ODE absolute tolerance");
        b.num("--ceiling", "ceiling", "moving-frame |Z| stop threshold (default 12)");
        b.num("--exclusion", "exclusion", "asymptote exclusion radius (default 1e-3)");
        b.num("--tol", "tol", "pass/fail deviation tolerance (default 1e-6)");
        b.str("--format", "format", "text or json");
    }
    {
        CLI::App* sub = make_sub("plot", "render a canned figure preset as svg");
        Binder b{sub, &flags};
        b.str("--preset", "preset", "fig1, fig2, fig3 or fig4");
        b.num("--t0", "t0", "start time override");
        b.num("--t1", "t1", "end time override");
        b.num("--n", "n", "samples override");
        add_output_options(b);
    }

    CLI11_PARSE(app, argc, argv);

    json cfg = json::object();
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
            std::cerr << json{{"error",
                               {{"type", "config"},
                                {"module", "cli"},
                                {"message", "cannot open config file: " + config_path}}}}
                             .dump()
                      << "\n";
            return 2;
        }
        try {
            f >> cfg;
        } catch (const std::exception& e) {
            std::cerr << json{{"error",
                               {{"type", "config"},
                                {"module", "cli"},
                                {"message", std::string("config file parse failure: ") + e.what()}}}}
                             .dump()
                      << "\n";
            return 2;
        }
        if (!cfg.is_object()) {
            std::cerr << json{{"error",
                               {{"type", "config"},
                                {"module", "cli"},
                                {"message", "config file must hold a JSON object"}}}}
                             .dump()
                      << "\n";
            return 2;
        }
    }
    for (const auto& [k, v] : flags.items()) cfg[k] = v;
    if (!mode.empty()) cfg["mode"] = mode;
    if (!cfg.contains("mode")) {
        std::cerr << app.help();
        return 2;
    }
    return wavetraj::runner::run(cfg, std::cout, std::cerr);
}

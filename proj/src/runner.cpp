#include "wavetraj/runner.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "wavetraj/abel.hpp"
#include "wavetraj/closed_form.hpp"
#include "wavetraj/errors.hpp"
#include "wavetraj/figures.hpp"
#include "wavetraj/io.hpp"
#include "wavetraj/trajectory_ode.hpp"
#include "wavetraj/wavefield.hpp"

namespace wavetraj::runner {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

using nlohmann::json;

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

bool has(const json& cfg, const char* key) { return cfg.contains(key) && !cfg[key].is_null(); }

double req_num(const json& cfg, const char* key) {
    if (!has(cfg, key)) throw ConfigError("cli", std::string("missing required key: ") + key);
    if (!cfg[key].is_number()) throw ConfigError("cli", std::string(key) + " must be a number");
    return cfg[key].get<double>();
}

double opt_num(const json& cfg, const char* key, double def) {
    if (!has(cfg, key)) return def;
    if (!cfg[key].is_number()) throw ConfigError("cli", std::string(key) + " must be a number");
    return cfg[key].get<double>();
}

std::string opt_str(const json& cfg, const char* key, const std::string& def) {
    if (!has(cfg, key)) return def;
    if (!cfg[key].is_string()) throw ConfigError("cli", std::string(key) + " must be a string");
    return cfg[key].get<std::string>();
}

Sign parse_sign(const json& cfg, const char* key, Sign def) {
    const std::string s = opt_str(cfg, key, def == Sign::plus ? "+" : "-");
    if (s == "+" || s == "plus") return Sign::plus;
    if (s == "-" || s == "minus") return Sign::minus;
    throw ConfigError("cli", std::string(key) + " must be '+' or '-'");
}

// Wave parameters shared by all modes. `c` falls back to the dispersion
// speed; `c0` falls back to c when `resonant_default` (closed-form modes).
WaveParameters wave_from_cfg(const json& cfg, bool resonant_default) {
    const double delta = opt_num(cfg, "delta", 1.0);
    const double we = opt_num(cfg, "we", 0.0);
    const double c = has(cfg, "c") ? req_num(cfg, "c") : dispersion_speed(delta, we);
    const double c0 = has(cfg, "c0") ? req_num(cfg, "c0") : (resonant_default ? c : 0.0);
    return WaveParameters::with_speed(delta, c, c0, we);
}

ode::IntegratorOptions integrator_from_cfg(const json& cfg) {
    ode::IntegratorOptions opt;
    opt.rel_tol = opt_num(cfg, "rtol", opt.rel_tol);
    opt.abs_tol = opt_num(cfg, "atol", opt.abs_tol);
    opt.z_ceiling = opt_num(cfg, "ceiling", opt.z_ceiling);
    opt.max_steps = static_cast<std::size_t>(opt_num(cfg, "max_steps", 1e7));
    return opt;
}

void emit(const Trajectory& traj, const json& cfg, std::ostream& out,
          const std::string& default_format, const json& metadata) {
    const std::string format = opt_str(cfg, "format", default_format);
    std::string content;
    if (format == "csv") {
        content = io::to_csv(traj);
    } else if (format == "json") {
        content = io::to_json(traj, metadata).dump(2) + "\n";
    } else if (format == "svg") {
        io::SvgOptions so;
        so.title = opt_str(cfg, "title", metadata.value("preset", metadata.value("mode", "")));
        so.desc = metadata.dump();
        content = io::to_svg(traj, so);
    } else {
        throw ConfigError("cli", "format must be csv, json or svg");
    }
    if (has(cfg, "out")) {
        const std::string path = cfg["out"].get<std::string>();
        io::save_text(path, content);
        out << "wrote " << path << "\n";
    } else {
        out << content;
    }
}

int run_dispersion(const json& cfg, std::ostream& out) {
    const double delta = opt_num(cfg, "delta", 1.0);
    const double we = opt_num(cfg, "we", 0.0);
    const double c = dispersion_speed(delta, we);
    const double a2 = amplitude_constant_a2(delta, c);
    if (opt_str(cfg, "format", "text") == "json") {
        out << json{{"c", c}, {"a2", a2}}.dump(2) << "\n";
    } else {
        out << "c = " << fmt15(c) << "\n";
        out << "A2 = " << fmt15(a2) << "\n";
    }
    return 0;
}

int run_field(const json& cfg, std::ostream& out) {
    const WaveParameters wp = wave_from_cfg(cfg, false);
    const double x = opt_num(cfg, "x", 0.0);
    const double z = opt_num(cfg, "z", 0.0);
    const double t = opt_num(cfg, "t", 0.0);
    const FieldSample s = linear_fields(wp, x, z, t);
    if (opt_str(cfg, "format", "text") == "json") {
        out << json{{"eta", s.eta}, {"u", s.u}, {"v", s.v}, {"p", s.p}}.dump(2) << "\n";
    } else {
        out << "eta = " << fmt15(s.eta) << "\n";
        out << "u = " << fmt15(s.u) << "\n";
        out << "v = " << fmt15(s.v) << "\n";
        out << "p = " << fmt15(s.p) << "\n";
    }
    return 0;
}

int run_trajectory_ode(const json& cfg, std::ostream& out) {
    const WaveParameters wp = wave_from_cfg(cfg, false);
    const double x0 = req_num(cfg, "x0");
    const double z0 = req_num(cfg, "z0");
    const double t0 = opt_num(cfg, "t0", 0.0);
    const double t1 = opt_num(cfg, "t1", 1.0);
    const std::size_t n = static_cast<std::size_t>(opt_num(cfg, "n", 201));
    const Trajectory traj = ode::integrate(wp, x0, z0, t0, t1, n, integrator_from_cfg(cfg));
    json meta{{"mode", "trajectory-ode"}, {"window", {t0, t1}}};
    emit(traj, cfg, out, "csv", meta);
    return 0;
}

int run_trajectory_closed(const json& cfg, std::ostream& out, const std::string& default_format) {
    figures::FigurePreset fp;
    json meta{{"mode", "trajectory-closed"}};
    if (has(cfg, "preset")) {
        fp = figures::preset(cfg["preset"].get<std::string>());
        meta["preset"] = fp.name;
    } else {
        fp.name = "custom";
        fp.params = wave_from_cfg(cfg, true);
        if (fp.params.b != 0.0) {
            throw ConfigError("cli", "closed-form trajectories require c0 = c");
        }
        if (has(cfg, "c1") && has(cfg, "c2")) {
            fp.config =
                closed::classify_family(req_num(cfg, "c1"), req_num(cfg, "c2"), fp.params.a2);
            fp.config.sign_x = parse_sign(cfg, "sign_x", Sign::plus);
            fp.config.sign_z = parse_sign(cfg, "sign_z", Sign::plus);
        } else if (has(cfg, "x0") && has(cfg, "z0")) {
            const double X0 = kTwoPi * req_num(cfg, "x0");
            const double Z0 = kTwoPi * fp.params.delta * req_num(cfg, "z0");
            fp.config = closed::config_from_initial(fp.params, X0, Z0);
        } else {
            throw ConfigError("cli", "need a preset, the pair c1/c2, or the pair x0/z0");
        }
        fp.t1 = 4.0 * closed::asymptote_spacing(fp.config);
    }
    const double t0 = opt_num(cfg, "t0", fp.t0);
    const double t1 = opt_num(cfg, "t1", fp.t1);
    const std::size_t n = static_cast<std::size_t>(opt_num(cfg, "n", fp.n));
    const double exclusion = opt_num(cfg, "exclusion", 1e-9);
    const Trajectory traj = closed::sample_trajectory(fp.config, fp.params, t0, t1, n, exclusion);
    meta["family"] = fp.config.family;
    meta["window"] = {t0, t1};
    if (!meta.contains("preset") && fp.name != "custom") meta["preset"] = fp.name;
    emit(traj, cfg, out, default_format, meta);
    return 0;
}

int run_trajectory_abel(const json& cfg, std::ostream& out) {
    const WaveParameters wp = wave_from_cfg(cfg, false);
    if (wp.b == 0.0) {
        throw ConfigError("cli", "the parametric trajectory requires c0 != c");
    }
    abel::AbelConfig acfg;
    acfg.C = req_num(cfg, "C");
    acfg.b = wp.b;
    acfg.z_const = opt_num(cfg, "z_const", 0.0);
    acfg.sign_y = parse_sign(cfg, "sign_y", Sign::plus);
    acfg.sign_z = parse_sign(cfg, "sign_z", Sign::plus);
    acfg.a2 = wp.a2;
    const double hint = req_num(cfg, "tau_hint");
    const double radius = opt_num(cfg, "search_radius", 1e6);
    acfg.tau_domain = abel::find_domain(wp.a2, wp.b, acfg.C, hint, radius);
    const std::size_t n = static_cast<std::size_t>(opt_num(cfg, "n", 2000));
    const auto taus = abel::uniform_tau_samples(acfg.tau_domain, n);
    const Trajectory traj = abel::trajectory_param(acfg, wp, taus);
    json meta{{"mode", "trajectory-abel"},
              {"tau_domain", {acfg.tau_domain.lo, acfg.tau_domain.hi}},
              {"capped", {acfg.tau_domain.lo_capped, acfg.tau_domain.hi_capped}}};
    emit(traj, cfg, out, "csv", meta);
    return 0;
}

int run_validate(const json& cfg, std::ostream& out) {
    const WaveParameters wp = wave_from_cfg(cfg, true);
    if (wp.b != 0.0) {
        throw ConfigError("cli", "validate mode requires c0 = c");
    }
    const double X0 = kTwoPi * req_num(cfg, "x0");
    const double Z0 = kTwoPi * wp.delta * req_num(cfg, "z0");
    const closed::ClosedFormConfig ccfg = closed::config_from_initial(wp, X0, Z0);

    ode::IntegratorOptions opt = integrator_from_cfg(cfg);
    if (!has(cfg, "ceiling")) opt.z_ceiling = 12.0;
    const double t0 = opt_num(cfg, "t0", 0.0);
    const double t1 = opt_num(cfg, "t1", 4.0 * closed::asymptote_spacing(ccfg));
    const std::size_t n = static_cast<std::size_t>(opt_num(cfg, "n", 1001));
    const double exclusion = opt_num(cfg, "exclusion", 1e-3);
    const double tol = opt_num(cfg, "tol", 1e-6);

    const ode::MovingSolution sol = ode::integrate_moving(wp, X0, Z0, t0, t1, n, opt);
    double max_dx = 0.0, max_dz = 0.0;
    std::size_t compared = 0;
    for (const auto& s : sol.samples) {
        try {
            const auto [X, Z] = closed::eval_moving(ccfg, s.t, true, exclusion);
            max_dx = std::max(max_dx, std::fabs(X - s.x));
            max_dz = std::max(max_dz, std::fabs(Z - s.z));
            ++compared;
        } catch (const AsymptoteError&) {
            // Points inside the exclusion radius are not comparable.
        }
    }
    if (compared == 0) {
        throw ConfigError("cli", "no comparable samples outside the asymptote exclusion");
    }
    const bool pass = max_dx <= tol && max_dz <= tol;
    if (opt_str(cfg, "format", "text") == "json") {
        out << json{{"family", ccfg.family},
                    {"max_dX", max_dx},
                    {"max_dZ", max_dz},
                    {"compared", compared},
                    {"tol", tol},
                    {"pass", pass}}
                   .dump(2)
            << "\n";
    } else {
        out << "family = " << ccfg.family << "\n";
        out << "max |dX| = " << fmt15(max_dx) << "\n";
        out << "max |dZ| = " << fmt15(max_dz) << "\n";
        out << "compared = " << compared << "\n";
        out << "result: " << (pass ? "PASS" : "FAIL") << " (tol = " << fmt15(tol) << ")\n";
    }
    return pass ? 0 : 5;
}

void report_error(std::ostream& err, const char* type, const wavetraj::Error& e) {
    json j{{"error", {{"type", type}, {"module", e.module()}, {"message", e.what()}}}};
    if (const auto* p = dynamic_cast<const PoleError*>(&e)) {
        j["error"]["pole"] = p->pole();
    } else if (const auto* a = dynamic_cast<const AsymptoteError*>(&e)) {
        j["error"]["time"] = a->time();
    } else if (const auto* s = dynamic_cast<const StepUnderflowError*>(&e)) {
        j["error"]["time"] = s->time();
    } else if (const auto* q = dynamic_cast<const QuadratureError*>(&e)) {
        j["error"]["interval"] = {q->lo(), q->hi()};
    }
    err << j.dump() << "\n";
}

}  // namespace

int run(const json& cfg, std::ostream& out, std::ostream& err) {
    try {
        const std::string mode = opt_str(cfg, "mode", "");
        if (mode.empty()) throw ConfigError("cli", "missing required key: mode");
        if (mode == "dispersion") return run_dispersion(cfg, out);
        if (mode == "field") return run_field(cfg, out);
        if (mode == "trajectory-ode") return run_trajectory_ode(cfg, out);
        if (mode == "trajectory-closed") return run_trajectory_closed(cfg, out, "csv");
        if (mode == "trajectory-abel") return run_trajectory_abel(cfg, out);
        if (mode == "validate") return run_validate(cfg, out);
        if (mode == "plot") {
            if (!has(cfg, "preset")) throw ConfigError("cli", "plot mode needs a preset");
            return run_trajectory_closed(cfg, out, "svg");
        }
        throw ConfigError("cli", "unknown mode: " + mode);
    } catch (const ConfigError& e) {
        report_error(err, "config", e);
        return 2;
    } catch (const IoError& e) {
        report_error(err, "io", e);
        return 4;
    } catch (const wavetraj::Error& e) {
        report_error(err, "numeric", e);
        return 3;
    } catch (const std::exception& e) {
        err << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
}

}  // namespace wavetraj::runner

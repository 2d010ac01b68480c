#include <doctest.h>

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wavetraj/runner.hpp"
#include "wavetraj/wavefield.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cfg(const nlohmann::json& cfg) {
    std::ostringstream out, err;
    RunResult r;
    r.code = wavetraj::runner::run(cfg, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        if (c == '\n') ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("dispersion mode reports the phase speed and amplitude constant") {
    const auto r = run_cfg({{"mode", "dispersion"}, {"delta", 1.0}, {"we", 0.0},
                            {"format", "json"}});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("c").get<double>() ==
          doctest::Approx(0.39894088915554642).epsilon(1e-14));
    CHECK(j.at("a2").get<double>() == doctest::Approx(0.0017300720316279598).epsilon(1e-9));

    const auto text = run_cfg({{"mode", "dispersion"}});
    REQUIRE(text.code == 0);
    CHECK(text.out.rfind("c = ", 0) == 0);
    const double c_text = std::stod(text.out.substr(4));
    CHECK(c_text == doctest::Approx(0.39894088915554642).epsilon(1e-14));
}

TEST_CASE("field mode evaluates the linearized fields at the requested point") {
    const auto r = run_cfg({{"mode", "field"}, {"delta", 1.0}, {"we", 0.0}, {"format", "json"}});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);

    const auto wp = wavetraj::WaveParameters::with_speed(
        1.0, wavetraj::dispersion_speed(1.0, 0.0), 0.0, 0.0);
    const auto f = wavetraj::linear_fields(wp, 0.0, 0.0, 0.0);
    CHECK(j.at("eta").get<double>() == f.eta);
    CHECK(j.at("u").get<double>() == f.u);
    CHECK(j.at("v").get<double>() == 0.0);
    CHECK(j.at("p").get<double>() == f.p);
}

TEST_CASE("preset trajectory exports csv with one row per sample") {
    const auto r = run_cfg({{"mode", "trajectory-closed"}, {"preset", "fig1"}});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("t,x,z\n", 0) == 0);
    CHECK(count_lines(r.out) == 2001);  // header + 2000 samples
}

TEST_CASE("validate mode cross-checks the integrator against the exact solution") {
    const auto r = run_cfg({{"mode", "validate"}, {"delta", 1.0}, {"c", 10.0}, {"c0", 10.0},
                            {"x0", 0.05}, {"z0", 0.1}, {"t1", 0.5}});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("family = 3") != std::string::npos);

    const auto j = run_cfg({{"mode", "validate"}, {"delta", 1.0}, {"c", 10.0}, {"c0", 10.0},
                            {"x0", 0.05}, {"z0", 0.1}, {"t1", 0.5}, {"format", "json"}});
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("pass").get<bool>());
    CHECK(parsed.at("compared").get<int>() > 0);
    CHECK(parsed.at("max_dX").get<double>() <= 1e-6);
    CHECK(parsed.at("max_dZ").get<double>() <= 1e-6);
}

TEST_CASE("configuration failures exit with code 2 and a structured report") {
    const auto missing = run_cfg(nlohmann::json::object());
    CHECK(missing.code == 2);
    const auto j = nlohmann::json::parse(missing.err);
    CHECK(j.at("error").at("type") == "config");
    CHECK(j.at("error").at("module") == "cli");

    CHECK(run_cfg({{"mode", "no-such-mode"}}).code == 2);
    CHECK(run_cfg({{"mode", "plot"}}).code == 2);
    CHECK(run_cfg({{"mode", "trajectory-closed"}, {"delta", 1.0}, {"c", 10.0},
                   {"c0", 10.0}})
              .code == 2);
    CHECK(run_cfg({{"mode", "trajectory-closed"}, {"preset", "fig1"}, {"format", "yaml"}})
              .code == 2);
}

TEST_CASE("a separatrix request is rejected as configuration error") {
    const double a2 = wavetraj::amplitude_constant_a2(1.0, 10.0);
    const auto r = run_cfg({{"mode", "trajectory-closed"}, {"delta", 1.0}, {"c", 10.0},
                            {"c0", 10.0}, {"c1", a2}, {"c2", 3.0 * a2}});
    CHECK(r.code == 2);
    const auto j = nlohmann::json::parse(r.err);
    CHECK(j.at("error").at("type") == "config");
    CHECK(j.at("error").at("module") == "closed_form");
}

TEST_CASE("numerical domain failures exit with code 3") {
    const auto r = run_cfg({{"mode", "trajectory-abel"}, {"delta", 1.0}, {"we", 0.0},
                            {"c0", 1.0}, {"C", 4.0}, {"tau_hint", 0.01}});
    CHECK(r.code == 3);
    const auto j = nlohmann::json::parse(r.err);
    CHECK(j.at("error").at("type") == "numeric");
    CHECK(j.at("error").at("module") == "abel_case");

    const auto s = run_cfg({{"mode", "trajectory-ode"}, {"delta", 1.0}, {"c", 10.0},
                            {"c0", 10.0}, {"x0", 0.05}, {"z0", 0.1}, {"t1", 50.0},
                            {"max_steps", 3}});
    CHECK(s.code == 3);
    CHECK(s.err.find("\"time\"") != std::string::npos);
}

TEST_CASE("the abel mode produces a parametric trajectory") {
    const auto r = run_cfg({{"mode", "trajectory-abel"}, {"delta", 1.0}, {"we", 0.0},
                            {"c0", 1.0}, {"C", 4.0}, {"tau_hint", 1.2}, {"n", 41},
                            {"format", "json"}});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("mode") == "trajectory-abel");
    CHECK(j.at("samples").size() == 41);
    CHECK(j.at("tau_domain").size() == 2);
    CHECK(j.at("source") == "abel");
}

TEST_CASE("ode mode honors sample count and json format") {
    const auto r = run_cfg({{"mode", "trajectory-ode"}, {"delta", 1.0}, {"x0", 0.05},
                            {"z0", 0.1}, {"t1", 0.2}, {"n", 11}, {"format", "json"}});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("mode") == "trajectory-ode");
    CHECK(j.at("samples").size() == 11);
    CHECK(j.at("source") == "ode");
}

TEST_CASE("the out key redirects the artifact to disk") {
    const std::string path = "/tmp/wavetraj_runner_fig1.csv";
    const auto r = run_cfg({{"mode", "trajectory-closed"}, {"preset", "fig1"}, {"out", path}});
    REQUIRE(r.code == 0);
    CHECK(r.out == "wrote " + path + "\n");

    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "t,x,z");
}

TEST_CASE("plot mode renders a preset as svg") {
    const auto r = run_cfg({{"mode", "plot"}, {"preset", "fig4"}});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("<svg ", 0) == 0);
    CHECK(r.out.find("</svg>") != std::string::npos);
}

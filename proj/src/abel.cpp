#include "wavetraj/abel.hpp"

#include <algorithm>
#include <cmath>

#include "wavetraj/errors.hpp"
#include "wavetraj/quadrature.hpp"

namespace wavetraj::abel {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double p_of_tau(double a2, double tau) { return tau * tau - 2.0 * a2; }

double denom_raw(double C, double b, double a2, double tau) {
    const double p = p_of_tau(a2, tau);
    return C - b * std::log(std::fabs(tau + std::sqrt(p)));
}

double q_of_tau(double C, double b, double a2, double tau) {
    const double d = denom_raw(C, b, a2, tau);
    return p_of_tau(a2, tau) - d * d;
}

void check_in_domain(const AbelConfig& cfg, double tau, const char* what) {
    const double fuzz =
        1e-12 * std::max({1.0, std::fabs(cfg.tau_domain.lo), std::fabs(cfg.tau_domain.hi)});
    if (tau < cfg.tau_domain.lo - fuzz || tau > cfg.tau_domain.hi + fuzz) {
        throw DomainError("abel_case", std::string(what) + " lies outside the tau domain");
    }
}

}  // namespace

double denom_of_tau(const AbelConfig& cfg, double tau) {
    if (!(p_of_tau(cfg.a2, tau) > 0.0)) {
        throw DomainError("abel_case", "tau^2 must exceed 2 A^2");
    }
    return denom_raw(cfg.C, cfg.b, cfg.a2, tau);
}

double y_of_tau(const AbelConfig& cfg, double tau) {
    check_in_domain(cfg, tau, "tau");
    const double p = p_of_tau(cfg.a2, tau);
    if (!(p > 0.0)) {
        throw DomainError("abel_case", "tau^2 must exceed 2 A^2");
    }
    const double d = denom_raw(cfg.C, cfg.b, cfg.a2, tau);
    if (d == 0.0) {
        throw DomainError("abel_case", "slope denominator vanishes at tau");
    }
    double rad = p / (d * d) - 1.0;
    if (rad < 0.0) {
        if (rad < -1e-12 * (p / (d * d) + 1.0)) {
            throw DomainError("abel_case", "slope radicand is negative at tau");
        }
        rad = 0.0;
    }
    return sign_value(cfg.sign_y) * std::sqrt(rad);
}

namespace {

double time_integral(const AbelConfig& cfg, double tau0, double tau1, bool de_path) {
    check_in_domain(cfg, tau0, "tau0");
    check_in_domain(cfg, tau1, "tau1");
    const double C = cfg.C, b = cfg.b, a2 = cfg.a2;
    auto f = [C, b, a2](double tau) {
        const double p = std::max(p_of_tau(a2, tau), 0.0);
        const double q = std::max(q_of_tau(C, b, a2, tau), 0.0);
        return 1.0 / (std::sqrt(p) * std::sqrt(q));
    };
    if (de_path) return quadrature::tanh_sinh(f, tau0, tau1, 1e-12);
    quadrature::QuadOptions opt;
    opt.rel_tol = 1e-12;
    return quadrature::integrate_endpoint_sqrt(f, tau0, tau1, opt);
}

}  // namespace

double t_of_tau(const AbelConfig& cfg, double tau0, double tau1) {
    return time_integral(cfg, tau0, tau1, false);
}

double t_of_tau_de(const AbelConfig& cfg, double tau0, double tau1) {
    return time_integral(cfg, tau0, tau1, true);
}

TauInterval find_domain(double a2, double b, double C, double tau_hint, double search_radius) {
    if (!(a2 > 0.0)) {
        throw ConfigError("abel_case", "amplitude constant A^2 must be positive");
    }
    if (!(search_radius > 0.0)) {
        throw ConfigError("abel_case", "search radius must be positive");
    }
    if (!(p_of_tau(a2, tau_hint) > 0.0) || !(q_of_tau(C, b, a2, tau_hint) > 0.0) ||
        denom_raw(C, b, a2, tau_hint) == 0.0) {
        throw EmptyDomainError("abel_case", "no valid parameter neighborhood at tau_hint");
    }
    const double d_sign = denom_raw(C, b, a2, tau_hint) > 0.0 ? 1.0 : -1.0;
    auto valid = [&](double tau) {
        if (!(p_of_tau(a2, tau) > 0.0)) return false;
        const double d = denom_raw(C, b, a2, tau);
        if (d * d_sign <= 0.0) return false;
        return q_of_tau(C, b, a2, tau) > 0.0;
    };

    const double tol = 1e-12 * std::max(1.0, std::fabs(tau_hint));
    auto expand = [&](double dir, double& endpoint, bool& capped) {
        double pos = tau_hint;
        double step = std::max(1e-3, 1e-3 * std::fabs(tau_hint));
        const double cap = tau_hint + dir * search_radius;
        while (true) {
            double next = pos + dir * step;
            if ((next - cap) * dir >= 0.0) next = cap;
            if (valid(next)) {
                pos = next;
                if (next == cap) {
                    endpoint = pos;
                    capped = true;
                    return;
                }
                step *= 2.0;
                continue;
            }
            // Bracketed boundary in (pos, next): bisect to the valid side.
            double bad = next;
            while (std::fabs(bad - pos) > tol) {
                const double mid = 0.5 * (pos + bad);
                if (valid(mid)) {
                    pos = mid;
                } else {
                    bad = mid;
                }
            }
            endpoint = pos;
            capped = false;
            return;
        }
    };

    TauInterval dom;
    expand(+1.0, dom.hi, dom.hi_capped);
    expand(-1.0, dom.lo, dom.lo_capped);
    return dom;
}

std::vector<double> uniform_tau_samples(const TauInterval& dom, std::size_t n, double inset_frac) {
    if (n < 2) throw ConfigError("abel_case", "at least two samples required");
    if (!(dom.hi > dom.lo)) throw ConfigError("abel_case", "tau domain is empty");
    const double width = dom.hi - dom.lo;
    const double lo = dom.lo + (dom.lo_capped ? 0.0 : inset_frac * width);
    const double hi = dom.hi - (dom.hi_capped ? 0.0 : inset_frac * width);
    std::vector<double> taus(n);
    for (std::size_t i = 0; i < n; ++i) {
        taus[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return taus;
}

Trajectory trajectory_param(const AbelConfig& cfg, const WaveParameters& wp,
                            const std::vector<double>& tau_samples) {
    if (tau_samples.size() < 2) {
        throw ConfigError("abel_case", "at least two tau samples required");
    }
    if (cfg.b == 0.0) {
        throw ConfigError("abel_case", "parametric solution requires c0 != c");
    }
    if (std::fabs(cfg.a2 - wp.a2) > 1e-9 * std::max(1.0, std::fabs(wp.a2))) {
        throw ConfigError("abel_case", "amplitude constant of config and wave parameters differ");
    }
    if (std::fabs(cfg.b - wp.b) > 1e-9 * std::max(1.0, std::fabs(wp.b))) {
        throw ConfigError("abel_case", "drift rate of config and wave parameters differ");
    }
    for (std::size_t i = 1; i < tau_samples.size(); ++i) {
        if (!(tau_samples[i] > tau_samples[i - 1])) {
            throw ConfigError("abel_case", "tau samples must be strictly increasing");
        }
    }

    const double s2a = std::sqrt(2.0 * cfg.a2);
    const double ez = std::exp(cfg.z_const);
    Trajectory traj;
    traj.source = TrajectorySource::abel;
    traj.params = wp;
    traj.samples.reserve(tau_samples.size());

    double t = 0.0;
    for (std::size_t i = 0; i < tau_samples.size(); ++i) {
        const double tau = tau_samples[i];
        if (i > 0) t += t_of_tau(cfg, tau_samples[i - 1], tau);
        const double y = y_of_tau(cfg, tau);
        const double e = ez * std::sqrt(std::fabs((tau - s2a) / (tau + s2a)));
        if (e >= 1.0) {
            throw DomainError("abel_case", "arctanh argument reached 1 along the trajectory");
        }
        const double x = wp.c * t + std::atan(y) / kTwoPi;
        const double z = sign_value(cfg.sign_z) * std::atanh(e) / (kPi * wp.delta);
        traj.samples.push_back({t, x, z});
    }
    return traj;
}

}  // namespace wavetraj::abel

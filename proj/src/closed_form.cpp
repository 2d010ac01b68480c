#include "wavetraj/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "wavetraj/elliptic.hpp"
#include "wavetraj/errors.hpp"
#include "wavetraj/trajectory_ode.hpp"

namespace wavetraj::closed {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

using elliptic::Modulus;

bool x_is_sc(const ClosedFormConfig& cfg) { return cfg.family <= 3; }

enum class ZKind { sn, cn, dn };

ZKind z_kind(const ClosedFormConfig& cfg) {
    switch (cfg.family) {
        case 1:
        case 4:
            return ZKind::sn;
        case 2:
        case 5:
            return ZKind::cn;
        default:
            return ZKind::dn;
    }
}

void check_family(const ClosedFormConfig& cfg) {
    if (cfg.family < 1 || cfg.family > 6) {
        throw ConfigError("closed_form", "family index must be in 1..6");
    }
}

void check_params(const ClosedFormConfig& cfg, const WaveParameters& wp) {
    check_family(cfg);
    if (std::fabs(cfg.a2 - wp.a2) > 1e-9 * std::max(1.0, std::fabs(wp.a2))) {
        throw ConfigError("closed_form", "amplitude constant of config and wave parameters differ");
    }
    if (wp.b != 0.0) {
        throw ConfigError("closed_form", "closed-form families require c0 = c");
    }
}

// Asymptotes of the z branch sit at u = o + 2 j K(m_z) in the elliptic
// argument: o = K for the sn branch (|sn| = 1), o = 0 for cn and dn.
double asymptote_offset_u(const ClosedFormConfig& cfg, double quarter) {
    return z_kind(cfg) == ZKind::sn ? quarter : 0.0;
}

double nearest_asymptote_time(const ClosedFormConfig& cfg, double t) {
    const double quarter = elliptic::complete_K(Modulus(cfg.m_z));
    const double o = asymptote_offset_u(cfg, quarter);
    const double u = cfg.rate_z * (t - cfg.t_shift_z);
    const double j = std::round((u - o) / (2.0 * quarter));
    return cfg.t_shift_z + (o + 2.0 * quarter * j) / cfg.rate_z;
}

double eval_x_branch(const ClosedFormConfig& cfg, double t, bool unwrap) {
    const double sx = sign_value(cfg.sign_x);
    const double u = cfg.rate_x * (t - cfg.t_shift_x);
    if (x_is_sc(cfg)) {
        if (unwrap) return sx * elliptic::jacobi_am(u, Modulus(cfg.m_x));
        return sx * std::atan(elliptic::jacobi_sc(u, Modulus(cfg.m_x)));
    }
    const auto j = elliptic::jacobi_sn_cn_dn(u, Modulus(cfg.m_x));
    return std::atan(sx * cfg.amp_x * j.cn);
}

double eval_z_branch(const ClosedFormConfig& cfg, double t, double t_near) {
    const double sz = sign_value(cfg.sign_z);
    const double u = cfg.rate_z * (t - cfg.t_shift_z);
    const auto j = elliptic::jacobi_sn_cn_dn(u, Modulus(cfg.m_z));
    double w;
    switch (z_kind(cfg)) {
        case ZKind::sn:
            w = sz * j.sn;
            break;
        case ZKind::cn:
            w = sz * j.cn;
            break;
        default:
            w = sz * j.dn;
            break;
    }
    if (std::fabs(w) >= 1.0) {
        throw AsymptoteError("closed_form", "z branch at a vertical asymptote", t_near);
    }
    return std::atanh(w);
}

}  // namespace

std::pair<double, double> constants_from_initial(const WaveParameters& wp, double X0, double Z0) {
    if (wp.b != 0.0) {
        throw ConfigError("closed_form", "first integrals require c0 = c");
    }
    const auto [dX, dZ] = ode::rhs_moving(wp, X0, Z0);
    const double c1 = dX * dX - wp.a2 * std::cos(2.0 * X0);
    const double c2 = dZ * dZ - wp.a2 * std::cosh(2.0 * Z0);
    return {c1, c2};
}

ClosedFormConfig classify_family(double c1, double c2, double a2) {
    if (!(a2 > 0.0)) {
        throw ConfigError("closed_form", "amplitude constant A^2 must be positive");
    }
    const double tol = 1e-12 * a2;
    if (c1 + a2 <= tol) {
        throw ConfigError("closed_form", "c1 <= -A^2 leaves no real horizontal motion");
    }
    if (std::fabs(c1 - a2) <= tol) {
        throw ConfigError("closed_form", "c1 = A^2 is a separatrix of the x branch");
    }
    if (std::fabs(c2 - a2) <= tol || std::fabs(c2 + a2) <= tol) {
        throw ConfigError("closed_form", "c2 = +-A^2 is a separatrix of the z branch");
    }

    ClosedFormConfig cfg;
    cfg.c1 = c1;
    cfg.c2 = c2;
    cfg.a2 = a2;

    const bool sc = c1 > a2;
    const int zk = c2 > a2 ? 0 : (c2 > -a2 ? 1 : 2);
    cfg.family = (sc ? 1 : 4) + zk;

    if (sc) {
        cfg.m_x = 2.0 * a2 / (c1 + a2);
        cfg.rate_x = std::sqrt(c1 + a2);
        cfg.amp_x = 0.0;
    } else {
        cfg.m_x = (a2 + c1) / (2.0 * a2);
        cfg.rate_x = std::sqrt(2.0 * a2);
        cfg.amp_x = std::sqrt((a2 + c1) / (a2 - c1));
    }
    switch (zk) {
        case 0:
            cfg.m_z = (c2 - a2) / (c2 + a2);
            cfg.rate_z = std::sqrt(c2 + a2);
            break;
        case 1:
            cfg.m_z = (a2 - c2) / (2.0 * a2);
            cfg.rate_z = std::sqrt(2.0 * a2);
            break;
        default:
            cfg.m_z = 2.0 * a2 / (a2 - c2);
            cfg.rate_z = std::sqrt(a2 - c2);
            break;
    }
    return cfg;
}

ClosedFormConfig config_from_initial(const WaveParameters& wp, double X0, double Z0) {
    const auto [c1, c2] = constants_from_initial(wp, X0, Z0);
    ClosedFormConfig cfg = classify_family(c1, c2, wp.a2);
    const auto [dX0, dZ0] = ode::rhs_moving(wp, X0, Z0);

    // Resonant initial data always lands in family 3: c1 - A^2 =
    // 2 A^2 cos^2 X0 sinh^2 Z0 > 0 and c2 = -c1 away from the separatrices.
    cfg.sign_x = dX0 > 0.0 ? Sign::plus : Sign::minus;
    const double ux0 = elliptic::incomplete_F(sign_value(cfg.sign_x) * X0, Modulus(cfg.m_x));
    cfg.t_shift_x = -ux0 / cfg.rate_x;

    cfg.sign_z = Z0 > 0.0 ? Sign::plus : Sign::minus;
    const double d0 = std::fabs(std::tanh(Z0));
    // dn(u0) = |tanh Z0| with u0 in [0, K]; |tanh Z0| >= sqrt(1 - m_z) holds
    // for every resonant initial state, so the sine below stays in [0, 1].
    const double s0 = std::min(1.0, std::sqrt(std::max(0.0, 1.0 - d0 * d0) / cfg.m_z));
    const double u0 = elliptic::incomplete_F(std::asin(s0), Modulus(cfg.m_z));
    const double sigma = dZ0 == 0.0 ? 1.0 : -sign_value(cfg.sign_z) * (dZ0 > 0.0 ? 1.0 : -1.0);
    cfg.t_shift_z = -sigma * u0 / cfg.rate_z;
    return cfg;
}

std::pair<double, double> eval_moving(const ClosedFormConfig& cfg, double t, bool unwrap,
                                      double exclusion) {
    check_family(cfg);
    const double t_near = nearest_asymptote_time(cfg, t);
    if (std::fabs(t - t_near) < exclusion) {
        throw AsymptoteError("closed_form", "evaluation time inside the asymptote exclusion radius",
                             t_near);
    }
    return {eval_x_branch(cfg, t, unwrap), eval_z_branch(cfg, t, t_near)};
}

std::pair<double, double> eval_xz(const ClosedFormConfig& cfg, const WaveParameters& wp, double t,
                                  bool unwrap, double exclusion) {
    check_params(cfg, wp);
    const auto [X, Z] = eval_moving(cfg, t, unwrap, exclusion);
    return {wp.c * t + X / kTwoPi, Z / (kTwoPi * wp.delta)};
}

std::pair<double, double> eval_derivatives(const ClosedFormConfig& cfg, const WaveParameters& wp,
                                           double t) {
    check_params(cfg, wp);
    constexpr double kCut = 1e-12;
    const double sx = sign_value(cfg.sign_x);
    const double sz = sign_value(cfg.sign_z);

    double Xp;
    {
        const double u = cfg.rate_x * (t - cfg.t_shift_x);
        const auto j = elliptic::jacobi_sn_cn_dn(u, Modulus(cfg.m_x));
        if (x_is_sc(cfg)) {
            Xp = sx * cfg.rate_x * j.dn;
        } else {
            const double y = sx * cfg.amp_x * j.cn;
            const double yp = -sx * cfg.amp_x * cfg.rate_x * j.sn * j.dn;
            Xp = yp / (1.0 + y * y);
        }
    }

    double Zp;
    {
        const double u = cfg.rate_z * (t - cfg.t_shift_z);
        const auto j = elliptic::jacobi_sn_cn_dn(u, Modulus(cfg.m_z));
        const double t_near = nearest_asymptote_time(cfg, t);
        switch (z_kind(cfg)) {
            case ZKind::sn:
                if (std::fabs(j.cn) < kCut) {
                    throw PoleError("closed_form", "z derivative pole at an asymptote", t_near);
                }
                Zp = sz * cfg.rate_z * j.dn / j.cn;
                break;
            case ZKind::cn:
                if (std::fabs(j.sn) < kCut) {
                    throw PoleError("closed_form", "z derivative pole at an asymptote", t_near);
                }
                Zp = -sz * cfg.rate_z * j.dn / j.sn;
                break;
            default:
                if (std::fabs(j.sn) < kCut) {
                    throw PoleError("closed_form", "z derivative pole at an asymptote", t_near);
                }
                Zp = -sz * cfg.rate_z * j.cn / j.sn;
                break;
        }
    }

    return {wp.c + Xp / kTwoPi, Zp / (kTwoPi * wp.delta)};
}

std::vector<double> asymptote_times(const ClosedFormConfig& cfg, double t_lo, double t_hi) {
    check_family(cfg);
    if (!(t_hi >= t_lo)) {
        throw ConfigError("closed_form", "asymptote window must satisfy t_hi >= t_lo");
    }
    const double quarter = elliptic::complete_K(Modulus(cfg.m_z));
    const double spacing = 2.0 * quarter / cfg.rate_z;
    const double base = cfg.t_shift_z + asymptote_offset_u(cfg, quarter) / cfg.rate_z;
    const double fuzz = 1e-12 * std::max(1.0, std::fabs(t_hi) + std::fabs(t_lo));
    const double j_lo = std::ceil((t_lo - base) / spacing - fuzz);
    const double j_hi = std::floor((t_hi - base) / spacing + fuzz);
    std::vector<double> times;
    for (double j = j_lo; j <= j_hi; j += 1.0) {
        times.push_back(base + j * spacing);
    }
    return times;
}

double asymptote_spacing(const ClosedFormConfig& cfg) {
    check_family(cfg);
    return 2.0 * elliptic::complete_K(Modulus(cfg.m_z)) / cfg.rate_z;
}

Trajectory sample_trajectory(const ClosedFormConfig& cfg, const WaveParameters& wp, double t0,
                             double t1, std::size_t n, double exclusion) {
    check_params(cfg, wp);
    if (!(t1 > t0)) throw ConfigError("closed_form", "time window must satisfy t1 > t0");
    if (n < 2) throw ConfigError("closed_form", "at least two samples required");

    Trajectory traj;
    traj.source = TrajectorySource::closed;
    traj.params = wp;
    traj.breaks = asymptote_times(cfg, t0, t1);
    traj.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
        try {
            const auto [x, z] = eval_xz(cfg, wp, t, true, exclusion);
            traj.samples.push_back({t, x, z});
        } catch (const AsymptoteError&) {
            // Samples inside the exclusion radius are dropped; the asymptote
            // itself is recorded in `breaks`.
        }
    }
    return traj;
}

}  // namespace wavetraj::closed

#include "wavetraj/trajectory_ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavetraj/errors.hpp"

namespace wavetraj::ode {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kUround = std::numeric_limits<double>::epsilon();

// Dormand-Prince 5(4) tableau with the Shampine dense-output weights.
constexpr double c2 = 0.2, c3 = 0.3, c4 = 0.8, c5 = 8.0 / 9.0;
constexpr double a21 = 0.2;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

constexpr double kSafe = 0.9, kBeta = 0.04, kFacl = 0.2, kFacr = 10.0;
constexpr double kExpo1 = 0.2 - kBeta * 0.75;

struct Dense {
    double t0 = 0.0, h = 0.0;
    double r1[2]{}, r2[2]{}, r3[2]{}, r4[2]{}, r5[2]{};

    void set(double xold, double step, const double y[2], const double ynew[2],
             const double k1[2], const double k2new[2], const double r5in[2]) {
        t0 = xold;
        h = step;
        for (int i = 0; i < 2; ++i) {
            const double ydiff = ynew[i] - y[i];
            const double bspl = step * k1[i] - ydiff;
            r1[i] = y[i];
            r2[i] = ydiff;
            r3[i] = bspl;
            r4[i] = ydiff - step * k2new[i] - bspl;
            r5[i] = r5in[i];
        }
    }

    void eval(double t, double out[2]) const {
        const double th = (t - t0) / h;
        const double th1 = 1.0 - th;
        for (int i = 0; i < 2; ++i) {
            out[i] = r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
        }
    }
};

struct DriveResult {
    std::vector<TrajectorySample> samples;
    std::optional<double> ceiling_hit;
};

// Integrates dy/dt = deriv(t, y) over [t0, t1], emitting dense-output samples
// at n_out uniform times. `zmag` maps the state to the quantity checked
// against the ceiling.
template <class DerivFn, class ZFn>
DriveResult dopri5_drive(DerivFn&& deriv, ZFn&& zmag, double y0a, double y0b, double t0, double t1,
                         std::size_t n_out, const IntegratorOptions& opt) {
    if (!(t1 > t0)) throw ConfigError("trajectory_ode", "time window must satisfy t1 > t0");
    if (n_out < 2) throw ConfigError("trajectory_ode", "at least two output samples required");
    if (!(opt.rel_tol > 0.0) || !(opt.abs_tol > 0.0)) {
        throw ConfigError("trajectory_ode", "tolerances must be positive");
    }
    if (!(opt.z_ceiling > 0.0)) {
        throw ConfigError("trajectory_ode", "Z ceiling must be positive");
    }

    double y[2] = {y0a, y0b};
    if (std::fabs(zmag(y)) >= opt.z_ceiling) {
        throw ConfigError("trajectory_ode", "initial state already at or above the Z ceiling");
    }

    std::vector<double> times(n_out);
    for (std::size_t i = 0; i < n_out; ++i) {
        times[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n_out - 1);
    }
    times.back() = t1;

    DriveResult res;
    res.samples.reserve(n_out);
    res.samples.push_back({times[0], y[0], y[1]});
    std::size_t next_out = 1;

    double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], ysti[2], ynew[2];
    deriv(t0, y, k1);

    const double hmax = t1 - t0;
    // Starting step: a crude first guess refined by one Euler probe of the
    // second derivative, after Hairer's hinit.
    double h;
    {
        double dnf = 0.0, dny = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double sk = opt.abs_tol + opt.rel_tol * std::fabs(y[i]);
            dnf += (k1[i] / sk) * (k1[i] / sk);
            dny += (y[i] / sk) * (y[i] / sk);
        }
        h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : std::sqrt(dny / dnf) * 0.01;
        h = std::min(h, hmax);
        double y1[2], f1[2];
        for (int i = 0; i < 2; ++i) y1[i] = y[i] + h * k1[i];
        deriv(t0 + h, y1, f1);
        double der2 = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double sk = opt.abs_tol + opt.rel_tol * std::fabs(y[i]);
            der2 += ((f1[i] - k1[i]) / sk) * ((f1[i] - k1[i]) / sk);
        }
        der2 = std::sqrt(der2) / h;
        const double der12 = std::max(std::fabs(der2), std::sqrt(dnf));
        const double h1 = (der12 <= 1e-15) ? std::max(1e-6, std::fabs(h) * 1e-3)
                                           : std::pow(0.01 / der12, 0.2);
        h = std::min({100.0 * h, h1, hmax});
    }

    double t = t0;
    double facold = 1e-4;
    bool reject = false;
    std::size_t nstep = 0;

    while (true) {
        if (next_out >= n_out) break;
        if (++nstep > opt.max_steps) {
            throw StepUnderflowError("trajectory_ode", "step budget exhausted", t);
        }
        if (0.1 * std::fabs(h) <= std::fabs(t) * kUround) {
            throw StepUnderflowError("trajectory_ode", "step size underflow", t);
        }
        bool last = false;
        if (t + 1.01 * h - t1 > 0.0) {
            h = t1 - t;
            last = true;
        }

        for (int i = 0; i < 2; ++i) ysti[i] = y[i] + h * a21 * k1[i];
        deriv(t + c2 * h, ysti, k2);
        for (int i = 0; i < 2; ++i) ysti[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        deriv(t + c3 * h, ysti, k3);
        for (int i = 0; i < 2; ++i) ysti[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        deriv(t + c4 * h, ysti, k4);
        for (int i = 0; i < 2; ++i) {
            ysti[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        }
        deriv(t + c5 * h, ysti, k5);
        for (int i = 0; i < 2; ++i) {
            ysti[i] =
                y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        }
        const double tph = t + h;
        deriv(tph, ysti, k6);
        for (int i = 0; i < 2; ++i) {
            ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                                  a76 * k6[i]);
        }
        double k7[2];
        deriv(tph, ynew, k7);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double sk =
                opt.abs_tol + opt.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                  e7 * k7[i]);
            err += (e / sk) * (e / sk);
        }
        err = std::sqrt(err / 2.0);
        if (!std::isfinite(err)) err = 1e10;

        const double fac11 = std::pow(err, kExpo1);
        double fac = fac11 / std::pow(facold, kBeta);
        fac = std::max(1.0 / kFacr, std::min(1.0 / kFacl, fac / kSafe));
        double hnew = h / fac;

        if (err <= 1.0) {
            facold = std::max(err, 1e-4);

            double r5[2];
            for (int i = 0; i < 2; ++i) {
                r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                             d7 * k7[i]);
            }
            Dense dense;
            dense.set(t, h, y, ynew, k1, k7, r5);

            double t_stop = last ? t1 : tph;
            bool hit = false;
            if (std::fabs(zmag(ynew)) >= opt.z_ceiling) {
                // Locate the ceiling crossing on the dense interpolant.
                double lo = t, hi = tph;
                for (int it = 0; it < 200 && hi - lo > kUround * std::max(1.0, std::fabs(hi));
                     ++it) {
                    const double mid = 0.5 * (lo + hi);
                    double ym[2];
                    dense.eval(mid, ym);
                    if (std::fabs(zmag(ym)) >= opt.z_ceiling) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                t_stop = hi;
                hit = true;
            }

            while (next_out < n_out && times[next_out] <= t_stop) {
                double ys[2];
                dense.eval(times[next_out], ys);
                res.samples.push_back({times[next_out], ys[0], ys[1]});
                ++next_out;
            }

            if (hit) {
                double ys[2];
                dense.eval(t_stop, ys);
                if (res.samples.back().t < t_stop) {
                    res.samples.push_back({t_stop, ys[0], ys[1]});
                }
                res.ceiling_hit = t_stop;
                return res;
            }

            k1[0] = k7[0];
            k1[1] = k7[1];
            y[0] = ynew[0];
            y[1] = ynew[1];
            t = last ? t1 : tph;
            if (reject) hnew = std::min(hnew, h);
            reject = false;
            h = std::min(hnew, hmax);
        } else {
            h = h / std::min(1.0 / kFacl, fac11 / kSafe);
            reject = true;
        }
    }
    return res;
}

}  // namespace

std::pair<double, double> rhs_lab(const WaveParameters& wp, double x, double z, double t) {
    const FieldSample f = linear_fields(wp, x, z, t);
    return {f.u, f.v};
}

std::pair<double, double> rhs_moving(const WaveParameters& wp, double X, double Z) {
    const double a = kTwoPi * wp.delta;
    const double pre = kTwoPi * a * wp.c;  // 4 pi^2 delta c
    const double dX = pre * cosh_over_sinh(Z, a) * std::cos(X) + wp.b;
    const double dZ = pre * sinh_over_sinh(Z, a) * std::sin(X);
    return {dX, dZ};
}

Trajectory integrate(const WaveParameters& wp, double x0, double z0, double t0, double t1,
                     std::size_t n_out, const IntegratorOptions& opt) {
    const double zscale = kTwoPi * wp.delta;
    auto deriv = [&wp](double t, const double y[2], double dy[2]) {
        const auto [u, v] = rhs_lab(wp, y[0], y[1], t);
        dy[0] = u;
        dy[1] = v;
    };
    auto zmag = [zscale](const double y[2]) { return zscale * y[1]; };
    DriveResult r = dopri5_drive(deriv, zmag, x0, z0, t0, t1, n_out, opt);
    Trajectory traj;
    traj.samples = std::move(r.samples);
    traj.ceiling_hit = r.ceiling_hit;
    traj.source = TrajectorySource::ode;
    traj.params = wp;
    return traj;
}

MovingSolution integrate_moving(const WaveParameters& wp, double X0, double Z0, double t0,
                                double t1, std::size_t n_out, const IntegratorOptions& opt) {
    auto deriv = [&wp](double /*t*/, const double y[2], double dy[2]) {
        const auto [dX, dZ] = rhs_moving(wp, y[0], y[1]);
        dy[0] = dX;
        dy[1] = dZ;
    };
    auto zmag = [](const double y[2]) { return y[1]; };
    DriveResult r = dopri5_drive(deriv, zmag, X0, Z0, t0, t1, n_out, opt);
    return {std::move(r.samples), r.ceiling_hit};
}

}  // namespace wavetraj::ode

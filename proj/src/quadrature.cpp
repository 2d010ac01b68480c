#include "wavetraj/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wavetraj/errors.hpp"

namespace wavetraj::quadrature {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae;
// even indices are the Kronrod-only nodes).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975,
                           0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    double integral;
    double err;
};

// One Kronrod panel with the variation-scaled error estimate: the raw
// |K15 - G7| difference is damped once it falls below the integrand's
// variation and floored at the roundoff level of the absolute integral.
Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double r = 0.5 * (hi - lo);
    double fv[15];
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = r * kXgk[i];
        fv[i] = f(c - dx);
        fv[14 - i] = f(c + dx);
    }
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    double resabs = kWgk[7] * std::fabs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        const double fsum = fv[i] + fv[14 - i];
        resk += kWgk[i] * fsum;
        resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i) {
        resasc += kWgk[i] * (std::fabs(fv[i] - reskh) + std::fabs(fv[14 - i] - reskh));
    }

    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.integral = resk * r;
    if (!std::isfinite(p.integral)) {
        p.err = std::numeric_limits<double>::infinity();
        return p;
    }
    double abserr = std::fabs((resk - resg) * r);
    resabs *= r;
    resasc *= r;
    if (resasc != 0.0 && abserr != 0.0) {
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        abserr = std::max(50.0 * kEps * resabs, abserr);
    }
    p.err = abserr;
    return p;
}

}  // namespace

double gauss_kronrod(const std::function<double(double)>& f, double lo, double hi,
                     const QuadOptions& opt) {
    if (lo == hi) return 0.0;
    const double sign = lo < hi ? 1.0 : -1.0;
    const double a = std::min(lo, hi);
    const double b = std::max(lo, hi);

    auto by_err = [](const Panel& x, const Panel& y) { return x.err < y.err; };
    std::vector<Panel> heap;
    heap.push_back(gk15(f, a, b));
    double total = heap.front().integral;
    double total_err = heap.front().err;

    for (int it = 0; it < opt.max_panels; ++it) {
        if (std::isfinite(total) && total_err <= opt.rel_tol * std::fabs(total) + opt.abs_tol) {
            return sign * total;
        }
        std::pop_heap(heap.begin(), heap.end(), by_err);
        const Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi ||
            worst.hi - worst.lo <= 8.0 * kEps * std::max(std::fabs(worst.lo), std::fabs(worst.hi))) {
            throw QuadratureError("quadrature", "adaptive Gauss-Kronrod panel is unsplittable",
                                  worst.lo, worst.hi);
        }
        const Panel l = gk15(f, worst.lo, mid);
        const Panel r = gk15(f, mid, worst.hi);
        total += l.integral + r.integral - worst.integral;
        total_err += l.err + r.err - worst.err;
        heap.push_back(l);
        std::push_heap(heap.begin(), heap.end(), by_err);
        heap.push_back(r);
        std::push_heap(heap.begin(), heap.end(), by_err);
    }
    std::pop_heap(heap.begin(), heap.end(), by_err);
    throw QuadratureError("quadrature", "adaptive Gauss-Kronrod failed to converge",
                          heap.back().lo, heap.back().hi);
}

double integrate_endpoint_sqrt(const std::function<double(double)>& f, double lo, double hi,
                               const QuadOptions& opt) {
    if (lo == hi) return 0.0;
    const double sign = lo < hi ? 1.0 : -1.0;
    const double a = std::min(lo, hi);
    const double b = std::max(lo, hi);
    const double mid = 0.5 * (a + b);
    // tau = a + s^2 regularizes an inverse-square-root endpoint at a; the
    // transformed integrand is smooth there, so plain Gauss-Kronrod applies.
    auto left = [&f, a](double s) { return 2.0 * s * f(a + s * s); };
    auto right = [&f, b](double s) { return 2.0 * s * f(b - s * s); };
    const double il = gauss_kronrod(left, 0.0, std::sqrt(mid - a), opt);
    const double ir = gauss_kronrod(right, 0.0, std::sqrt(b - mid), opt);
    return sign * (il + ir);
}

double tanh_sinh(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
    if (lo == hi) return 0.0;
    const double sign = lo < hi ? 1.0 : -1.0;
    const double a = std::min(lo, hi);
    const double b = std::max(lo, hi);
    const double r = 0.5 * (b - a);
    constexpr double kHalfPi = 1.57079632679489661923;

    double prev = 0.0;
    for (int level = 0; level <= 12; ++level) {
        const double h = std::ldexp(1.0, -level);
        const int n = static_cast<int>(std::ceil(std::asinh(710.0 / kHalfPi / 2.0) / h)) + 1;
        double sum = 0.0;
        {
            const double v = f(a + r);
            if (std::isfinite(v)) sum += kHalfPi * v;
        }
        for (int k = 1; k <= n; ++k) {
            const double kh = k * h;
            const double u = kHalfPi * std::sinh(kh);
            // Abscissae as offsets from the endpoints, in the cancellation-free
            // form r (1 - tanh u) = 2 r q / (1 + q) with q = e^{-2u}; offsets and
            // weights decrease monotonically in k, so underflow ends the row.
            const double q = std::exp(-2.0 * u);
            const double d = 2.0 * r * q / (1.0 + q);
            const double w = 4.0 * kHalfPi * std::cosh(kh) * q / ((1.0 + q) * (1.0 + q));
            if (d == 0.0 || w == 0.0) break;
            const double vr = f(b - d);
            if (std::isfinite(vr)) sum += w * vr;
            const double vl = f(a + d);
            if (std::isfinite(vl)) sum += w * vl;
        }
        const double integral = sum * h * r;
        if (level > 2 && std::fabs(integral - prev) <= rel_tol * std::fabs(integral) + 1e-300) {
            return sign * integral;
        }
        prev = integral;
    }
    throw QuadratureError("quadrature", "tanh-sinh quadrature failed to converge", lo, hi);
}

}  // namespace wavetraj::quadrature

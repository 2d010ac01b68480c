#pragma once

#include <functional>

namespace wavetraj::quadrature {

struct QuadOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    int max_panels = 5000;
};

// Globally adaptive Gauss-Kronrod 7-15 on [lo, hi]: the panel with the
// largest error estimate is split first until the summed estimate meets the
// tolerance. Panel errors use the variation-scaled estimate with a roundoff
// floor, so evaluation noise (for instance from cancellation near a root of
// the integrand's denominator) does not trigger endless refinement. All
// nodes are interior; raises a quadrature error naming the worst panel if
// the budget is exhausted or a panel becomes unsplittable.
double gauss_kronrod(const std::function<double(double)>& f, double lo, double hi,
                     const QuadOptions& opt = {});

// Integral of f over [lo, hi] where f may behave like an inverse square root
// at either endpoint: each half is regularized by the substitution
// tau = endpoint +- s^2 and then integrated by gauss_kronrod.
double integrate_endpoint_sqrt(const std::function<double(double)>& f, double lo, double hi,
                               const QuadOptions& opt = {});

// Tanh-sinh (double-exponential) quadrature on [lo, hi]; handles integrable
// endpoint singularities directly. Independent of the Gauss-Kronrod path.
double tanh_sinh(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-12);

}  // namespace wavetraj::quadrature

#pragma once

namespace wavetraj::elliptic {

// Squared modulus m = k^2 of an elliptic integral or of the Jacobi functions.
// Values within 1e-12 of the degenerate endpoints 0 and 1 are snapped to the
// endpoint so callers hit the exact trigonometric/hyperbolic special cases
// instead of an ill-conditioned general evaluation.
class Modulus {
public:
    explicit Modulus(double m);

    double value() const { return m_; }
    bool is_zero() const { return m_ == 0.0; }
    bool is_one() const { return m_ == 1.0; }

private:
    double m_;
};

// Complete elliptic integral of the first kind K(m), by the arithmetic-
// geometric mean. Diverges at m = 1.
double complete_K(Modulus m);

// Incomplete elliptic integral of the first kind F(phi | m) for any real phi,
// by the ascending Landen transformation with a branch-continuous phase
// update. Satisfies F(phi + pi | m) = F(phi | m) + 2 K(m).
double incomplete_F(double phi, Modulus m);

struct JacobiValues {
    double sn;
    double cn;
    double dn;
};

// Jacobi elliptic functions sn, cn, dn via the descending Landen (Gauss)
// transformation of the amplitude. Valid for all real u.
JacobiValues jacobi_sn_cn_dn(double u, Modulus m);

// Jacobi amplitude am(u | m) as a continuous (unwrapped) function of u.
double jacobi_am(double u, Modulus m);

// sc(u | m) = sn/cn. Raises a pole error when |cn| < cn_cutoff, carrying the
// nearest pole abscissa (2j + 1) K(m).
double jacobi_sc(double u, Modulus m, double cn_cutoff = 1e-12);

}  // namespace wavetraj::elliptic

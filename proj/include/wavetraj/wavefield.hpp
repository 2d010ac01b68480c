#pragma once

namespace wavetraj {

// cosh(y) / sinh(a) and sinh(y) / sinh(a) for a > 0, computed in shifted
// exponential form once the arguments leave the directly representable range,
// so deep-water limits underflow gracefully to zero instead of producing
// inf/inf.
double cosh_over_sinh(double y, double a);
double sinh_over_sinh(double y, double a);

// Phase speed of a linear capillary-gravity wave of unit wavelength on depth
// delta with Weber number we:
//   c^2 = tanh(2 pi delta) / (2 pi delta) * (1 + 4 pi^2 delta^2 we).
// The positive root is returned.
double dispersion_speed(double delta, double we);

// Squared amplitude constant of the moving-frame oscillator,
//   A^2 = 8 pi^4 delta^2 c^2 / sinh^2(2 pi delta),
// evaluated stably for large 2 pi delta.
double amplitude_constant_a2(double delta, double c);

// Bundle of wave parameters shared by every trajectory backend. `c` is the
// wave phase speed, `c0` the mean underlying current, `a2` the amplitude
// constant above and `b = 2 pi (c0 - c)` the moving-frame drift rate.
struct WaveParameters {
    double delta;
    double we;
    double c;
    double c0;
    double a2;
    double b;

    // Physical construction: speed from the dispersion relation.
    static WaveParameters from_dispersion(double delta, double we, double c0);

    // Free-speed construction for studies that fix c independently of the
    // dispersion relation.
    static WaveParameters with_speed(double delta, double c, double c0, double we = 0.0);
};

// Linearized free-surface elevation and flow fields at (x, z, t), all for a
// unit-amplitude, unit-wavelength wave. `u` includes the mean current c0;
// `p` is the dynamic pressure perturbation.
struct FieldSample {
    double eta;
    double u;
    double v;
    double p;
};

FieldSample linear_fields(const WaveParameters& wp, double x, double z, double t);

}  // namespace wavetraj

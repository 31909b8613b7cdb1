#pragma once
#include <complex>

#include "udw/quadrature.hpp"
#include "udw/scenario.hpp"

namespace udw {

// Leading-order two-detector coefficients.  c2 weights the co-rotating
// exchange (receiver raised while the sender sector is lowered), d2 the
// counter-rotating pair excitation.  err_* combine the outer quadrature
// error with propagated inner-integral error, additively.
struct SignalCoefficients {
    std::complex<double> c2{};
    std::complex<double> d2{};
    double err_c2 = 0.0;
    double err_d2 = 0.0;
};

// |c2| + |d2|, the figure of merit for the leading-order channel.
double signal_strength(const SignalCoefficients& sc);

// Evaluates both coefficients for the scenario.  d2 is produced from the c2
// kernel with the receiver gap negated (they share one integrand family);
// compute_d2_direct exists so tests can confirm the equivalence against the
// d2 integral spelled out on its own.
//
// Dimension dispatch:
//   3+1  the commutator is a light-cone delta; the double integral reduces
//        to a single integral along the cone with an analytic Jacobian.
//        No causal contact between the coupling windows gives exact zeros.
//   1+1  constant commutator inside the cone; the inner integral is a
//        running prefix over the sender window (cached), the outer one runs
//        over the receiver window.
//   2+1  inverse-square-root commutator inside the cone; the inner integral
//        is regularised by the substitution u = sqrt(t_cone - t2).
//
// Accelerated worldlines are integrated in proper time with null-coordinate
// geometry, so arbitrarily wide exponential tails stay finite.  Throws
// AccuracyError (carrying the best estimate) when tolerances cannot be met,
// std::invalid_argument for unsupported geometry (transverse velocities
// paired with an accelerated worldline, 2+1 windows reaching further than
// |a tau| ~ 140 along a hyperbola).
SignalCoefficients compute_c2_d2(const Scenario& sc, const QuadratureOptions& opt = {});

std::complex<double> compute_d2_direct(const Scenario& sc,
                                       const QuadratureOptions& opt = {},
                                       double* err_out = nullptr);

// Single-detector vacuum coefficients for one detector coupling on its own
// (3+1 field).  p2 is the excitation weight (real, >= 0), q2 its
// de-excitation counterpart (real, <= 0), r2 the time-ordered second-order
// term, s2 the doubly-rotating term.  All four are extrapolated to the
// regulator limit by Richardson steps over {eps, eps/2, eps/4}.
struct SingleDetectorCoefficients {
    std::complex<double> p2{};
    std::complex<double> q2{};
    std::complex<double> r2{};
    std::complex<double> s2{};
    double err = 0.0;
};

// eps <= 0 selects an automatic regulator from the switching width.  Sudden
// switching is rejected (std::invalid_argument): the coincidence-limit
// kernel needs a smooth window to have a regulator-stable limit.
SingleDetectorCoefficients compute_single_detector(const DetectorConfig& det,
                                                   const QuadratureOptions& opt = {},
                                                   double eps = 0.0);

// Runs the scenario and its time-mirrored partner and checks the pair of
// relations c2' = c2 and d2' = -conj(d2) within the combined error
// estimates (plus a small floor for roundoff on exact zeros).
struct MirrorReport {
    SignalCoefficients original;
    SignalCoefficients mirrored;
    double c2_diff = 0.0;
    double d2_diff = 0.0;
    double allowed = 0.0;
    bool pass = false;
};

MirrorReport verify_mirror_symmetry(const Scenario& sc, const QuadratureOptions& opt = {});

} // namespace udw

#pragma once
#include <complex>

#include "udw/switching.hpp"

namespace udw {

// Analytic solutions for the leading-order signaling coefficients in the
// scenario families where the integrals close.  Each function returns the
// same quantity the quadrature engine computes for the matching scenario;
// the test suite holds the two routes against each other.
//
// Conventions shared with the engine: the sender couples with strength
// lambda_a and gap omega_a, the receiver with lambda_b and omega_b, and
// the receiver window is the lightray image of the sender window unless a
// function takes explicit switching profiles.  D2 follows from any of the
// C2 expressions as -C2(omega_a, -omega_b).

enum class ClosedFormCase {
    Rest1p1,
    Rest1p1Resonant,
    Rest3p1,
    Rest3p1Resonant,
    Rest1p1ZeroGap,
    Rest3p1ZeroGap,
    Rest2p1ZeroGap,
    Inertial3p1,
    Inertial3p1Resonant,
    Inertial1p1,
    Accel3p1,
    Accel1p1Limit,
    Timelike1p1Sudden,
};

const char* closed_form_case_name(ClosedFormCase c);

// C2 for two resting detectors a distance `separation` apart, the sender
// switched on suddenly for `duration` of proper time.  dimension 1 or 3.
// The resonant (omega_a == omega_b) and zero-gap branches are removable
// limits of the generic expression and are evaluated by series near the
// seam, so the function is continuous across them.  dimension 1 requires
// omega_a != 0 unless both gaps vanish.
std::complex<double> rest_c2(int dimension, double omega_a, double omega_b,
                             double separation, double duration,
                             double lambda_a, double lambda_b);

// |C2| + |D2| for two resting zero-gap detectors in 2+1 dimensions.
double rest_2p1_zero_gap(double separation, double duration, double lambda_a,
                         double lambda_b);

// C2 for a sender receding at speed v from a resting receiver, collinear
// motion, windows matched along lightrays (the receiver window stretches by
// the Doppler factor zeta).  v = 0 reduces to the rest case.
std::complex<double> inertial_c2(int dimension, double omega_a,
                                 double omega_b, double separation,
                                 double duration, double v, double lambda_a,
                                 double lambda_b);

// |C2| + |D2| for an eternally coupled uniformly accelerated sender and a
// resting receiver behind its horizon, in 3+1 dimensions.  Arguments are
// the gaps in units of the acceleration: x = omega_b/a, y = omega_a/a.
// Requires y > 0; the y = 0 line is outside the catalogue.  x = 0 is the
// limiting value only: nearby the result oscillates in x without settling,
// see accel_3p1_oscillation_dominated.
double accel_3p1_strength(double x, double y, double lambda_a,
                          double lambda_b);

// True when x is small enough that accel_3p1_strength sits in the
// oscillation-dominated regime where the value swings on scales finer than
// any physical cutoff resolves.  Callers should report such results as
// regime-limited rather than quote them bare.
bool accel_3p1_oscillation_dominated(double x);

struct Accel1p1Result {
    std::complex<double> c2;
    double strength; // |C2| + |D2|
};

// Uniformly accelerated sender against a resting receiver in 1+1
// dimensions, both coupled forever (the limit of ever-wider smooth
// switching).  The strength field is computed from its own closed
// expression, not by assembling the moduli, so the two can be cross-checked.
Accel1p1Result accel_1p1(double omega_a, double omega_b, double a,
                         double lambda_a, double lambda_b);

// C2 for two detectors in 1+1 dimensions whose windows are strictly
// timelike separated: every receiver point lies inside the future cone of
// every sender point.  In that regime the field commutator is constant, so
// C2 factorizes into the product of the two window Fourier transforms and
// is independent of the worldlines and the separation.  The windows are
// given in each detector's proper time with a common origin, receiver
// support strictly after sender support; anything else throws.
std::complex<double> timelike_1p1(const SwitchingProfile& switch_a,
                                  const SwitchingProfile& switch_b,
                                  double omega_a, double omega_b,
                                  double lambda_a, double lambda_b);

} // namespace udw

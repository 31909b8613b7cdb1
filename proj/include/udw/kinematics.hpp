#pragma once
#include <optional>

#include "udw/vec.hpp"

namespace udw {

// Detector worldlines, c = 1 throughout.
//
//   Rest                 x(t) = x0
//   Inertial             x(t) = x0 + v t,  |v| < 1
//   UniformAcceleration  t(tau) = sinh(a tau)/a,  x1(tau) = cosh(a tau)/a
//
// Uniform acceleration is always along the first spatial axis with the
// vertex at x1 = 1/a; offsets are arranged by translating the partner
// worldline instead.  Proper time is normalised so tau(0) = 0 for every
// variant.
enum class WorldlineKind { Rest, Inertial, UniformAcceleration };

class Worldline {
public:
    static Worldline rest(Vec3 position);
    static Worldline inertial(Vec3 velocity, Vec3 position_at_t0);
    static Worldline uniform_acceleration(double a);

    WorldlineKind kind() const { return kind_; }
    double accel() const { return a_; }
    Vec3 base_position() const { return x0_; }
    Vec3 base_velocity() const { return v_; }

    Vec3 position(double t) const;
    Vec3 velocity(double t) const;

    double proper_time(double t) const;      // tau(t)
    double coordinate_time(double tau) const; // t(tau)
    double dtau_dt(double t) const;           // in (0, 1]

private:
    WorldlineKind kind_ = WorldlineKind::Rest;
    Vec3 x0_{};
    Vec3 v_{};
    double a_ = 0.0;
    double gamma_inv_ = 1.0; // sqrt(1 - v^2) cached for Inertial
};

// zeta = sqrt((1+v)/(1-v)), the relativistic Doppler factor for recession
// speed v.  Domain 0 <= v < 1.
double doppler_factor(double v);

// Null coordinates of the uniformly accelerated worldline as functions of
// proper time:
//   u = t - x1 = -exp(-a tau)/a,   v = t + x1 = exp(a tau)/a.
// These stay representable long after sinh/cosh overflow and are what the
// integration kernels use near the horizon.
double accel_null_u(double a, double tau);
double accel_null_v(double a, double tau);
// log(cosh(a tau)), overflow safe.
double accel_log_cosh(double a, double tau);

// Solve t1 - te = |x_recv(t1) - x_send(te)| for the emission time te <= t1.
// The root is unique (the defect is strictly monotone for subluminal
// worldlines).  Returns nullopt when the reception event lies outside the
// causal future of the sender's worldline, e.g. behind an acceleration
// horizon.  Roots further than ~1e9x the scenario scale are reported as
// none too: they are not resolvable in double precision, and the
// integration kernels switch to null coordinates well before that regime.
std::optional<double> retarded_emission_time(const Worldline& sender,
                                             const Worldline& receiver,
                                             double t1);

// Forward counterpart: reception time t1 >= t2 of a light signal emitted at
// t2.  nullopt when the receiver outruns the signal (accelerated receiver
// beyond the horizon).
std::optional<double> advanced_reception_time(const Worldline& sender,
                                              const Worldline& receiver,
                                              double t2);

// Null-cone correspondences parametrised by proper time on both ends.  For
// worldline pairs whose velocities lie along the x axis these reduce to
// exact quadratics in null coordinates, which stay well conditioned far
// along an accelerated worldline where the defect-based solvers above run
// out of floating-point headroom.  Constant transverse offsets are fine;
// transverse velocity components are not (throws std::invalid_argument --
// use the coordinate-time solvers for those pairs).
std::optional<double> emission_proper_time(const Worldline& sender,
                                           const Worldline& receiver,
                                           double tau_reception);
std::optional<double> reception_proper_time(const Worldline& sender,
                                            const Worldline& receiver,
                                            double tau_emission);

} // namespace udw

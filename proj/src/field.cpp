#include "udw/field.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace udw {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double four_pi_sq = 4.0 * pi * pi;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }
} // namespace

std::complex<double> commutator_1p1(double t, double x, double tp, double xp) {
    const int s = sgn(tp - t);
    if (s == 0)
        return {};
    const double dt = t - tp;
    const double dx = x - xp;
    if (dt * dt - dx * dx < 0.0)
        return {};
    return {0.0, 0.5 * s};
}

std::complex<double> commutator_2p1(double t, Vec3 x, double tp, Vec3 xp) {
    const int s = sgn(tp - t);
    if (s == 0)
        return {};
    const double dt = tp - t;
    const double q = dt * dt - (x - xp).dot(x - xp);
    if (q < 0.0)
        return {};
    if (q == 0.0)
        return {0.0, s * std::numeric_limits<double>::infinity()};
    return {0.0, s / (2.0 * pi * std::sqrt(q))};
}

double lightcone_delta_amplitude_3p1(double dist) {
    if (!(dist > 0.0))
        throw std::domain_error("delta sheet amplitude undefined at coincidence");
    return 1.0 / (4.0 * pi * dist);
}

std::complex<double> wightman_3p1(double t, Vec3 x, double tp, Vec3 xp,
                                  double eps) {
    if (!(eps > 0.0))
        throw std::invalid_argument("wightman regulator must be positive");
    const std::complex<double> dt(t - tp, -eps);
    const double r2 = (x - xp).dot(x - xp);
    return 1.0 / (four_pi_sq * (r2 - dt * dt));
}

} // namespace udw

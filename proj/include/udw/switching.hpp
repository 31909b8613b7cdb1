#pragma once
#include <complex>
#include <utility>

#include "udw/kinematics.hpp"

namespace udw {

// Switching function eta(tau) applied to a detector in its own proper time.
//
//   Sudden             1 on [tau0, tau0 + duration), 0 elsewhere
//   Gaussian           exp(-(tau - center)^2 / (2 width^2))
//   ExponentialDecay   exp(-|tau| / width)
//
// ExponentialDecay has no free center: it regulates integrals over the whole
// worldline and its bias against the sharp-window answer falls off like
// 1/width, so it only ever appears centered on tau = 0.
enum class SwitchingKind { Sudden, Gaussian, ExponentialDecay };

class SwitchingProfile {
public:
    static SwitchingProfile sudden(double tau0, double duration);
    static SwitchingProfile gaussian(double center, double width);
    static SwitchingProfile exponential_decay(double width);

    SwitchingKind kind() const { return kind_; }
    double eta(double tau) const;

    // Smallest interval [lo, hi] outside which eta < cutoff.  For Sudden the
    // cutoff is ignored and the exact window is returned.
    std::pair<double, double> proper_support(double cutoff) const;

    // Profile reflected through tau = 0: eta'(tau) = eta(-tau).
    SwitchingProfile mirrored() const;

    // Sudden only.
    double start() const { return start_; }
    double duration() const { return duration_; }
    // Gaussian only.
    double center() const { return center_; }
    // Gaussian and ExponentialDecay.
    double width() const { return width_; }

private:
    SwitchingKind kind_ = SwitchingKind::Sudden;
    double start_ = 0.0;
    double duration_ = 0.0;
    double center_ = 0.0;
    double width_ = 0.0;
};

// \int eta(tau) exp(i omega tau) dtau, evaluated analytically.
std::complex<double> switching_fourier(const SwitchingProfile& profile,
                                       double omega);

// Switching as seen in coordinate time: chi(t) = eta(tau(t)) dtau/dt.
// Integrating chi dt over the support window reproduces \int eta dtau.
double chi(const SwitchingProfile& profile, const Worldline& w, double t);

// Coordinate-time image of the proper support.  Exact window for Sudden;
// interval outside which eta < cutoff otherwise.
std::pair<double, double> support_window(const SwitchingProfile& profile,
                                         const Worldline& w, double cutoff);

} // namespace udw

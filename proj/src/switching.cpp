#include "udw/switching.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace udw {

SwitchingProfile SwitchingProfile::sudden(double tau0, double duration) {
    if (!(duration > 0.0))
        throw std::invalid_argument("sudden switching needs duration > 0");
    SwitchingProfile p;
    p.kind_ = SwitchingKind::Sudden;
    p.start_ = tau0;
    p.duration_ = duration;
    return p;
}

SwitchingProfile SwitchingProfile::gaussian(double center, double width) {
    if (!(width > 0.0))
        throw std::invalid_argument("gaussian switching needs width > 0");
    SwitchingProfile p;
    p.kind_ = SwitchingKind::Gaussian;
    p.center_ = center;
    p.width_ = width;
    return p;
}

SwitchingProfile SwitchingProfile::exponential_decay(double width) {
    if (!(width > 0.0))
        throw std::invalid_argument("exponential decay switching needs width > 0");
    SwitchingProfile p;
    p.kind_ = SwitchingKind::ExponentialDecay;
    p.width_ = width;
    return p;
}

double SwitchingProfile::eta(double tau) const {
    switch (kind_) {
    case SwitchingKind::Sudden:
        return (tau >= start_ && tau < start_ + duration_) ? 1.0 : 0.0;
    case SwitchingKind::Gaussian: {
        const double z = (tau - center_) / width_;
        return std::exp(-0.5 * z * z);
    }
    case SwitchingKind::ExponentialDecay:
        return std::exp(-std::abs(tau) / width_);
    }
    return 0.0;
}

std::pair<double, double> SwitchingProfile::proper_support(double cutoff) const {
    switch (kind_) {
    case SwitchingKind::Sudden:
        return {start_, start_ + duration_};
    case SwitchingKind::Gaussian: {
        if (!(cutoff > 0.0) || cutoff >= 1.0)
            throw std::invalid_argument("support cutoff must lie in (0, 1)");
        const double r = width_ * std::sqrt(2.0 * std::log(1.0 / cutoff));
        return {center_ - r, center_ + r};
    }
    case SwitchingKind::ExponentialDecay: {
        if (!(cutoff > 0.0) || cutoff >= 1.0)
            throw std::invalid_argument("support cutoff must lie in (0, 1)");
        const double r = width_ * std::log(1.0 / cutoff);
        return {-r, r};
    }
    }
    return {0.0, 0.0};
}

SwitchingProfile SwitchingProfile::mirrored() const {
    switch (kind_) {
    case SwitchingKind::Sudden:
        return sudden(-start_ - duration_, duration_);
    case SwitchingKind::Gaussian:
        return gaussian(-center_, width_);
    case SwitchingKind::ExponentialDecay:
        return *this;
    }
    return *this;
}

std::complex<double> switching_fourier(const SwitchingProfile& profile,
                                       double omega) {
    using namespace std::complex_literals;
    switch (profile.kind()) {
    case SwitchingKind::Sudden: {
        // (e^{i w T} - 1)/(i w) rewritten as T e^{i w T/2} sinc(w T/2); exact
        // and free of cancellation for small w.
        const double tau0 = profile.start();
        const double T = profile.duration();
        const double half = 0.5 * omega * T;
        const double sinc = (half == 0.0) ? 1.0 : std::sin(half) / half;
        return T * sinc * std::exp(1i * (omega * tau0 + half));
    }
    case SwitchingKind::Gaussian: {
        const double s = profile.width();
        return s * std::sqrt(2.0 * std::numbers::pi) *
               std::exp(1i * omega * profile.center()) *
               std::exp(-0.5 * omega * omega * s * s);
    }
    case SwitchingKind::ExponentialDecay: {
        const double s = profile.width();
        return 2.0 * s / (1.0 + s * s * omega * omega);
    }
    }
    return 0.0;
}

double chi(const SwitchingProfile& profile, const Worldline& w, double t) {
    return profile.eta(w.proper_time(t)) * w.dtau_dt(t);
}

std::pair<double, double> support_window(const SwitchingProfile& profile,
                                         const Worldline& w, double cutoff) {
    const auto [lo, hi] = profile.proper_support(cutoff);
    return {w.coordinate_time(lo), w.coordinate_time(hi)};
}

} // namespace udw

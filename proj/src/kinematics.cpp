#include "udw/kinematics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace udw {

Worldline Worldline::rest(Vec3 position) {
    Worldline w;
    w.kind_ = WorldlineKind::Rest;
    w.x0_ = position;
    return w;
}

Worldline Worldline::inertial(Vec3 velocity, Vec3 position_at_t0) {
    const double v = velocity.norm();
    if (v >= 1.0)
        throw std::invalid_argument("inertial worldline requires |v| < 1");
    Worldline w;
    w.kind_ = WorldlineKind::Inertial;
    w.x0_ = position_at_t0;
    w.v_ = velocity;
    w.gamma_inv_ = std::sqrt((1.0 - v) * (1.0 + v));
    return w;
}

Worldline Worldline::uniform_acceleration(double a) {
    if (!(a > 0.0))
        throw std::invalid_argument("uniform acceleration requires a > 0");
    Worldline w;
    w.kind_ = WorldlineKind::UniformAcceleration;
    w.a_ = a;
    return w;
}

Vec3 Worldline::position(double t) const {
    switch (kind_) {
    case WorldlineKind::Rest:
        return x0_;
    case WorldlineKind::Inertial:
        return x0_ + t * v_;
    case WorldlineKind::UniformAcceleration:
        // x1 = sqrt(1/a^2 + t^2); hypot avoids overflow of t^2
        return Vec3{std::hypot(1.0 / a_, t), 0.0, 0.0};
    }
    return x0_;
}

Vec3 Worldline::velocity(double t) const {
    switch (kind_) {
    case WorldlineKind::Rest:
        return Vec3{};
    case WorldlineKind::Inertial:
        return v_;
    case WorldlineKind::UniformAcceleration: {
        // dx1/dt = t / sqrt(1/a^2 + t^2)
        const double x1 = std::hypot(1.0 / a_, t);
        return Vec3{t / x1, 0.0, 0.0};
    }
    }
    return Vec3{};
}

double Worldline::proper_time(double t) const {
    switch (kind_) {
    case WorldlineKind::Rest:
        return t;
    case WorldlineKind::Inertial:
        return t * gamma_inv_;
    case WorldlineKind::UniformAcceleration:
        return std::asinh(a_ * t) / a_;
    }
    return t;
}

double Worldline::coordinate_time(double tau) const {
    switch (kind_) {
    case WorldlineKind::Rest:
        return tau;
    case WorldlineKind::Inertial:
        return tau / gamma_inv_;
    case WorldlineKind::UniformAcceleration:
        return std::sinh(a_ * tau) / a_;
    }
    return tau;
}

double Worldline::dtau_dt(double t) const {
    switch (kind_) {
    case WorldlineKind::Rest:
        return 1.0;
    case WorldlineKind::Inertial:
        return gamma_inv_;
    case WorldlineKind::UniformAcceleration: {
        // 1/sqrt(1 + (a t)^2), written with hypot so large t degrades gracefully
        const double h = std::hypot(1.0, a_ * t);
        return 1.0 / h;
    }
    }
    return 1.0;
}

double doppler_factor(double v) {
    if (!(v >= 0.0 && v < 1.0))
        throw std::domain_error("doppler_factor requires 0 <= v < 1");
    return std::sqrt((1.0 + v) / (1.0 - v));
}

double accel_null_u(double a, double tau) { return -std::exp(-a * tau) / a; }
double accel_null_v(double a, double tau) { return std::exp(a * tau) / a; }

double accel_log_cosh(double a, double tau) {
    const double u = std::abs(a * tau);
    // log cosh u = u + log((1 + e^{-2u})/2)
    return u + std::log1p(std::exp(-2.0 * u)) - std::log(2.0);
}

namespace {

// Shared light-cone root finder.  h must be strictly monotone along the walk
// direction with h(start) < 0; doubling steps from `start` until the sign
// flips, then plain bisection.  Running past range_limit without a sign flip
// is the no-solution signal: for subluminal worldlines h approaches a
// nonpositive asymptote exactly when the null ray misses the worldline
// (acceleration horizon).  The range cap also guards against false zeros
// from cancellation at extreme distances, where t - sqrt(1/a^2 + t^2)
// rounds to zero long before the true defect does; roots further out than
// ~1e9x the scenario scale are not resolvable in doubles and report none.
template <class F>
std::optional<double> bracket_and_bisect(F&& h, double start, double dir,
                                         double initial_step,
                                         double range_limit) {
    const double f0 = h(start);
    if (f0 == 0.0)
        return start; // coincident positions: zero flight time
    if (f0 > 0.0)
        return std::nullopt;

    double step = initial_step;
    double neg = start; // h(neg) < 0 throughout
    double pos = 0.0;
    bool bracketed = false;
    for (int i = 0; i < 200; ++i) {
        const double cand = start + dir * step;
        if (!std::isfinite(cand) || std::abs(cand - start) > range_limit)
            break;
        const double fc = h(cand);
        if (fc == 0.0)
            return cand;
        if (fc > 0.0) {
            pos = cand;
            bracketed = true;
            break;
        }
        neg = cand;
        step *= 2.0;
    }
    if (!bracketed)
        return std::nullopt;

    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (neg + pos);
        if (m == neg || m == pos)
            break;
        const double fm = h(m);
        if (fm == 0.0)
            return m;
        (fm < 0.0 ? neg : pos) = m;
        const double scale = std::max({1.0, std::abs(neg), std::abs(pos)});
        if (std::abs(pos - neg) < 1e-15 * scale)
            break;
    }
    return 0.5 * (neg + pos);
}

} // namespace

std::optional<double> retarded_emission_time(const Worldline& sender,
                                             const Worldline& receiver,
                                             double t1) {
    const Vec3 xr = receiver.position(t1);
    auto h = [&](double te) {
        return (t1 - te) - (xr - sender.position(te)).norm();
    };
    const double sep = (xr - sender.position(t1)).norm();
    const double step0 = std::max(sep, 1e-3 * (1.0 + std::abs(t1)));
    const double range = 1e9 * std::max({1.0, std::abs(t1), sep});
    return bracket_and_bisect(h, t1, -1.0, step0, range);
}

std::optional<double> advanced_reception_time(const Worldline& sender,
                                              const Worldline& receiver,
                                              double t2) {
    const Vec3 xs = sender.position(t2);
    auto h = [&](double t1) {
        return (t1 - t2) - (xs - receiver.position(t1)).norm();
    };
    const double sep = (xs - receiver.position(t2)).norm();
    const double step0 = std::max(sep, 1e-3 * (1.0 + std::abs(t2)));
    const double range = 1e9 * std::max({1.0, std::abs(t2), sep});
    return bracket_and_bisect(h, t2, +1.0, step0, range);
}

namespace {

// u(tau), v(tau) along a worldline, either linear (rest, axial inertial) or
// exponential (uniform acceleration).
struct NullModel {
    bool expo = false;
    double a = 0.0;
    double pu = 1.0, cu = 0.0; // u = pu*tau + cu
    double pv = 1.0, cv = 0.0; // v = pv*tau + cv
    double y = 0.0, z = 0.0;   // constant transverse position
};

NullModel null_model(const Worldline& w) {
    NullModel m;
    if (w.kind() == WorldlineKind::UniformAcceleration) {
        m.expo = true;
        m.a = w.accel();
        return m;
    }
    const Vec3 vel = w.base_velocity();
    if (vel.y != 0.0 || vel.z != 0.0)
        throw std::invalid_argument(
            "proper-time null-cone solver: velocity must lie along the x axis");
    const Vec3 x0 = w.base_position();
    const double ginv = std::sqrt(1.0 - vel.x * vel.x); // dtau/dt
    m.pu = (1.0 - vel.x) / ginv;
    m.cu = -x0.x;
    m.pv = (1.0 + vel.x) / ginv;
    m.cv = x0.x;
    m.y = x0.y;
    m.z = x0.z;
    return m;
}

double model_u(const NullModel& m, double tau) {
    return m.expo ? -std::exp(-m.a * tau) / m.a : m.pu * tau + m.cu;
}
double model_v(const NullModel& m, double tau) {
    return m.expo ? std::exp(m.a * tau) / m.a : m.pv * tau + m.cv;
}

// Intersections of the null cone of the event (eu, ev, transverse offset
// rho) with the worldline modelled by m, i.e. roots of
//   (u(tau) - eu)(v(tau) - ev) = rho2.
// dir=+1 selects the future branch (both factors >= 0), dir=-1 the past
// branch (both factors <= 0).  The two quadratic roots are exactly these
// two branches, so the sign of (du + dv) identifies them without
// cancellation.
std::optional<double> cone_solve(const NullModel& m, double eu, double ev,
                                 double rho2, int dir) {
    if (std::isnan(eu) || std::isnan(ev)) return std::nullopt;

    double cand[2];
    int ncand = 0;

    if (std::isinf(ev) || std::isinf(eu)) {
        // Event pushed beyond double range along one null direction; the
        // only finite crossing pins the opposite null coordinate.  In the
        // other direction the crossing still exists (every timelike line
        // sweeps the full null range), just beyond double range too.
        if (std::isinf(ev) && ev > 0.0) {
            if (dir > 0) return std::numeric_limits<double>::infinity();
            if (m.expo) {
                if (eu >= 0.0) return std::nullopt; // u must stay < 0
                cand[ncand++] = -std::log(-m.a * eu) / m.a;
            } else {
                cand[ncand++] = (eu - m.cu) / m.pu;
            }
        } else if (std::isinf(eu) && eu < 0.0) {
            if (dir < 0) return -std::numeric_limits<double>::infinity();
            if (m.expo) {
                if (ev <= 0.0) return std::nullopt;
                cand[ncand++] = std::log(m.a * ev) / m.a;
            } else {
                cand[ncand++] = (ev - m.cv) / m.pv;
            }
        } else {
            return std::nullopt;
        }
        return cand[0];
    }

    if (m.expo) {
        // w = exp(a tau):  eu*w^2 - (a*(eu*ev - rho2) - 1/a)*w - ev = 0.
        const double A = eu;
        const double B = -(m.a * (eu * ev - rho2) - 1.0 / m.a);
        const double C = -ev;
        if (A == 0.0) {
            if (B != 0.0) {
                const double w = -C / B;
                if (w > 0.0 && std::isfinite(w)) cand[ncand++] = std::log(w) / m.a;
            }
        } else {
            const double disc = B * B - 4.0 * A * C;
            if (disc < 0.0) return std::nullopt;
            const double sq = std::sqrt(disc);
            const double qq = -0.5 * (B + (B >= 0.0 ? sq : -sq));
            const double r1 = (A != 0.0) ? qq / A : 0.0;
            const double r2 = (qq != 0.0) ? C / qq : 0.0;
            for (double w : {r1, r2})
                if (w > 0.0 && std::isfinite(w)) {
                    const double tau = std::log(w) / m.a;
                    bool dup = false;
                    for (int i = 0; i < ncand; ++i) dup |= (cand[i] == tau);
                    if (!dup) cand[ncand++] = tau;
                }
        }
    } else if (rho2 == 0.0) {
        // The quadratic factors exactly: one root per matched null ray.
        cand[ncand++] = (eu - m.cu) / m.pu;
        const double tv = (ev - m.cv) / m.pv;
        if (tv != cand[0]) cand[ncand++] = tv;
    } else {
        const double A = m.pu * m.pv;
        const double B = m.pu * (m.cv - ev) + m.pv * (m.cu - eu);
        const double C = (m.cu - eu) * (m.cv - ev) - rho2;
        const double disc = B * B - 4.0 * A * C;
        if (disc < 0.0) return std::nullopt;
        const double sq = std::sqrt(disc);
        const double qq = -0.5 * (B + (B >= 0.0 ? sq : -sq));
        if (qq != 0.0) {
            cand[ncand++] = qq / A;
            const double r2 = C / qq;
            if (r2 != cand[0]) cand[ncand++] = r2;
        } else {
            cand[ncand++] = 0.0;
        }
    }

    std::optional<double> best;
    for (int i = 0; i < ncand; ++i) {
        const double tau = cand[i];
        if (!std::isfinite(tau)) continue;
        const double du = model_u(m, tau) - eu;
        const double dv = model_v(m, tau) - ev;
        const double side = du + dv; // both factors share this sign
        if (dir > 0 ? side < 0.0 : side > 0.0) continue;
        if (!best || (dir > 0 ? tau < *best : tau > *best)) best = tau;
    }
    return best;
}

double transverse2(const NullModel& a, const NullModel& b) {
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return dy * dy + dz * dz;
}

} // namespace

std::optional<double> emission_proper_time(const Worldline& sender,
                                           const Worldline& receiver,
                                           double tau_reception) {
    const NullModel ms = null_model(sender);
    const NullModel mr = null_model(receiver);
    return cone_solve(ms, model_u(mr, tau_reception), model_v(mr, tau_reception),
                      transverse2(ms, mr), -1);
}

std::optional<double> reception_proper_time(const Worldline& sender,
                                            const Worldline& receiver,
                                            double tau_emission) {
    const NullModel ms = null_model(sender);
    const NullModel mr = null_model(receiver);
    return cone_solve(mr, model_u(ms, tau_emission), model_v(ms, tau_emission),
                      transverse2(ms, mr), +1);
}

} // namespace udw

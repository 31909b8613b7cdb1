#include "udw/signal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "udw/errors.hpp"
#include "udw/kinematics.hpp"
#include "udw/switching.hpp"

namespace udw {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

struct KernelSpec {
    double coef_b; // multiplies receiver proper time in the phase
    double coef_a; // multiplies sender proper time in the phase
    double sign;   // +1 for the c2 family, -1 for the direct d2 integral
};

bool axial(const Worldline& w) {
    if (w.kind() == WorldlineKind::UniformAcceleration) return true;
    return w.base_velocity().y == 0.0 && w.base_velocity().z == 0.0;
}

bool planar(const Worldline& w) {
    return w.base_position().z == 0.0 && w.base_velocity().z == 0.0;
}

bool on_axis(const Worldline& w) {
    return axial(w) && w.base_position().y == 0.0 && w.base_position().z == 0.0;
}

// Null coordinates u = t - x, v = t + x along a worldline, by proper time.
double wl_null_u(const Worldline& w, double tau) {
    if (w.kind() == WorldlineKind::UniformAcceleration)
        return accel_null_u(w.accel(), tau);
    const double t = w.coordinate_time(tau);
    return t - (w.base_position().x + w.base_velocity().x * t);
}
double wl_null_v(const Worldline& w, double tau) {
    if (w.kind() == WorldlineKind::UniformAcceleration)
        return accel_null_v(w.accel(), tau);
    const double t = w.coordinate_time(tau);
    return t + (w.base_position().x + w.base_velocity().x * t);
}

struct SideInfo {
    const DetectorConfig* d = nullptr;
    double lo = 0.0, hi = 0.0;  // proper-time support
    std::vector<double> kinks;  // interior switching kinks, proper time
    bool accel = false;
    double ginv = 1.0; // dtau/dt for the non-accelerated kinds
};

SideInfo make_side(const DetectorConfig& d, double cutoff) {
    SideInfo s;
    s.d = &d;
    const auto sup = d.switching.proper_support(cutoff);
    s.lo = sup.first;
    s.hi = sup.second;
    if (d.switching.kind() == SwitchingKind::ExponentialDecay) s.kinks.push_back(0.0);
    s.accel = d.worldline.kind() == WorldlineKind::UniformAcceleration;
    if (!s.accel) {
        const Vec3 v = d.worldline.base_velocity();
        s.ginv = std::sqrt(1.0 - v.dot(v));
    }
    return s;
}

struct Geometry {
    const Scenario* sc = nullptr;
    const Worldline* wa = nullptr;
    const Worldline* wb = nullptr;
    SideInfo A, B;
    bool pair_axial = false;
    double lambda2 = 0.0;
};

Geometry make_geometry(const Scenario& sc) {
    if (sc.alice.coupling < 0.0 || sc.bob.coupling < 0.0)
        throw std::invalid_argument("detector couplings must be nonnegative");
    if (sc.dimension < 1 || sc.dimension > 3)
        throw std::invalid_argument("dimension must be 1, 2, or 3");
    if (!(sc.tail_cutoff > 0.0) || sc.tail_cutoff >= 1.0)
        throw std::invalid_argument("tail_cutoff must lie in (0, 1)");

    Geometry g;
    g.sc = &sc;
    g.wa = &sc.alice.worldline;
    g.wb = &sc.bob.worldline;
    g.lambda2 = sc.alice.coupling * sc.bob.coupling;
    g.A = make_side(sc.alice, sc.tail_cutoff);
    g.B = make_side(sc.bob, sc.tail_cutoff);
    g.pair_axial = axial(*g.wa) && axial(*g.wb);

    if ((g.A.accel || g.B.accel) && !g.pair_axial)
        throw std::invalid_argument(
            "an accelerated worldline can only be paired with x-axis motion");

    if (sc.dimension == 1) {
        if (!on_axis(*g.wa) || !on_axis(*g.wb))
            throw std::invalid_argument("1+1 scenarios live on the x axis");
    } else if (sc.dimension == 2) {
        if (!planar(*g.wa) || !planar(*g.wb))
            throw std::invalid_argument("2+1 scenarios live in the x-y plane");
        for (const SideInfo* s : {&g.A, &g.B})
            if (s->accel) {
                const double reach =
                    s->d->worldline.accel() * std::max(std::abs(s->lo), std::abs(s->hi));
                if (reach > 140.0)
                    throw std::invalid_argument(
                        "2+1 hyperbolic windows beyond |a tau| ~ 140 are unsupported");
            }
    }
    return g;
}

// Sender proper time on the past light cone of the receiver event, or the
// receiver proper time on the future cone of the sender event.  Monotone
// nondecreasing in the input where defined.
std::optional<double> past_partner(const Geometry& g, double tau1) {
    if (g.pair_axial) return emission_proper_time(*g.wa, *g.wb, tau1);
    const double t1 = g.wb->coordinate_time(tau1);
    const auto te = retarded_emission_time(*g.wa, *g.wb, t1);
    if (!te) return std::nullopt;
    return g.wa->proper_time(*te);
}

std::optional<double> future_partner(const Geometry& g, double tau2) {
    if (g.pair_axial) return reception_proper_time(*g.wa, *g.wb, tau2);
    const double t2 = g.wa->coordinate_time(tau2);
    const auto tr = advanced_reception_time(*g.wa, *g.wb, t2);
    if (!tr) return std::nullopt;
    return g.wb->proper_time(*tr);
}

// pred is monotone false -> true on [lo, hi] with pred(lo) = false and
// pred(hi) = true; returns the switching point.
double cross_monotone(const std::function<bool(double)>& pred, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        if (hi - lo <= 1e-15 * (std::abs(lo) + std::abs(hi) + 1.0)) break;
        const double mid = 0.5 * (lo + hi);
        (pred(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

struct OuterDomain {
    double lo = 0.0, hi = 0.0;
    bool empty = true;
    std::vector<double> cuts;
};

// Outer window restricted to causal contact with the partner support.
// map(xi) is the partner proper time along the cone; bounded_above clips
// once the cone leaves the partner window (light-cone-delta support),
// otherwise only a refinement cut is recorded there (interior commutator
// support keeps contributing through the plateau).
OuterDomain trim_outer(double olo, double ohi,
                       const std::function<std::optional<double>(double)>& map,
                       double plo, double phi, bool bounded_above,
                       const std::vector<double>& own_cuts,
                       const std::vector<double>& partner_cuts) {
    OuterDomain dom;
    auto at_least = [&map](double thr) {
        return std::function<bool(double)>([&map, thr](double xi) {
            const auto p = map(xi);
            return p && *p >= thr;
        });
    };
    const auto started = at_least(plo);
    const auto done = at_least(phi);

    if (!started(ohi)) return dom; // cone never reaches the partner window
    double lo = started(olo) ? olo : cross_monotone(started, olo, ohi);
    double hi = ohi;
    if (bounded_above) {
        if (done(olo)) return dom; // all contact lies before this window
        if (done(ohi)) hi = cross_monotone(done, olo, ohi);
    }
    if (!(lo < hi)) return dom;
    dom.lo = lo;
    dom.hi = hi;
    dom.empty = false;
    for (double c : own_cuts)
        if (c > lo && c < hi) dom.cuts.push_back(c);
    if (!bounded_above && done(ohi) && !done(olo)) {
        const double plateau = cross_monotone(done, olo, ohi);
        if (plateau > lo && plateau < hi) dom.cuts.push_back(plateau);
    }
    for (double k : partner_cuts) {
        const auto reach = at_least(k);
        if (reach(ohi) && !reach(olo)) {
            const double img = cross_monotone(reach, olo, ohi);
            if (img > lo && img < hi) dom.cuts.push_back(img);
        }
    }
    return dom;
}

struct EngineResult {
    cplx value{};
    double err = 0.0;
};

// Weight of the side the light-cone delta was reduced over, in null
// coordinates:  eta / (2 pi (du D + dv / D))  with D the instantaneous
// right-moving Doppler factor of that side at its cone parameter.  This is
// chi * |d(cone defect)/d t|^{-1} / (4 pi distance) with the distance and
// aberration factors combined cancellation-free, and it stays finite
// arbitrarily far along a hyperbola (log-space evaluation there).
double cone_reduced_weight(const SideInfo& s, double tau, double du, double dv) {
    const double eta = s.d->switching.eta(tau);
    if (eta == 0.0) return 0.0;
    if (s.accel) {
        const double a = s.d->worldline.accel();
        const double lt1 = (dv > 0.0) ? std::log(dv) - a * tau : -kInf;
        const double lt2 = (du > 0.0) ? std::log(du) + a * tau : -kInf;
        if (lt1 == -kInf && lt2 == -kInf) return 0.0;
        const double hi = std::max(lt1, lt2);
        const double lo = std::min(lt1, lt2);
        const double lse = (lo == -kInf) ? hi : hi + std::log1p(std::exp(lo - hi));
        return eta * std::exp(-lse) / (2.0 * kPi);
    }
    const double vx = s.d->worldline.base_velocity().x;
    const double zeta = std::sqrt((1.0 + vx) / (1.0 - vx));
    const double denom = du * zeta + dv / zeta;
    if (!(denom > 0.0) || !std::isfinite(denom)) return 0.0;
    return eta / (2.0 * kPi * denom);
}

EngineResult integrate_outer(const std::function<Sample(double)>& f,
                             const OuterDomain& dom,
                             const std::function<double(double)>& phase,
                             const QuadratureOptions& opt) {
    const QuadratureResult r = integrate(f, dom.lo, dom.hi, dom.cuts, phase, opt);
    return {r.value, r.error};
}

// 3+1: the commutator is supported on the cone itself; one side of the
// double integral collapses against the delta.  The outer variable is the
// proper time of the accelerated sender when the receiver is inert (its
// exponential tails parametrise smoothly that way); otherwise the
// receiver's proper time.
EngineResult n3_engine(const Geometry& g, const KernelSpec& ks,
                       const QuadratureOptions& opt) {
    const bool sender_outer = g.A.accel && !g.B.accel;
    const SideInfo& O = sender_outer ? g.A : g.B;
    const SideInfo& P = sender_outer ? g.B : g.A;
    const Worldline& wp = sender_outer ? *g.wb : *g.wa;
    const double co = sender_outer ? ks.coef_a : ks.coef_b;
    const double cp = sender_outer ? ks.coef_b : ks.coef_a;

    auto map = [&g, sender_outer](double xi) {
        return sender_outer ? future_partner(g, xi) : past_partner(g, xi);
    };
    const OuterDomain dom =
        trim_outer(O.lo, O.hi, map, P.lo, P.hi, true, O.kinks, P.kinks);
    if (dom.empty) return {};

    auto f = [&](double xi) -> Sample {
        const auto pt = map(xi);
        if (!pt || *pt < P.lo || *pt > P.hi) return {};
        const double tp = *pt;
        const double eta_o = O.d->switching.eta(xi);
        if (eta_o == 0.0) return {};

        double red;
        if (g.pair_axial) {
            // receiver-minus-sender null separations
            const double tau_r = sender_outer ? tp : xi;
            const double tau_s = sender_outer ? xi : tp;
            const double du = wl_null_u(*g.wb, tau_r) - wl_null_u(*g.wa, tau_s);
            const double dv = wl_null_v(*g.wb, tau_r) - wl_null_v(*g.wa, tau_s);
            red = cone_reduced_weight(P, tp, du, dv);
        } else {
            // both inert and moderate: coordinate geometry directly
            const double t1 = g.wb->coordinate_time(sender_outer ? tp : xi);
            const double te = g.wa->coordinate_time(sender_outer ? xi : tp);
            const Vec3 dxv = g.wb->position(t1) - g.wa->position(te);
            const double d = dxv.norm();
            if (!(d > 0.0)) return {};
            const Vec3 vp = wp.base_velocity();
            // d * (1 - n.v) of the reduced side, positive by subluminality
            const double jden = d - dxv.dot(vp);
            if (!(jden > 0.0)) return {};
            red = P.d->switching.eta(tp) * P.ginv / (4.0 * kPi * jden);
        }
        if (red == 0.0 || !std::isfinite(red)) return {};
        const double ph = co * xi + cp * tp;
        return {eta_o * red * std::exp(kI * ph), 0.0};
    };
    auto phase = [&](double xi) {
        const auto pt = map(xi);
        const double tp = pt ? std::clamp(*pt, P.lo, P.hi) : P.lo;
        return std::abs(co) * xi + std::abs(cp) * tp;
    };
    return integrate_outer(f, dom, phase, opt);
}

// 1+1: constant commutator inside the cone.  The inner integral is a
// running prefix over the sender window, accumulated once and cached on a
// sorted ladder; the outer integral runs over the receiver's proper time.
EngineResult n1_engine(const Geometry& g, const KernelSpec& ks,
                       const QuadratureOptions& opt) {
    auto map = [&g](double tau1) { return past_partner(g, tau1); };
    const OuterDomain dom =
        trim_outer(g.B.lo, g.B.hi, map, g.A.lo, g.A.hi, false, g.B.kinks, g.A.kinks);
    if (dom.empty) return {};

    auto cache = std::make_shared<std::map<double, std::pair<cplx, double>>>();
    cache->emplace(g.A.lo, std::make_pair(cplx{}, 0.0));
    const double min_gap = (g.A.hi - g.A.lo) / 262144.0;

    auto prefix = [&, cache](double tau_up) -> std::pair<cplx, double> {
        const double tc = std::min(tau_up, g.A.hi);
        auto it = std::prev(cache->upper_bound(tc));
        if (it->first == tc) return it->second;
        std::vector<double> cuts;
        for (double k : g.A.kinks)
            if (k > it->first && k < tc) cuts.push_back(k);
        cplx segv;
        double sege;
        try {
            const auto r = integrate(
                [&](double tau) -> Sample {
                    return {g.A.d->switching.eta(tau) * std::exp(kI * ks.coef_a * tau), 0.0};
                },
                it->first, tc, cuts,
                [&](double tau) { return std::abs(ks.coef_a) * tau; }, opt);
            segv = r.value;
            sege = r.error;
        } catch (const AccuracyError& e) {
            segv = e.estimate();
            sege = e.error_bound();
        }
        const auto val =
            std::make_pair(it->second.first + segv, it->second.second + sege);
        if (tc - it->first > min_gap) cache->emplace(tc, val);
        return val;
    };

    auto f = [&](double tau1) -> Sample {
        const double eta_b = g.B.d->switching.eta(tau1);
        if (eta_b == 0.0) return {};
        const auto pt = map(tau1);
        if (!pt || *pt <= g.A.lo) return {};
        const auto [gv, ge] = prefix(*pt);
        return {eta_b * std::exp(kI * ks.coef_b * tau1) * gv, eta_b * ge};
    };
    auto phase = [&](double tau1) {
        const auto pt = map(tau1);
        const double tp = pt ? std::clamp(*pt, g.A.lo, g.A.hi) : g.A.lo;
        return std::abs(ks.coef_b) * tau1 + std::abs(ks.coef_a) * tp;
    };
    return integrate_outer(f, dom, phase, opt);
}

// 2+1: inverse-square-root commutator inside the cone.  The inner integral
// runs in coordinate time over the sender window up to the cone entry and
// is regularised there by u = sqrt(t_cone - t2); the integrand is then
// smooth in u^2 across u = 0.
EngineResult n2_engine(const Geometry& g, const KernelSpec& ks,
                       const QuadratureOptions& opt) {
    auto map = [&g](double tau1) { return past_partner(g, tau1); };
    const OuterDomain dom =
        trim_outer(g.B.lo, g.B.hi, map, g.A.lo, g.A.hi, false, g.B.kinks, g.A.kinks);
    if (dom.empty) return {};

    const double ta_lo = g.wa->coordinate_time(g.A.lo);
    const double ta_hi = g.wa->coordinate_time(g.A.hi);
    std::vector<double> akinks_t;
    for (double k : g.A.kinks) akinks_t.push_back(g.wa->coordinate_time(k));

    auto f = [&](double tau1) -> Sample {
        const double eta_b = g.B.d->switching.eta(tau1);
        if (eta_b == 0.0) return {};
        const auto pt = map(tau1);
        if (!pt) return {};
        const double taue = *pt;
        const double tcone = g.wa->coordinate_time(taue);
        const double up_t = std::min(tcone, ta_hi);
        if (up_t <= ta_lo) return {};

        const double t1 = g.wb->coordinate_time(tau1);
        const Vec3 x1 = g.wb->position(t1);
        const Vec3 dx_cone = x1 - g.wa->position(tcone);
        const double dcone = t1 - tcone; // equals the distance on the cone
        // -dQ/dt2 at the cone entry, Q = (t1-t2)^2 - |x1 - xA(t2)|^2
        const double slope = 2.0 * (dcone - dx_cone.dot(g.wa->velocity(tcone)));

        const double span = tcone - ta_lo;
        const double u_lo = std::sqrt(std::max(0.0, tcone - up_t));
        const double u_hi = std::sqrt(span);
        if (!(u_hi > u_lo)) return {};

        auto inner = [&](double u) -> Sample {
            const double t2 = tcone - u * u;
            const double w = chi(g.A.d->switching, *g.wa, t2);
            if (w == 0.0) return {};
            double q;
            if (u * u < 1e-8 * span) {
                q = slope * (u * u);
            } else {
                const double dt = t1 - t2;
                const Vec3 dd = x1 - g.wa->position(t2);
                q = dt * dt - dd.dot(dd);
                if (q <= 0.0) q = slope * (u * u); // cone-boundary rounding
            }
            const double ph = ks.coef_a * g.wa->proper_time(t2);
            return {2.0 * u * w / std::sqrt(q) * std::exp(kI * ph), 0.0};
        };
        std::vector<double> ucuts;
        for (double tk : akinks_t)
            if (tk > ta_lo && tk < up_t) ucuts.push_back(std::sqrt(tcone - tk));
        auto iphase = [&](double u) {
            return std::abs(ks.coef_a) * (taue - g.wa->proper_time(tcone - u * u));
        };
        cplx inner_v;
        double inner_e;
        try {
            const auto r = integrate(inner, u_lo, u_hi, ucuts, iphase, opt);
            inner_v = r.value;
            inner_e = r.error;
        } catch (const AccuracyError& e) {
            inner_v = e.estimate();
            inner_e = e.error_bound();
        }
        return {eta_b * std::exp(kI * ks.coef_b * tau1) * inner_v, eta_b * inner_e};
    };
    auto phase = [&](double tau1) {
        const auto pt = map(tau1);
        const double tp = pt ? std::clamp(*pt, g.A.lo, g.A.hi) : g.A.lo;
        return std::abs(ks.coef_b) * tau1 + std::abs(ks.coef_a) * tp;
    };
    return integrate_outer(f, dom, phase, opt);
}

EngineResult kernel_value(const Geometry& g, const KernelSpec& ks,
                          const QuadratureOptions& opt) {
    const int dim = g.sc->dimension;
    const double scale = (dim == 3) ? 1.0 : (dim == 1 ? 0.5 : 1.0 / (2.0 * kPi));
    const cplx pref = kI * ks.sign * g.lambda2 * scale;
    try {
        EngineResult r;
        if (dim == 3)
            r = n3_engine(g, ks, opt);
        else if (dim == 1)
            r = n1_engine(g, ks, opt);
        else
            r = n2_engine(g, ks, opt);
        return {pref * r.value, std::abs(pref) * r.err};
    } catch (const AccuracyError& e) {
        throw AccuracyError(e.what(), pref * e.estimate(),
                            std::abs(pref) * e.error_bound());
    }
}

} // namespace

double signal_strength(const SignalCoefficients& sc) {
    return std::abs(sc.c2) + std::abs(sc.d2);
}

SignalCoefficients compute_c2_d2(const Scenario& sc, const QuadratureOptions& opt) {
    const Geometry g = make_geometry(sc);
    SignalCoefficients out;
    if (g.lambda2 == 0.0) return out;
    const double oa = sc.alice.gap, ob = sc.bob.gap;
    const EngineResult c2 = kernel_value(g, {ob, -oa, +1.0}, opt);
    out.c2 = c2.value;
    out.err_c2 = c2.err;
    // d2 from the same kernel with the receiver gap negated
    const EngineResult cneg = kernel_value(g, {-ob, -oa, +1.0}, opt);
    out.d2 = -cneg.value;
    out.err_d2 = cneg.err;
    return out;
}

std::complex<double> compute_d2_direct(const Scenario& sc, const QuadratureOptions& opt,
                                       double* err_out) {
    const Geometry g = make_geometry(sc);
    if (g.lambda2 == 0.0) {
        if (err_out) *err_out = 0.0;
        return {};
    }
    const EngineResult r =
        kernel_value(g, {-sc.bob.gap, -sc.alice.gap, -1.0}, opt);
    if (err_out) *err_out = r.err;
    return r.value;
}

MirrorReport verify_mirror_symmetry(const Scenario& sc, const QuadratureOptions& opt) {
    MirrorReport rep;
    rep.original = compute_c2_d2(sc, opt);
    rep.mirrored = compute_c2_d2(mirror(sc), opt);
    rep.c2_diff = std::abs(rep.mirrored.c2 - rep.original.c2);
    rep.d2_diff = std::abs(rep.mirrored.d2 + std::conj(rep.original.d2));
    const double floor_c2 =
        10.0 * std::max(opt.abs_tol, opt.rel_tol * std::abs(rep.original.c2));
    const double floor_d2 =
        10.0 * std::max(opt.abs_tol, opt.rel_tol * std::abs(rep.original.d2));
    const double allow_c2 = rep.original.err_c2 + rep.mirrored.err_c2 + floor_c2;
    const double allow_d2 = rep.original.err_d2 + rep.mirrored.err_d2 + floor_d2;
    rep.allowed = std::max(allow_c2, allow_d2);
    rep.pass = rep.c2_diff <= allow_c2 && rep.d2_diff <= allow_d2;
    return rep;
}

namespace {

// Window autocorrelation O(u) = Int eta(w + u/2) eta(w - u/2) dw and its
// doubly-rotating counterpart M(u) = Int e^{-2 i Omega w} eta eta dw, both
// in closed form per switching family (checked against direct quadrature
// in the tests).
struct OverlapFns {
    std::function<double(double)> auto_corr;
    std::function<cplx(double)> rotating;
    double half_range = 0.0;
};

OverlapFns make_overlaps(const SwitchingProfile& p, double omega) {
    const auto sup = p.proper_support(1e-14);
    const double range = sup.second - sup.first;
    if (p.kind() == SwitchingKind::Gaussian) {
        const double s = p.width();
        const double tc = p.center();
        const cplx mfac = std::exp(cplx(-omega * omega * s * s, -2.0 * omega * tc));
        auto oc = [s](double u) {
            return s * std::sqrt(kPi) * std::exp(-u * u / (4.0 * s * s));
        };
        return {oc, [oc, mfac](double u) -> cplx { return mfac * oc(u); }, range};
    }
    const double sg = p.width();
    auto oc = [sg](double u) {
        const double x = std::abs(u);
        return (sg + x) * std::exp(-x / sg);
    };
    auto rot = [sg, omega](double u) -> cplx {
        const double x = std::abs(u);
        if (omega == 0.0) return (sg + x) * std::exp(-x / sg);
        const double den = 1.0 + omega * omega * sg * sg;
        const double val = std::sin(omega * x) / omega +
                           sg * (std::cos(omega * x) - omega * sg * std::sin(omega * x)) / den;
        return std::exp(-x / sg) * val;
    };
    return {oc, rot, range};
}

// Vacuum two-point function along the worldline as a function of the
// proper-time split, evaluated at minus the split and regulated:  the
// kernels below receive u = tau1 - tau2 and this is W(tau2 - tau1).
cplx wightman_line(double u, double eps, double a) {
    const cplx z(u, eps);
    if (a == 0.0) return -1.0 / (4.0 * kPi * kPi * z * z);
    const cplx sh = std::sinh(0.5 * a * z);
    return -(a * a) / (16.0 * kPi * kPi * sh * sh);
}

struct RawSingle {
    cplx p, q, r, s;
    double err = 0.0;
};

RawSingle raw_single(const DetectorConfig& det, const OverlapFns& fns, double eps,
                     const QuadratureOptions& opt) {
    const double omega = det.gap;
    const double a = det.worldline.kind() == WorldlineKind::UniformAcceleration
                         ? det.worldline.accel()
                         : 0.0;
    const double range = fns.half_range;
    std::vector<double> cuts{0.0};
    for (double x = eps; x < 0.5 * range; x *= 2.0) {
        cuts.push_back(x);
        cuts.push_back(-x);
    }
    auto phase = [omega](double u) { return std::abs(omega) * u; };
    RawSingle out;
    auto run = [&](const std::function<cplx(double)>& fn, double lo, double hi) {
        std::vector<double> cc;
        for (double c : cuts)
            if (c > lo && c < hi) cc.push_back(c);
        try {
            const auto r = integrate(
                [&fn](double u) -> Sample { return {fn(u), 0.0}; }, lo, hi, cc, phase, opt);
            out.err += r.error;
            return r.value;
        } catch (const AccuracyError& e) {
            out.err += e.error_bound();
            return e.estimate();
        }
    };
    out.p = run(
        [&](double u) {
            return std::exp(kI * omega * u) * wightman_line(u, eps, a) * fns.auto_corr(u);
        },
        -range, range);
    out.q = -run(
        [&](double u) {
            return std::exp(-kI * omega * u) * wightman_line(u, eps, a) * fns.auto_corr(u);
        },
        -range, range);
    out.r = -run(
        [&](double u) {
            return std::exp(kI * omega * u) * 2.0 * std::real(wightman_line(u, eps, a)) *
                   fns.auto_corr(u);
        },
        0.0, range);
    out.s = run([&](double u) { return wightman_line(u, eps, a) * fns.rotating(u); },
                -range, range);
    return out;
}

} // namespace

SingleDetectorCoefficients compute_single_detector(const DetectorConfig& det,
                                                   const QuadratureOptions& opt,
                                                   double eps) {
    if (det.switching.kind() == SwitchingKind::Sudden)
        throw std::invalid_argument(
            "single-detector coefficients need a smooth switching profile");
    if (det.coupling < 0.0)
        throw std::invalid_argument("detector coupling must be nonnegative");

    SingleDetectorCoefficients out;
    const double l2 = det.coupling * det.coupling;
    if (l2 == 0.0) return out;
    if (eps <= 0.0) eps = 1e-2 * det.switching.width();

    const OverlapFns fns = make_overlaps(det.switching, det.gap);
    const RawSingle r1 = raw_single(det, fns, eps, opt);
    const RawSingle r2 = raw_single(det, fns, 0.5 * eps, opt);
    const RawSingle r3 = raw_single(det, fns, 0.25 * eps, opt);

    double stab = 0.0;
    auto extrap = [&stab](cplx f1, cplx f2, cplx f3) {
        const cplx a1 = 2.0 * f2 - f1;
        const cplx a2 = 2.0 * f3 - f2;
        stab = std::max(stab, std::abs(a2 - a1));
        return (4.0 * a2 - a1) / 3.0;
    };
    out.p2 = l2 * extrap(r1.p, r2.p, r3.p);
    out.q2 = l2 * extrap(r1.q, r2.q, r3.q);
    out.r2 = l2 * extrap(r1.r, r2.r, r3.r);
    out.s2 = l2 * extrap(r1.s, r2.s, r3.s);
    out.err = l2 * (stab + std::max({r1.err, r2.err, r3.err}));
    return out;
}

} // namespace udw

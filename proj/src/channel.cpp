#include "udw/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace udw {

namespace {

Mat3 rotation_z(double cs, double sn, bool sin_top_right) {
    // sin_top_right selects between the two Z-rotation layouts used by the
    // factorisation (they are transposes of each other).
    Mat3 r{};
    r[0][0] = cs;
    r[1][1] = cs;
    r[2][2] = 1.0;
    if (sin_top_right) {
        r[0][1] = sn;
        r[1][0] = -sn;
    } else {
        r[0][1] = -sn;
        r[1][0] = sn;
    }
    return r;
}

void require_signal(const SignalCoefficients& sc) {
    if (std::abs(sc.c2) == 0.0 && std::abs(sc.d2) == 0.0) {
        throw std::invalid_argument(
            "channel: c2 and d2 both vanish, no signal direction to align to");
    }
}

double phase_sum_half(const SignalCoefficients& sc) {
    return 0.5 * (std::arg(sc.c2) + std::arg(sc.d2));
}

double phase_diff_half(const SignalCoefficients& sc) {
    return 0.5 * (std::arg(sc.c2) - std::arg(sc.d2));
}

} // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

bool BlochVector::is_pure(double tol) const { return std::abs(norm() - 1.0) <= tol; }

BlochVector operator+(const BlochVector& a, const BlochVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

BlochVector operator-(const BlochVector& a, const BlochVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

BlochVector operator*(double s, const BlochVector& a) { return {s * a.x, s * a.y, s * a.z}; }

BlochVector operator-(const BlochVector& a) { return {-a.x, -a.y, -a.z}; }

DetectorState DetectorState::ground_state() { return {0.0, 1.0, {0.0, 0.0}}; }

DetectorState DetectorState::excited_state() { return {1.0, 0.0, {0.0, 0.0}}; }

DetectorState DetectorState::from_bloch(const BlochVector& r) {
    DetectorState st;
    st.excited = 0.5 * (1.0 + r.z);
    st.ground = 0.5 * (1.0 - r.z);
    st.coherence = 0.5 * std::complex<double>(r.x, -r.y);
    st.validate();
    return st;
}

BlochVector DetectorState::bloch() const {
    return {2.0 * coherence.real(), -2.0 * coherence.imag(), excited - ground};
}

bool DetectorState::is_pure(double tol) const { return bloch().is_pure(tol); }

void DetectorState::validate() const {
    constexpr double tol = 1e-12;
    if (!(excited >= -tol && ground >= -tol)) {
        throw std::invalid_argument("detector state: negative population");
    }
    if (std::abs(excited + ground - 1.0) > tol) {
        throw std::invalid_argument("detector state: populations do not sum to 1");
    }
    const double bound = std::sqrt(std::max(0.0, excited * ground));
    if (std::abs(coherence) > bound + tol) {
        throw std::invalid_argument("detector state: coherence exceeds sqrt(excited * ground)");
    }
}

BlochVector ChannelMap::apply(const BlochVector& r) const {
    const std::array<double, 3> in{r.x, r.y, r.z};
    std::array<double, 3> out{v[0], v[1], v[2]};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out[i] += m[i][j] * in[j];
        }
    }
    return {out[0], out[1], out[2]};
}

ChannelMap leading_channel_matrix(const SignalCoefficients& sc, const DetectorState& bob) {
    bob.validate();
    const std::complex<double> c = sc.c2;
    const std::complex<double> d = sc.d2;
    const double gap_pop = bob.ground - bob.excited;
    const std::complex<double> delta = bob.coherence;

    ChannelMap map;
    map.m[0][0] = gap_pop * (c + d).real();
    map.m[0][1] = gap_pop * (c + d).imag();
    map.m[1][0] = gap_pop * (-c + d).imag();
    map.m[1][1] = gap_pop * (c - d).real();
    map.m[2][0] = 2.0 * (delta * (std::conj(c) + d)).real();
    map.m[2][1] = 2.0 * (std::conj(delta) * (c - std::conj(d))).imag();
    // Third column stays zero: the sender's population difference cannot move
    // the receiver at this order.  The affine part is higher order too.
    return map;
}

ChannelSvd svd_channel(const ChannelMap& map, std::complex<double> c, std::complex<double> d) {
    const double phi_c = std::arg(c);
    const double mid = 0.5 * (phi_c + std::arg(d));

    ChannelSvd out;
    out.u = rotation_z(std::cos(phi_c), std::sin(phi_c), true);
    out.o = rotation_z(std::cos(mid), std::sin(mid), false);
    out.scale = {std::abs(c) + std::abs(d), std::abs(c) - std::abs(d), map.m[2][2]};
    return out;
}

std::pair<BlochVector, BlochVector> optimal_alice_states(const SignalCoefficients& sc) {
    require_signal(sc);
    const double a = phase_sum_half(sc);
    const BlochVector r{std::cos(a), std::sin(a), 0.0};
    return {r, -r};
}

DetectorState optimal_bob_state(const SignalCoefficients& sc, double ground_population) {
    require_signal(sc);
    if (!(ground_population >= 0.0 && ground_population <= 1.0)) {
        throw std::invalid_argument("optimal_bob_state: ground population outside [0, 1]");
    }
    const double kappa = ground_population;
    const double phi = 1.0 - kappa;
    const double mag = std::sqrt(kappa * phi);
    const double b = phase_diff_half(sc);
    return {phi, kappa, mag * std::complex<double>(std::cos(b), std::sin(b))};
}

double trace_distance(const BlochVector& r1, const BlochVector& r2) {
    return 0.5 * (r1 - r2).norm();
}

CapacityReport capacities(const SignalCoefficients& sc, std::optional<double> p2) {
    const double dist = signal_strength(sc);
    CapacityReport rep;
    rep.trace_distance = dist;
    rep.p_bit = 0.5 + 0.5 * dist;
    rep.p_bit_alt = 0.5 + dist;
    rep.shannon = 2.0 / std::log(2.0) * dist * dist;
    rep.leading_order_valid = dist < 0.1;
    if (p2) {
        if (*p2 > 0.0 && *p2 < 1.0) {
            rep.holevo = -std::log(*p2) * dist * dist / (4.0 * std::log(2.0));
        } else {
            rep.warning = "holevo omitted: excitation probability outside (0, 1)";
        }
    }
    return rep;
}

std::pair<BlochVector, BlochVector> measurement_basis(const SignalCoefficients& sc,
                                                      const DetectorState& bob) {
    require_signal(sc);
    bob.validate();
    const double gap_pop = bob.ground - bob.excited;
    const double mag = std::abs(bob.coherence);
    const double b = phase_diff_half(sc);
    BlochVector dir{gap_pop * std::cos(b), -gap_pop * std::sin(b), 2.0 * mag};
    const double n = dir.norm();
    if (n < 1e-15) {
        throw std::invalid_argument("measurement_basis: maximally mixed receiver state");
    }
    dir = (1.0 / n) * dir;
    return {dir, -dir};
}

} // namespace udw

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "udw/channel.hpp"
#include "udw/signal.hpp"

using namespace udw;
using cdouble = std::complex<double>;
using namespace std::complex_literals;

namespace {

constexpr double pi = std::numbers::pi;

SignalCoefficients coeffs(cdouble c2, cdouble d2) {
    SignalCoefficients sc;
    sc.c2 = c2;
    sc.d2 = d2;
    return sc;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat3 mat_transpose(const Mat3& a) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

Mat3 mat_diag(const std::array<double, 3>& d) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i) r[i][i] = d[i];
    return r;
}

double mat_max_abs_diff(const Mat3& a, const Mat3& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

// Closed-form singular values of the upper 2x2 block, independent of the
// factorisation under test: s+- = (sqrt(p + 2|q|) +- sqrt(p - 2|q|)) / 2 with
// p the squared Frobenius norm and q the determinant.
std::pair<double, double> block_singular_values(const Mat3& m) {
    const double a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    const double p = a * a + b * b + c * c + d * d;
    const double q = std::abs(a * d - b * c);
    const double hi = std::sqrt(std::max(0.0, p + 2.0 * q));
    const double lo = std::sqrt(std::max(0.0, p - 2.0 * q));
    return {0.5 * (hi + lo), 0.5 * (hi - lo)};
}

// Output separation reached by the antipodal equatorial pair at angle a.
double equatorial_distance(const ChannelMap& map, double a) {
    const BlochVector in{std::cos(a), std::sin(a), 0.0};
    const BlochVector plus = map.apply(in);
    const BlochVector minus = map.apply(-in);
    return trace_distance(plus, minus);
}

// Brute-force scan over equatorial senders in one-degree steps.
std::pair<double, double> grid_max_distance(const ChannelMap& map) {
    double best = -1.0;
    double best_angle = 0.0;
    for (int deg = 0; deg < 360; ++deg) {
        const double a = deg * pi / 180.0;
        const double d = equatorial_distance(map, a);
        if (d > best) {
            best = d;
            best_angle = a;
        }
    }
    return {best, best_angle};
}

double h2_bits(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

// Exact capacity of the two-input two-output channel with flip probabilities
// a = P(1|0) and b = P(0|1), by ternary search on the concave mutual
// information over the input prior.  Serves as the independent oracle for the
// small-signal expansion reported by capacities().
double exact_binary_channel_capacity(double a, double b) {
    auto mutual = [&](double w) {
        const double py1 = (1.0 - w) * a + w * (1.0 - b);
        return h2_bits(py1) - ((1.0 - w) * h2_bits(a) + w * h2_bits(b));
    };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (mutual(m1) < mutual(m2))
            lo = m1;
        else
            hi = m2;
    }
    return mutual(0.5 * (lo + hi));
}

BlochVector rotate_z(const BlochVector& r, double a) {
    return {std::cos(a) * r.x - std::sin(a) * r.y, std::sin(a) * r.x + std::cos(a) * r.y, r.z};
}

} // namespace

TEST_CASE("channel matrix structure and ground-state reduction") {
    const cdouble c2 = 0.031 * std::exp(0.83i);
    const cdouble d2 = 0.017 * std::exp(-1.91i);
    const auto sc = coeffs(c2, d2);

    SUBCASE("ground-state receiver reproduces the block form") {
        const ChannelMap map = leading_channel_matrix(sc, DetectorState::ground_state());
        CHECK(map.m[0][0] == (c2 + d2).real());
        CHECK(map.m[0][1] == (c2 + d2).imag());
        CHECK(map.m[1][0] == (-c2 + d2).imag());
        CHECK(map.m[1][1] == (c2 - d2).real());
        for (int i = 0; i < 3; ++i) {
            CHECK(map.m[i][2] == 0.0);
            CHECK(map.m[2][i] == 0.0);
            CHECK(map.v[i] == 0.0);
        }
    }

    SUBCASE("zero coefficients give the zero map") {
        const ChannelMap map = leading_channel_matrix(coeffs(0.0, 0.0), DetectorState::ground_state());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(map.m[i][j] == 0.0);
    }

    SUBCASE("third column vanishes for any receiver state") {
        std::mt19937 rng(2026u);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_real_distribution<double> angle(-pi, pi);
        for (int k = 0; k < 12; ++k) {
            const double kappa = unit(rng);
            const double mag = std::sqrt(kappa * (1.0 - kappa)) * unit(rng);
            DetectorState bob{1.0 - kappa, kappa, mag * std::exp(cdouble(0.0, angle(rng)))};
            const ChannelMap map = leading_channel_matrix(sc, bob);
            for (int i = 0; i < 3; ++i) CHECK(map.m[i][2] == 0.0);
        }
    }

    SUBCASE("the Bloch ball contracts by at least the signal strength") {
        const ChannelMap map = leading_channel_matrix(sc, DetectorState::ground_state());
        const double strength = signal_strength(sc);
        std::mt19937 rng(7u);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int k = 0; k < 40; ++k) {
            BlochVector r{gauss(rng), gauss(rng), gauss(rng)};
            r = (1.0 / r.norm()) * r;
            CHECK(map.apply(r).norm() <= strength * (1.0 + 1e-12));
        }
    }

    SUBCASE("apply adds the affine offset") {
        ChannelMap map;
        map.m[0][0] = 2.0;
        map.v = {0.1, -0.2, 0.3};
        const BlochVector out = map.apply({1.0, 1.0, 1.0});
        CHECK(out.x == doctest::Approx(2.1).epsilon(1e-15));
        CHECK(out.y == doctest::Approx(-0.2).epsilon(1e-15));
        CHECK(out.z == doctest::Approx(0.3).epsilon(1e-15));
    }
}

TEST_CASE("rotation factorisation rebuilds the channel matrix") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> mag(0.001, 0.09);
    std::uniform_real_distribution<double> angle(-pi, pi);

    SUBCASE("real positive c with zero d gives identity rotations") {
        const auto sc = coeffs(0.1, 0.0);
        const ChannelMap map = leading_channel_matrix(sc, DetectorState::ground_state());
        const ChannelSvd f = svd_channel(map, sc.c2, sc.d2);
        Mat3 eye{};
        eye[0][0] = eye[1][1] = eye[2][2] = 1.0;
        CHECK(mat_max_abs_diff(f.u, eye) == 0.0);
        CHECK(mat_max_abs_diff(f.o, eye) == 0.0);
        CHECK(f.scale[0] == doctest::Approx(0.1).epsilon(1e-15));
        CHECK(f.scale[1] == doctest::Approx(0.1).epsilon(1e-15));
        CHECK(f.scale[2] == 0.0);
    }

    SUBCASE("equal imaginary coefficients read out quarter-turn angles") {
        const auto sc = coeffs(0.1i, 0.1i);
        const ChannelMap map = leading_channel_matrix(sc, DetectorState::ground_state());
        const ChannelSvd f = svd_channel(map, sc.c2, sc.d2);
        // u rotates by arg(c) = pi/2, o by the phase mean, also pi/2.
        CHECK(std::abs(f.u[0][0]) < 1e-15);
        CHECK(f.u[0][1] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(f.o[0][0]) < 1e-15);
        CHECK(f.o[1][0] == doctest::Approx(1.0).epsilon(1e-15));
    }

    SUBCASE("u o diag o^T reproduces the matrix to machine precision") {
        for (int k = 0; k < 12; ++k) {
            const auto sc = coeffs(mag(rng) * std::exp(cdouble(0.0, angle(rng))),
                                   mag(rng) * std::exp(cdouble(0.0, angle(rng))));
            ChannelMap map = leading_channel_matrix(sc, DetectorState::ground_state());
            // A nonzero ZZ entry must ride through the factorisation untouched.
            map.m[2][2] = 0.25;
            const ChannelSvd f = svd_channel(map, sc.c2, sc.d2);
            const Mat3 rebuilt =
                mat_mul(mat_mul(f.u, f.o), mat_mul(mat_diag(f.scale), mat_transpose(f.o)));
            CHECK(mat_max_abs_diff(rebuilt, map.m) < 1e-12);

            const Mat3 utu = mat_mul(mat_transpose(f.u), f.u);
            const Mat3 oto = mat_mul(mat_transpose(f.o), f.o);
            Mat3 eye{};
            eye[0][0] = eye[1][1] = eye[2][2] = 1.0;
            CHECK(mat_max_abs_diff(utu, eye) < 1e-15);
            CHECK(mat_max_abs_diff(oto, eye) < 1e-15);
        }
    }

    SUBCASE("scales match an independent singular value computation") {
        for (int k = 0; k < 12; ++k) {
            const cdouble c = mag(rng) * std::exp(cdouble(0.0, angle(rng)));
            const cdouble d = mag(rng) * std::exp(cdouble(0.0, angle(rng)));
            const ChannelMap map = leading_channel_matrix(coeffs(c, d), DetectorState::ground_state());
            const auto [s_hi, s_lo] = block_singular_values(map.m);
            CHECK(std::abs(s_hi - (std::abs(c) + std::abs(d))) < 1e-13);
            CHECK(std::abs(s_lo - std::abs(std::abs(c) - std::abs(d))) < 1e-13);
            const ChannelSvd f = svd_channel(map, c, d);
            CHECK(f.scale[0] == doctest::Approx(s_hi).epsilon(1e-12));
            CHECK(std::abs(std::abs(f.scale[1]) - s_lo) < 1e-13);
        }
    }
}

TEST_CASE("optimal sender states") {
    SUBCASE("zero phases point along +-X") {
        const auto [p, m] = optimal_alice_states(coeffs(0.05, 0.02));
        CHECK(p.x == 1.0);
        CHECK(p.y == 0.0);
        CHECK(p.z == 0.0);
        CHECK(m.x == -1.0);
    }

    SUBCASE("antipodal unit pair for generic coefficients") {
        std::mt19937 rng(3u);
        std::uniform_real_distribution<double> angle(-pi, pi);
        for (int k = 0; k < 10; ++k) {
            const auto sc = coeffs(0.03 * std::exp(cdouble(0.0, angle(rng))),
                                   0.011 * std::exp(cdouble(0.0, angle(rng))));
            const auto [p, m] = optimal_alice_states(sc);
            CHECK(p.is_pure());
            CHECK((p + m).norm() < 1e-15);
            CHECK(p.z == 0.0);
        }
    }

    SUBCASE("brute-force grid confirms the argmax") {
        const auto sc = coeffs(0.03 * std::exp(0.7i), 0.01 * std::exp(-0.4i));
        const ChannelMap map = leading_channel_matrix(sc, DetectorState::ground_state());
        const auto [p, m] = optimal_alice_states(sc);
        const double analytic = trace_distance(map.apply(p), map.apply(m));
        CHECK(std::abs(analytic - signal_strength(sc)) < 1e-15);

        const auto [grid_best, grid_angle] = grid_max_distance(map);
        CHECK(grid_best <= analytic + 1e-12);
        // The grid sits at most half a degree from the optimum, so it can fall
        // short by up to (1 - cos(0.5 deg)) * strength ~ 1.5e-6.
        CHECK(analytic - grid_best < 5e-6);
        // The returned state sits at the phase mean 0.15; the grid argmax must
        // land within one cell of it (the pair is only defined modulo pi).
        const double expected = 0.15;
        double delta = std::fmod(std::abs(grid_angle - expected), pi);
        delta = std::min(delta, pi - delta);
        CHECK(delta <= pi / 180.0);
    }

    SUBCASE("no signal direction exists when both coefficients vanish") {
        CHECK_THROWS_AS(optimal_alice_states(coeffs(0.0, 0.0)), std::invalid_argument);
    }
}

TEST_CASE("optimal receiver family and achievability") {
    const auto sc = coeffs(0.02i, 0.01);

    SUBCASE("family endpoints are the energy eigenstates") {
        const DetectorState g = optimal_bob_state(sc, 1.0);
        CHECK(g.excited == 0.0);
        CHECK(g.ground == 1.0);
        CHECK(std::abs(g.coherence) == 0.0);
        const DetectorState e = optimal_bob_state(sc, 0.0);
        CHECK(e.excited == 1.0);
        CHECK(e.ground == 0.0);
        CHECK(std::abs(e.coherence) == 0.0);
    }

    SUBCASE("every member is pure with the locked coherence phase") {
        for (int k = 0; k <= 20; ++k) {
            const double kappa = k / 20.0;
            const DetectorState bob = optimal_bob_state(sc, kappa);
            bob.validate();
            CHECK(bob.is_pure(1e-12));
            if (kappa > 0.0 && kappa < 1.0) {
                const double want = 0.5 * (std::arg(sc.c2) - std::arg(sc.d2));
                CHECK(std::arg(bob.coherence) == doctest::Approx(want).epsilon(1e-12));
            }
        }
    }

    SUBCASE("the full strength survives at intermediate mixing") {
        const DetectorState bob = optimal_bob_state(sc, 0.3);
        const ChannelMap map = leading_channel_matrix(sc, bob);
        const auto [p, m] = optimal_alice_states(sc);
        const BlochVector out = map.apply(p);
        CHECK(std::abs(out.norm() - 0.03) < 1e-15);
        CHECK(std::abs(trace_distance(map.apply(p), map.apply(m)) - 0.03) < 1e-15);
    }

    SUBCASE("outputs align with the measurement direction") {
        std::mt19937 rng(5u);
        std::uniform_real_distribution<double> angle(-pi, pi);
        std::uniform_real_distribution<double> unit(0.05, 0.95);
        for (int k = 0; k < 8; ++k) {
            const auto sck = coeffs(0.04 * std::exp(cdouble(0.0, angle(rng))),
                                    0.02 * std::exp(cdouble(0.0, angle(rng))));
            const DetectorState bob = optimal_bob_state(sck, unit(rng));
            const ChannelMap map = leading_channel_matrix(sck, bob);
            const auto alice = optimal_alice_states(sck);
            const auto meas = measurement_basis(sck, bob);
            const BlochVector out = map.apply(alice.first);
            const double strength = signal_strength(sck);
            CHECK(std::abs(out.x - strength * meas.first.x) < 1e-15);
            CHECK(std::abs(out.y - strength * meas.first.y) < 1e-15);
            CHECK(std::abs(out.z - strength * meas.first.z) < 1e-15);
        }
    }

    SUBCASE("domain errors") {
        CHECK_THROWS_AS(optimal_bob_state(sc, -0.1), std::invalid_argument);
        CHECK_THROWS_AS(optimal_bob_state(sc, 1.1), std::invalid_argument);
        CHECK_THROWS_AS(optimal_bob_state(coeffs(0.0, 0.0), 0.5), std::invalid_argument);
    }
}

TEST_CASE("trace distance is the qubit metric") {
    CHECK(trace_distance({1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}) == 1.0);
    CHECK(trace_distance({0.2, -0.1, 0.4}, {0.2, -0.1, 0.4}) == 0.0);

    std::mt19937 rng(17u);
    std::normal_distribution<double> gauss(0.0, 0.4);
    for (int k = 0; k < 50; ++k) {
        const BlochVector a{gauss(rng), gauss(rng), gauss(rng)};
        const BlochVector b{gauss(rng), gauss(rng), gauss(rng)};
        const BlochVector c{gauss(rng), gauss(rng), gauss(rng)};
        CHECK(trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-15);
        CHECK(trace_distance(a, b) == trace_distance(b, a));
        CHECK(trace_distance(a, b) >= 0.0);
    }
}

TEST_CASE("optimality across receiver preparations") {
    SUBCASE("the analytic optimum is the brute-force optimum across the optimal family") {
        std::mt19937 rng(23u);
        std::uniform_real_distribution<double> angle(-pi, pi);
        std::uniform_real_distribution<double> mag_c(0.001, 0.06);
        std::uniform_real_distribution<double> mag_d(0.0005, 0.04);

        for (int trial = 0; trial < 20; ++trial) {
            const auto sc = coeffs(mag_c(rng) * std::exp(cdouble(0.0, angle(rng))),
                                   mag_d(rng) * std::exp(cdouble(0.0, angle(rng))));
            const double strength = signal_strength(sc);
            REQUIRE(strength <= 0.1);
            const auto alice = optimal_alice_states(sc);

            for (int k = 0; k <= 20; ++k) {
                const double kappa = k / 20.0;
                const DetectorState bob = optimal_bob_state(sc, kappa);
                const ChannelMap map = leading_channel_matrix(sc, bob);

                const double analytic =
                    trace_distance(map.apply(alice.first), map.apply(alice.second));
                CHECK(std::abs(analytic - strength) < 1e-6);

                const auto [grid_best, grid_angle] = grid_max_distance(map);
                CHECK(grid_best <= analytic + 1e-6);

                const auto meas = measurement_basis(sc, bob);
                CHECK(std::abs(meas.first.dot(bob.bloch())) < 1e-10);
                CHECK(std::abs(meas.first.norm() - 1.0) < 1e-12);
            }
        }
    }

    SUBCASE("incoherent receiver preparations scale the signal by the population gap") {
        const auto sc = coeffs(0.02 * std::exp(1.2i), 0.015 * std::exp(-0.5i));
        const double strength = signal_strength(sc);
        for (const double kappa : {1.0, 0.85, 0.6, 0.4, 0.1, 0.0}) {
            DetectorState bob{1.0 - kappa, kappa, {0.0, 0.0}};
            const ChannelMap map = leading_channel_matrix(sc, bob);
            const auto [grid_best, grid_angle] = grid_max_distance(map);
            const double expected = std::abs(2.0 * kappa - 1.0) * strength;
            // Half-degree discretisation bound, plus a floor for the zero-gap row.
            CHECK(std::abs(grid_best - expected) < 5e-5 * expected + 1e-12);
            CHECK(grid_best <= strength * (1.0 + 1e-12) + 1e-15);
        }
    }

    SUBCASE("arbitrary mixed receiver preparations never beat the strength") {
        const auto sc = coeffs(0.03 * std::exp(-2.3i), 0.02 * std::exp(0.9i));
        const double strength = signal_strength(sc);
        std::mt19937 rng2(29u);
        std::normal_distribution<double> gauss(0.0, 0.5);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < 15; ++k) {
            BlochVector r{gauss(rng2), gauss(rng2), gauss(rng2)};
            const double n = r.norm();
            const double want = unit(rng2);
            if (n > 0.0) r = (want / n) * r;
            const DetectorState bob = DetectorState::from_bloch(r);
            const ChannelMap map = leading_channel_matrix(sc, bob);
            const auto [grid_best, grid_angle] = grid_max_distance(map);
            CHECK(grid_best <= strength * (1.0 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("capacity figures") {
    SUBCASE("no signal, no capacity") {
        const CapacityReport rep = capacities(coeffs(0.0, 0.0), 0.3);
        CHECK(rep.trace_distance == 0.0);
        CHECK(rep.p_bit == 0.5);
        CHECK(rep.shannon == 0.0);
        REQUIRE(rep.holevo.has_value());
        CHECK(*rep.holevo == 0.0);
        CHECK(rep.warning.empty());
    }

    SUBCASE("pinned values at strength 0.1") {
        const auto sc = coeffs(0.1i, 0.0);
        const CapacityReport rep = capacities(sc, std::exp(-1.0));
        CHECK(rep.trace_distance == 0.1);
        CHECK(std::abs(rep.p_bit - 0.55) < 1e-15);
        CHECK(std::abs(rep.p_bit_alt - 0.6) < 1e-15);
        CHECK(std::abs(rep.shannon - 0.028853900817779268) < 1e-12);
        REQUIRE(rep.holevo.has_value());
        CHECK(std::abs(*rep.holevo - 0.0036067376022224085) < 1e-12);
    }

    SUBCASE("small-signal expansion tracks the exact binary channel capacity") {
        const double dist = 0.05;
        const CapacityReport rep = capacities(coeffs(cdouble(0.0, dist), 0.0));
        // Flip probabilities from the leading-order outcome split 1/2 +- dist.
        const double exact = exact_binary_channel_capacity(0.5 - dist, 0.5 - dist);
        CHECK(std::abs(exact - (1.0 - h2_bits(0.5 - dist))) < 1e-12);
        CHECK(std::abs(rep.shannon - exact) / exact < 0.10);
        CHECK(rep.leading_order_valid);
    }

    SUBCASE("validity flag tracks the perturbative window") {
        CHECK(capacities(coeffs(0.04, 0.01)).leading_order_valid);
        CHECK(!capacities(coeffs(0.1, 0.05)).leading_order_valid);
    }

    SUBCASE("holevo needs an excitation probability inside (0, 1)") {
        for (const double bad : {0.0, 1.0, 1.5, -0.2}) {
            const CapacityReport rep = capacities(coeffs(0.02, 0.01), bad);
            CHECK(!rep.holevo.has_value());
            CHECK(!rep.warning.empty());
        }
        const CapacityReport silent = capacities(coeffs(0.02, 0.01));
        CHECK(!silent.holevo.has_value());
        CHECK(silent.warning.empty());
    }

    SUBCASE("report invariants on random small coefficients") {
        std::mt19937 rng(31u);
        std::uniform_real_distribution<double> mag(0.0, 0.05);
        std::uniform_real_distribution<double> angle(-pi, pi);
        std::uniform_real_distribution<double> prob(0.01, 0.99);
        for (int k = 0; k < 25; ++k) {
            const auto sc = coeffs(mag(rng) * std::exp(cdouble(0.0, angle(rng))),
                                   mag(rng) * std::exp(cdouble(0.0, angle(rng))));
            const CapacityReport rep = capacities(sc, prob(rng));
            CHECK(rep.trace_distance >= 0.0);
            CHECK(rep.trace_distance <= 1.0);
            CHECK(rep.p_bit >= 0.5);
            CHECK(rep.p_bit <= 1.0);
            CHECK(rep.shannon >= 0.0);
            REQUIRE(rep.holevo.has_value());
            CHECK(*rep.holevo >= 0.0);
            // Exact up to one rounding of the 1/2 + d/2 sum.
            CHECK(std::abs((rep.p_bit - 0.5) - 0.5 * rep.trace_distance) <= 1e-16);
        }
    }
}

TEST_CASE("measurement directions") {
    const auto sc = coeffs(0.03 * std::exp(0.9i), 0.012 * std::exp(0.1i));
    const double half_diff = 0.5 * (std::arg(sc.c2) - std::arg(sc.d2));

    SUBCASE("ground-state receiver measures in the equatorial plane") {
        const auto [p, m] = measurement_basis(sc, DetectorState::ground_state());
        CHECK(p.z == 0.0);
        CHECK(p.x == doctest::Approx(std::cos(half_diff)).epsilon(1e-15));
        CHECK(p.y == doctest::Approx(-std::sin(half_diff)).epsilon(1e-15));
        CHECK((p + m).norm() == 0.0);
    }

    SUBCASE("balanced receiver measures along +-Z") {
        const DetectorState bob = optimal_bob_state(sc, 0.5);
        const auto [p, m] = measurement_basis(sc, bob);
        CHECK(p.x == 0.0);
        CHECK(p.y == 0.0);
        CHECK(p.z == doctest::Approx(1.0).epsilon(1e-15));
    }

    SUBCASE("directions are unit and orthogonal to the preparation") {
        std::mt19937 rng(41u);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < 15; ++k) {
            const DetectorState bob = optimal_bob_state(sc, unit(rng));
            const auto [p, m] = measurement_basis(sc, bob);
            CHECK(std::abs(p.norm() - 1.0) < 1e-12);
            CHECK(std::abs(p.dot(bob.bloch())) < 1e-10);
            CHECK((p + m).norm() == 0.0);
        }
    }

    SUBCASE("maximally mixed receiver has no preferred direction") {
        DetectorState mixed{0.5, 0.5, {0.0, 0.0}};
        CHECK_THROWS_AS(measurement_basis(sc, mixed), std::invalid_argument);
    }
}

TEST_CASE("global phase covariance") {
    std::mt19937 rng(43u);
    std::uniform_real_distribution<double> angle(-pi, pi);
    const auto base = coeffs(0.021 * std::exp(0.4i), 0.008 * std::exp(-1.1i));
    const auto base_states = optimal_alice_states(base);
    const CapacityReport base_rep = capacities(base, 0.2);

    for (const double alpha : {0.3, 1.1, 2.9, -2.2}) {
        const cdouble rot = std::exp(cdouble(0.0, alpha));
        const auto shifted = coeffs(rot * base.c2, rot * base.d2);

        // Joint phase rotation turns both coefficient phases by alpha, so the
        // equatorial optimum turns by alpha as well (the pair is defined
        // modulo an overall sign).
        const auto got = optimal_alice_states(shifted);
        const BlochVector want = rotate_z(base_states.first, alpha);
        const double match = std::min((got.first - want).norm(), (got.first + want).norm());
        CHECK(match < 1e-12);

        const CapacityReport rep = capacities(shifted, 0.2);
        CHECK(std::abs(rep.trace_distance - base_rep.trace_distance) < 1e-14);
        CHECK(std::abs(rep.p_bit - base_rep.p_bit) < 1e-14);
        CHECK(std::abs(rep.shannon - base_rep.shannon) < 1e-14);
        CHECK(std::abs(*rep.holevo - *base_rep.holevo) < 1e-14);
    }
}

TEST_CASE("detector state bookkeeping") {
    SUBCASE("eigenstates and round trips") {
        CHECK(DetectorState::ground_state().bloch().z == -1.0);
        CHECK(DetectorState::excited_state().bloch().z == 1.0);
        std::mt19937 rng(47u);
        std::normal_distribution<double> gauss(0.0, 0.4);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int k = 0; k < 20; ++k) {
            BlochVector r{gauss(rng), gauss(rng), gauss(rng)};
            const double n = r.norm();
            if (n > 1.0) r = (unit(rng) / n) * r;
            const DetectorState st = DetectorState::from_bloch(r);
            st.validate();
            const BlochVector back = st.bloch();
            CHECK((back - r).norm() < 1e-15);
        }
    }

    SUBCASE("purity matches the Bloch norm") {
        CHECK(DetectorState::ground_state().is_pure());
        CHECK(DetectorState{0.5, 0.5, {0.5, 0.0}}.is_pure());
        CHECK(!DetectorState{0.5, 0.5, {0.2, 0.0}}.is_pure());
    }

    SUBCASE("invalid entries are rejected") {
        CHECK_THROWS_AS((DetectorState{-0.1, 1.1, {0.0, 0.0}}.validate()), std::invalid_argument);
        CHECK_THROWS_AS((DetectorState{0.6, 0.6, {0.0, 0.0}}.validate()), std::invalid_argument);
        CHECK_THROWS_AS((DetectorState{0.9, 0.1, {0.5, 0.0}}.validate()), std::invalid_argument);
        CHECK_THROWS_AS(DetectorState::from_bloch({0.9, 0.9, 0.0}), std::invalid_argument);
    }
}

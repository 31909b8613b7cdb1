#pragma once
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "udw/signal.hpp"

namespace udw {

// Bloch-ball picture of the leading-order receiver channel.  A qubit density
// matrix rho = (I + r . sigma)/2 is identified with the real vector r; the
// channel acts on it as an affine map r -> M r + v.  Everything here is
// algebra on the already-computed coefficients c2, d2 (see signal.hpp); no
// quadrature happens in this module and all functions are pure.

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    double dot(const BlochVector& o) const;
    // Physical iff norm() <= 1; pure iff norm() == 1 within tol.
    bool is_pure(double tol = 1e-12) const;
};

BlochVector operator+(const BlochVector& a, const BlochVector& b);
BlochVector operator-(const BlochVector& a, const BlochVector& b);
BlochVector operator*(double s, const BlochVector& a);
BlochVector operator-(const BlochVector& a);

// One detector's initial density matrix in its energy eigenbasis (excited
// state first): diag(excited, ground) with off-diagonal entry coherence.
// Valid states have excited + ground = 1, both populations in [0, 1], and
// |coherence| <= sqrt(excited * ground); equality there means a pure state.
struct DetectorState {
    double excited = 0.0;
    double ground = 1.0;
    std::complex<double> coherence{0.0, 0.0};

    static DetectorState ground_state();
    static DetectorState excited_state();
    static DetectorState from_bloch(const BlochVector& r);

    BlochVector bloch() const;
    bool is_pure(double tol = 1e-12) const;
    // Throws std::invalid_argument when the entries are not a density matrix.
    void validate() const;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// Affine Bloch map r -> m r + v.
struct ChannelMap {
    Mat3 m{};
    std::array<double, 3> v{};

    BlochVector apply(const BlochVector& r) const;
};

// Rotation/scale factorisation of a channel matrix, m = u * o * diag(scale) * o^T.
// u and o are rotations about the Z axis, so the map first rotates the
// equatorial plane, then shrinks each principal axis, then rotates again.
struct ChannelSvd {
    Mat3 u{};
    Mat3 o{};
    std::array<double, 3> scale{};
};

// Capacity figures of the optimally operated channel.  trace_distance is the
// best achievable separation |c2| + |d2| between the receiver's two output
// states.  p_bit is the single-shot success probability 1/2 + trace_distance/2
// from optimal discrimination; p_bit_alt = 1/2 + trace_distance is the variant
// normalisation also in circulation, reported alongside so either convention
// can be read off.  shannon and holevo are leading-order expansions in bits
// per use.  leading_order_valid flags the perturbative regime
// (trace_distance < 0.1) in which those expansions can be trusted.
struct CapacityReport {
    double trace_distance = 0.0;
    double p_bit = 0.5;
    double p_bit_alt = 0.5;
    double shannon = 0.0;
    std::optional<double> holevo{};
    bool leading_order_valid = true;
    std::string warning{};
};

// Leading-order channel matrix for an arbitrary receiver initial state.  The
// upper 2x2 block is (ground - excited) times the rotation/scale block built
// from c2 +- d2; the third row is driven by the receiver coherence; the third
// column is identically zero, so the sender's Z component never reaches the
// receiver at this order.  The affine offset (receiver self-excitation) is
// higher order and reported as zero.
ChannelMap leading_channel_matrix(const SignalCoefficients& sc, const DetectorState& bob);

// Factorises a ground-state-receiver channel matrix using the phases of c and
// d: u rotates by arg(c), o by (arg(c) + arg(d))/2, and the scales are
// |c| + |d|, |c| - |d|, and the matrix's own ZZ entry.  The product
// u * o * diag * o^T rebuilds the matrix to machine precision.
ChannelSvd svd_channel(const ChannelMap& map, std::complex<double> c, std::complex<double> d);

// The antipodal pair of equatorial pure states that maximise the output
// separation: +-(cos a, sin a, 0) with a = (arg(c2) + arg(d2))/2.  Throws
// std::invalid_argument when c2 = d2 = 0 (no leading-order signal to align to).
std::pair<BlochVector, BlochVector> optimal_alice_states(const SignalCoefficients& sc);

// Pure receiver state with the given ground population that preserves the full
// signal strength.  The one-parameter family runs from the excited state
// (ground_population = 0) to the ground state (1); the coherence phase is
// locked to (arg(c2) - arg(d2))/2.  Throws std::invalid_argument when
// c2 = d2 = 0 or ground_population is outside [0, 1].
DetectorState optimal_bob_state(const SignalCoefficients& sc, double ground_population);

// Half the Euclidean distance between the Bloch vectors; equals the trace
// distance of the corresponding density matrices.
double trace_distance(const BlochVector& r1, const BlochVector& r2);

// Capacity figures from the coefficient magnitudes.  p2, when given, is the
// receiver's vacuum excitation probability and enables the holevo entry
// (-ln(p2) d^2 / (4 ln 2)); a p2 outside (0, 1) leaves holevo empty and sets
// the warning string instead.
CapacityReport capacities(const SignalCoefficients& sc,
                          std::optional<double> p2 = std::nullopt);

// The +- measurement directions that distinguish the receiver's two output
// states: the outputs lie along +-((ground - excited) cos b, -(ground - excited) sin b,
// 2 |coherence|) with b = (arg(c2) - arg(d2))/2, normalised.  For a receiver
// prepared by optimal_bob_state these are orthogonal to its initial Bloch
// vector, i.e. the measurement basis is mutually unbiased with the preparation
// basis.  Throws std::invalid_argument for a maximally mixed receiver (no
// preferred direction survives).
std::pair<BlochVector, BlochVector> measurement_basis(const SignalCoefficients& sc,
                                                      const DetectorState& bob);

} // namespace udw

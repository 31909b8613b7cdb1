#pragma once
#include <complex>

#include "udw/vec.hpp"

namespace udw {

// Massless Klein-Gordon commutator kernels, one per spatial dimension.
// Values are purely imaginary, antisymmetric under argument exchange, and
// vanish at spacelike separation.  In n=1 and n=2 the commutator has support
// inside the lightcone and is sampled pointwise; in n=3 it lives on the cone
// itself and is only ever consumed as a delta-sheet amplitude by the
// dedicated one-dimensional reduction in the signal integrals.

// (i/2) sgn(t'-t) inside and on the lightcone.  The boundary counts as
// inside (measure zero either way; fixed for determinism).
std::complex<double> commutator_1p1(double t, double x, double tp, double xp);

// (i/2 pi) sgn(t'-t) / sqrt((t'-t)^2 - |dx|^2) inside the lightcone.  The
// normalization is pinned by the retarded Green function of the 2d wave
// operator, theta(t-r) / (2 pi sqrt(t^2-r^2)).  Exactly on the cone the
// magnitude is infinite but integrable; the value returned carries an
// infinite imaginary part rather than throwing, and the integrators remove
// the singularity by substitution before sampling.
std::complex<double> commutator_2p1(double t, Vec3 x, double tp, Vec3 xp);

// Coefficient 1/(4 pi |dx|) multiplying the retarded and advanced delta
// sheets of the n=3 commutator.  Throws on the coincidence limit.
double lightcone_delta_amplitude_3p1(double dist);

// Regulated massless vacuum two-point function in 3+1 dimensions,
//   W = 1/(4 pi^2) * 1/(|dx|^2 - (dt - i eps)^2),  dt = t - t'.
// 2 i Im W reproduces the commutator as eps -> 0.
std::complex<double> wightman_3p1(double t, Vec3 x, double tp, Vec3 xp,
                                  double eps);

} // namespace udw

#pragma once
#include <complex>

#include "udw/errors.hpp"

namespace udw {

// Complex special functions backing the closed-form catalogue.  Accuracy is
// tuned for the argument ranges the catalogue produces: moderate |z| with
// |Im z| up to about 50.

// Gamma function on the complex plane, 12+ significant digits on the strip
// |Im z| <= 50.  Throws SingularityError at the poles.
std::complex<double> gamma_complex(std::complex<double> z);

// Upper incomplete gamma of vanishing first parameter,
//   Gamma(0, x) = E1(x) = \int_x^infty e^{-t}/t dt,
// principal branch, 10+ significant digits for |arg x| < pi.  Throws
// SingularityError at x = 0 (logarithmic singularity).
std::complex<double> incomplete_gamma_upper(std::complex<double> x);

// e^x Gamma(0, x).  Same domain as above, but stays representable when the
// bare exponential would overflow, and lets callers combine the two factors
// without the huge-phase cancellation of evaluating them separately.
std::complex<double> exp_scaled_e1(std::complex<double> x);

// Generalized hypergeometric 1F2(a1; b1, b2; z) by direct series summation,
// valid in the moderate-|z| regime.  Throws SingularityError when b1 or b2
// is a non-positive integer, AccuracyError (carrying the partial sum) if the
// series fails to settle within the term budget.
std::complex<double> hyp1f2(std::complex<double> a1, std::complex<double> b1,
                            std::complex<double> b2, std::complex<double> z);

} // namespace udw

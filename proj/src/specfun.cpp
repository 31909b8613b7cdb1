#include "udw/specfun.hpp"

#include <cmath>
#include <numbers>

namespace udw {

namespace {

using cdouble = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr double euler_gamma = 0.5772156649015328606;

bool is_nonpositive_integer(cdouble z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

// Lanczos approximation, g = 7, 9 terms.
cdouble gamma_positive_half_plane(cdouble z) {
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    z -= 1.0;
    cdouble x = c[0];
    for (int i = 1; i < 9; ++i)
        x += c[i] / (z + static_cast<double>(i));
    const cdouble t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// E1 by its ascending series; good up to moderate |x| where the alternating
// terms have not yet cost too many digits.
cdouble e1_series(cdouble x) {
    cdouble sum = 0.0;
    cdouble power = 1.0; // (-x)^k / k!
    for (int k = 1; k <= 120; ++k) {
        power *= -x / static_cast<double>(k);
        const cdouble term = power / static_cast<double>(k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && k > 4)
            break;
    }
    return -euler_gamma - std::log(x) - sum;
}

// Modified Lentz evaluation of the continued fraction
//   e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- 9/(x+7- ...))))
// which converges for |arg x| < pi, fastest away from the negative axis.
cdouble e1_continued_fraction_scaled(cdouble x) {
    const double tiny = 1e-290;
    cdouble f = x + 1.0;
    if (f == 0.0)
        f = tiny;
    cdouble C = f;
    cdouble D = 0.0;
    for (int n = 1; n < 20000; ++n) {
        const double a = -static_cast<double>(n) * n;
        const cdouble b = x + static_cast<double>(2 * n + 1);
        D = b + a * D;
        if (D == 0.0)
            D = tiny;
        C = b + a / C;
        if (C == 0.0)
            C = tiny;
        D = 1.0 / D;
        const cdouble delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return 1.0 / f;
    }
    throw AccuracyError("continued fraction for Gamma(0,x) did not settle",
                        1.0 / f, std::abs(1.0 / f));
}

} // namespace

cdouble gamma_complex(cdouble z) {
    if (is_nonpositive_integer(z))
        throw SingularityError("gamma pole at non-positive integer");
    if (z.real() < 0.5)
        return pi / (std::sin(pi * z) * gamma_complex(1.0 - z));
    return gamma_positive_half_plane(z);
}

cdouble incomplete_gamma_upper(cdouble x) {
    if (x == 0.0)
        throw SingularityError("Gamma(0,x) is logarithmically singular at x=0");
    if (std::abs(x) <= 4.5)
        return e1_series(x);
    return std::exp(-x) * e1_continued_fraction_scaled(x);
}

cdouble exp_scaled_e1(cdouble x) {
    if (x == 0.0)
        throw SingularityError("Gamma(0,x) is logarithmically singular at x=0");
    if (std::abs(x) <= 4.5)
        return std::exp(x) * e1_series(x);
    return e1_continued_fraction_scaled(x);
}

cdouble hyp1f2(cdouble a1, cdouble b1, cdouble b2, cdouble z) {
    if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2))
        throw SingularityError("hypergeometric lower parameter at a pole");
    cdouble sum = 1.0;
    cdouble term = 1.0;
    int settled = 0;
    for (int k = 0; k < 500; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a1 + kk) * z / ((b1 + kk) * (b2 + kk) * (kk + 1.0));
        sum += term;
        // the term ratio falls like |z|/k^2 once k clears sqrt|z|; demand two
        // consecutive negligible terms so a single small factor cannot stop
        // the sum early
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++settled >= 2)
                return sum;
        } else {
            settled = 0;
        }
    }
    throw AccuracyError("hypergeometric series did not settle", sum,
                        std::abs(term));
}

} // namespace udw

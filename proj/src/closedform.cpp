#include "udw/closedform.hpp"

#include <cmath>
#include <stdexcept>

#include "udw/errors.hpp"
#include "udw/kinematics.hpp"
#include "udw/specfun.hpp"

namespace udw {
namespace {

using cdouble = std::complex<double>;
constexpr double pi = 3.14159265358979323846;
constexpr cdouble im{0.0, 1.0};

// (e^z - 1)/z, finite through z = 0.
cdouble expm1_ratio(cdouble z) {
    if (std::abs(z) <= 1e-3)
        return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0)));
    return (std::exp(z) - 1.0) / z;
}

// (e^z - 1)/z - 1, keeping relative accuracy as z -> 0 where the leading
// term is z/2.
cdouble expm1_ratio_m1(cdouble z) {
    if (std::abs(z) <= 1e-3)
        return z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
    return (std::exp(z) - 1.0) / z - 1.0;
}

double sinc(double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; }

// ln(1+x)/x, finite through x = 0.
double log1p_ratio(double x) { return x == 0.0 ? 1.0 : std::log1p(x) / x; }

// sinh(A)/sinh(B) for B > 0, staying in range when both factors overflow.
double sinh_ratio(double A, double B) {
    if (B < 25.0)
        return std::sinh(A) / std::sinh(B);
    return std::exp(A - B) * std::expm1(-2.0 * A) / std::expm1(-2.0 * B);
}

double log_sinh(double A) {
    if (A < 25.0)
        return std::log(std::sinh(A));
    return A - std::log(2.0) + std::log1p(-std::exp(-2.0 * A));
}

double log_cosh(double A) {
    if (A < 25.0)
        return std::log(std::cosh(A));
    return A - std::log(2.0) + std::log1p(std::exp(-2.0 * A));
}

// e^{s pi y / 2} Gamma(-1 - i y).  The bare factors overflow and underflow
// in opposite directions while the product stays of order one, so past a
// modest y the magnitude is assembled in log space from
// |Gamma(-1-iy)|^2 = pi / (y (1 + y^2) sinh(pi y)).
cdouble gamma_m1_scaled(double y, int s) {
    const cdouble g = gamma_complex(cdouble(-1.0, -y));
    const double half = 0.5 * pi * y;
    if (half <= 30.0)
        return std::exp(s * half) * g;
    const double log_mag = 0.5 * (std::log(pi) - std::log(y) -
                                  std::log1p(y * y) - log_sinh(pi * y));
    return std::exp(s * half + log_mag) * (g / std::abs(g));
}

// Same pairing for e^{pi y / 2} Gamma(-i y), |Gamma(-iy)|^2 = pi/(y sinh(pi y)).
cdouble gamma_0_scaled(double y) {
    const cdouble g = gamma_complex(cdouble(0.0, -y));
    const double half = 0.5 * pi * y;
    if (half <= 30.0)
        return std::exp(half) * g;
    const double log_mag =
        0.5 * (std::log(pi) - std::log(y) - log_sinh(pi * y));
    return std::exp(half + log_mag) * (g / std::abs(g));
}

} // namespace

const char* closed_form_case_name(ClosedFormCase c) {
    switch (c) {
    case ClosedFormCase::Rest1p1: return "rest-1p1";
    case ClosedFormCase::Rest1p1Resonant: return "rest-1p1-resonant";
    case ClosedFormCase::Rest3p1: return "rest-3p1";
    case ClosedFormCase::Rest3p1Resonant: return "rest-3p1-resonant";
    case ClosedFormCase::Rest1p1ZeroGap: return "rest-1p1-zero-gap";
    case ClosedFormCase::Rest3p1ZeroGap: return "rest-3p1-zero-gap";
    case ClosedFormCase::Rest2p1ZeroGap: return "rest-2p1-zero-gap";
    case ClosedFormCase::Inertial3p1: return "inertial-3p1";
    case ClosedFormCase::Inertial3p1Resonant: return "inertial-3p1-resonant";
    case ClosedFormCase::Inertial1p1: return "inertial-1p1";
    case ClosedFormCase::Accel3p1: return "accel-3p1";
    case ClosedFormCase::Accel1p1Limit: return "accel-1p1-limit";
    case ClosedFormCase::Timelike1p1Sudden: return "timelike-1p1-sudden";
    }
    return "unknown";
}

cdouble rest_c2(int dimension, double omega_a, double omega_b,
                double separation, double duration, double lambda_a,
                double lambda_b) {
    if (dimension != 1 && dimension != 3)
        throw std::invalid_argument("rest_c2 covers dimensions 1 and 3");
    if (duration < 0.0)
        throw std::invalid_argument("duration must be nonnegative");
    const double ll = lambda_a * lambda_b;
    const double T = duration;
    const double L = separation;
    const double delta = omega_b - omega_a;
    const cdouble phase = std::exp(im * omega_b * L);
    if (dimension == 3) {
        if (!(L > 0.0))
            throw std::invalid_argument("separation must be positive");
        // One expression for the generic, resonant and zero-gap branches:
        // the removable delta -> 0 limit lives inside expm1_ratio.
        return ll / (4.0 * pi * L) * phase * im * T *
               expm1_ratio(im * delta * T);
    }
    if (L < 0.0)
        throw std::invalid_argument("separation must be nonnegative");
    if (omega_a == 0.0 && omega_b == 0.0)
        return cdouble(0.0, ll * T * T / 4.0);
    if (omega_a == 0.0)
        throw std::invalid_argument(
            "1+1 rest form needs a nonzero sender gap unless both gaps vanish");
    return ll * T / (2.0 * omega_a) * phase *
           (expm1_ratio_m1(im * omega_b * T) - expm1_ratio_m1(im * delta * T));
}

double rest_2p1_zero_gap(double separation, double duration, double lambda_a,
                         double lambda_b) {
    if (!(separation > 0.0))
        throw std::invalid_argument("separation must be positive");
    if (duration < 0.0)
        throw std::invalid_argument("duration must be nonnegative");
    const double L = separation;
    const double T = duration;
    const double root = std::sqrt(T * (2.0 * L + T));
    return lambda_a * lambda_b / pi *
           ((T + L) * std::log1p((T + root) / L) - root);
}

cdouble inertial_c2(int dimension, double omega_a, double omega_b,
                    double separation, double duration, double v,
                    double lambda_a, double lambda_b) {
    if (dimension != 1 && dimension != 3)
        throw std::invalid_argument("inertial_c2 covers dimensions 1 and 3");
    if (!(v >= 0.0 && v < 1.0))
        throw std::invalid_argument("recession speed must satisfy 0 <= v < 1");
    if (duration < 0.0)
        throw std::invalid_argument("duration must be nonnegative");
    const double ll = lambda_a * lambda_b;
    const double T = duration;
    const double L = separation;
    const double zeta = doppler_factor(v);
    const double g = std::sqrt((1.0 - v) * (1.0 + v));
    if (dimension == 1) {
        if (L < 0.0)
            throw std::invalid_argument("separation must be nonnegative");
        if (omega_a == 0.0)
            throw std::invalid_argument(
                "1+1 inertial form needs a nonzero sender gap");
        const double delta = omega_b - omega_a / zeta;
        const double u = 0.5 * delta * zeta * T;
        const cdouble r = std::exp(im * u) * sinc(u);
        return -ll * zeta * T / (2.0 * omega_a) * std::exp(im * omega_b * L) *
               (r - expm1_ratio(im * omega_b * zeta * T));
    }
    if (!(L > 0.0))
        throw std::invalid_argument("separation must be positive");
    if (v == 0.0)
        return rest_c2(3, omega_a, omega_b, L, T, lambda_a, lambda_b);
    const double delta = omega_a - zeta * omega_b;
    const cdouble phase = std::exp(im * omega_b * L);
    const double w = v * T / (L * g);
    if (delta == 0.0)
        return ll * im / (4.0 * pi) * phase * (T / L) * log1p_ratio(w);
    // Both incomplete-gamma arguments are purely imaginary with the fixed
    // real ratio z2/z1 = 1 + vT/(Lg); only their common scale varies with
    // the detuning delta and the speed.
    const cdouble z1 = im * (L * g / v) * delta;
    const cdouble z2 = im * ((T * v + L * g) / v) * delta;
    const cdouble pref = ll * im * g / (4.0 * pi * v) * phase;
    const double m1 = std::abs(z1);
    if (std::abs(z2) <= 4.5) {
        // Ascending-series difference.  The Euler constants cancel and the
        // log part is the real window ratio, so nothing is lost to
        // subtraction even arbitrarily close to resonance.
        cdouble sum = 0.0;
        cdouble p1 = 1.0, p2 = 1.0;
        double kf = 1.0;
        for (int k = 1; k <= 40; ++k) {
            p1 *= -z1;
            p2 *= -z2;
            kf *= k;
            const cdouble term = (p1 - p2) / (k * kf);
            sum += term;
            if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) && k > 4)
                break;
        }
        return pref * std::exp(z1) * (std::log1p(w) - sum);
    }
    if (m1 <= 50.0)
        return pref * std::exp(z1) *
               (incomplete_gamma_upper(z1) - incomplete_gamma_upper(z2));
    // Large arguments: the scaled values e^z Gamma(0,z) ~ 1/z agree to
    // relative O(v), so the asymptotic series is differenced term by term
    // with the cancellation factored out front.
    const cdouble a = 1.0 / z1;
    const cdouble b = 1.0 / z2;
    const cdouble amb = im * T * delta * a * b; // a - b without subtraction
    cdouble diff = 0.0;
    cdouble s = 0.0, bpow = 1.0;
    double fact = 1.0, sign = 1.0;
    for (int k = 1; k <= 10; ++k) {
        s = a * s + bpow; // sum_{j<k} a^j b^{k-1-j}
        bpow *= b;
        diff += sign * fact * s;
        fact *= k;
        sign = -sign;
    }
    diff *= amb;
    const cdouble tail =
        im * T * delta * expm1_ratio(-im * T * delta) * exp_scaled_e1(z2);
    return pref * (diff + tail);
}

double accel_3p1_strength(double x, double y, double lambda_a,
                          double lambda_b) {
    if (!(y > 0.0))
        throw std::invalid_argument("accel_3p1_strength needs omega_a/a > 0");
    if (!(x >= 0.0))
        throw std::invalid_argument("accel_3p1_strength needs omega_b/a >= 0");
    const double ll = lambda_a * lambda_b;
    const cdouble iy{0.0, y};
    cdouble odd = 0.0;
    if (x > 0.0) {
        const cdouble f =
            hyp1f2(1.0, 1.0 + 0.5 * iy, 1.5 + 0.5 * iy, 0.25 * x * x);
        const cdouble xpow = x * std::exp(iy * std::log(x)); // x^{1+iy}
        odd = xpow * f;
    }
    const cdouble even_i = pi * sinh_ratio(0.5 * pi * y + x, pi * y);
    const cdouble even_j = pi * sinh_ratio(0.5 * pi * y - x, pi * y);
    const cdouble I = even_i - im * gamma_m1_scaled(y, +1) * odd;
    const cdouble J = even_j + im * gamma_m1_scaled(y, -1) * odd;
    return ll / (2.0 * pi) * (std::abs(I) + std::abs(J));
}

bool accel_3p1_oscillation_dominated(double x) { return x < 0.05; }

Accel1p1Result accel_1p1(double omega_a, double omega_b, double a,
                         double lambda_a, double lambda_b) {
    if (!(a > 0.0))
        throw std::invalid_argument("accel_1p1 needs a positive acceleration");
    if (!(omega_a > 0.0) || !(omega_b > 0.0))
        throw std::invalid_argument("accel_1p1 needs positive gaps");
    const double ll = lambda_a * lambda_b;
    const double y = omega_a / a;
    // (-i omega_b/a)^{iy} = e^{pi y/2} e^{iy ln(omega_b/a)} on the
    // principal branch; the growing factor pairs with Gamma(-iy).
    const cdouble c2 = -ll * gamma_0_scaled(y) *
                       std::exp(im * y * std::log(omega_b / a)) /
                       (2.0 * a * omega_b);
    const double strength =
        ll / (a * omega_b) *
        std::exp(log_cosh(0.5 * pi * y) - 0.5 * log_sinh(pi * y)) *
        std::sqrt(pi / y);
    return {c2, strength};
}

cdouble timelike_1p1(const SwitchingProfile& switch_a,
                     const SwitchingProfile& switch_b, double omega_a,
                     double omega_b, double lambda_a, double lambda_b) {
    const auto sa = switch_a.proper_support(1e-14);
    const auto sb = switch_b.proper_support(1e-14);
    // With every receiver point strictly inside the sender points' future
    // cones the 1+1 commutator is the constant -i/2 whatever the (timelike)
    // worldlines do, so the check reduces to strict window ordering in the
    // common proper-time chart.
    if (!(sb.first > sa.second))
        throw std::invalid_argument(
            "timelike_1p1 needs the receiver window strictly after the "
            "sender window");
    return 0.5 * im * lambda_a * lambda_b *
           switching_fourier(switch_a, -omega_a) *
           switching_fourier(switch_b, omega_b);
}

} // namespace udw

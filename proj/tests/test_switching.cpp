#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "udw/switching.hpp"

using namespace udw;
using cdouble = std::complex<double>;

namespace {

// Oracle: composite Simpson with enough panels for the smooth profiles here
template <class F>
auto simpson(F&& f, double a, double b, int n) {
    auto acc = f(a) + f(b);
    const double h = (b - a) / n;
    for (int i = 1; i < n; ++i)
        acc = acc + (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return (h / 3.0) * acc;
}

cdouble fourier_oracle(const SwitchingProfile& p, double omega) {
    if (p.kind() == SwitchingKind::Sudden) {
        // eta is 1 a.e. on the window; integrate the bare phase so the
        // half-open edge value cannot bias the endpoint weights
        auto f = [&](double tau) { return std::exp(cdouble(0.0, omega * tau)); };
        return simpson(f, p.start(), p.start() + p.duration(), 400000);
    }
    auto f = [&](double tau) {
        return p.eta(tau) * std::exp(cdouble(0.0, omega * tau));
    };
    const auto [lo, hi] = p.proper_support(1e-16);
    // split at zero: the exponential profile has a kink there
    return simpson(f, lo, 0.0, 400000) + simpson(f, 0.0, hi, 400000);
}

} // namespace

TEST_CASE("profile values") {
    const auto sud = SwitchingProfile::sudden(0.0, 3.0);
    CHECK(sud.eta(1.0) == 1.0);
    CHECK(sud.eta(4.0) == 0.0);
    CHECK(sud.eta(0.0) == 1.0);  // closed at the left edge
    CHECK(sud.eta(3.0) == 0.0);  // open at the right edge
    CHECK(sud.eta(-0.001) == 0.0);

    const auto dec = SwitchingProfile::exponential_decay(2.0);
    CHECK(dec.eta(-2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(dec.eta(0.0) == 1.0);

    const auto gau = SwitchingProfile::gaussian(1.0, 0.5);
    CHECK(gau.eta(1.0) == 1.0);
    CHECK(gau.eta(1.5) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK(gau.eta(0.5) == gau.eta(1.5));
}

TEST_CASE("constructor guards") {
    CHECK_THROWS_AS(SwitchingProfile::sudden(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SwitchingProfile::gaussian(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(SwitchingProfile::exponential_decay(0.0), std::invalid_argument);
}

TEST_CASE("proper support") {
    const auto sud = SwitchingProfile::sudden(-1.0, 3.0);
    CHECK(sud.proper_support(1e-8) == std::pair{-1.0, 2.0});

    const auto dec = SwitchingProfile::exponential_decay(1.0);
    const auto [dlo, dhi] = dec.proper_support(1e-8);
    CHECK(dlo == doctest::Approx(-18.420680743952367).epsilon(1e-14));
    CHECK(dhi == doctest::Approx(18.420680743952367).epsilon(1e-14));
    CHECK(dec.eta(dhi) == doctest::Approx(1e-8).epsilon(1e-12));

    const auto gau = SwitchingProfile::gaussian(2.0, 0.5);
    const auto [glo, ghi] = gau.proper_support(1e-10);
    CHECK(gau.eta(ghi) == doctest::Approx(1e-10).epsilon(1e-10));
    CHECK(glo == doctest::Approx(4.0 - ghi).epsilon(1e-12));
    CHECK_THROWS_AS(gau.proper_support(0.0), std::invalid_argument);
    CHECK_THROWS_AS(dec.proper_support(1.5), std::invalid_argument);
}

TEST_CASE("mirrored profiles reflect through zero") {
    const SwitchingProfile profiles[] = {
        SwitchingProfile::sudden(0.7, 2.1),
        SwitchingProfile::gaussian(-1.2, 0.8),
        SwitchingProfile::exponential_decay(3.0),
    };
    for (const auto& p : profiles) {
        const auto m = p.mirrored();
        for (double tau : {-3.3, -0.7, 0.0, 0.2, 1.9, 4.0})
            CHECK(m.eta(tau) == doctest::Approx(p.eta(-tau)).epsilon(1e-15));
    }
    // the sudden window keeps its half-open orientation after mirroring
    const auto m = SwitchingProfile::sudden(0.0, 2.0).mirrored();
    CHECK(m.start() == -2.0);
    CHECK(m.duration() == 2.0);
}

TEST_CASE("coordinate-time switching and support windows") {
    const auto rest = Worldline::rest({});
    const auto inertial = Worldline::inertial({0.6, 0.0, 0.0}, {});
    const auto accel = Worldline::uniform_acceleration(1.0);
    const auto sud = SwitchingProfile::sudden(0.0, 3.0);

    CHECK(chi(sud, rest, 1.0) == 1.0);
    // t=2 maps to tau=1.6, inside the window, with clock rate 0.8
    CHECK(chi(sud, inertial, 2.0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(chi(sud, inertial, 4.0) == 0.0); // tau=3.2 past the window

    // with the switching held open, chi is the clock rate itself
    const auto open = SwitchingProfile::sudden(-50.0, 100.0);
    for (double t : {-2.0, 0.0, 0.5, 3.0})
        CHECK(chi(open, accel, t) ==
              doctest::Approx(1.0 / std::sqrt(1.0 + t * t)).epsilon(1e-14));

    CHECK(support_window(sud, rest, 1e-8) == std::pair{0.0, 3.0});
    const auto [ilo, ihi] = support_window(sud, inertial, 1e-8);
    CHECK(ilo == 0.0);
    CHECK(ihi == doctest::Approx(3.75).epsilon(1e-14));
    const auto [alo, ahi] = support_window(sud, accel, 1e-8);
    CHECK(alo == 0.0);
    CHECK(ahi == doctest::Approx(std::sinh(3.0)).epsilon(1e-14));
}

TEST_CASE("chi integrates to the proper-time measure of eta") {
    struct Case {
        SwitchingProfile p;
        Worldline w;
    };
    const Case cases[] = {
        {SwitchingProfile::gaussian(0.3, 0.25),
         Worldline::uniform_acceleration(2.0)},
        {SwitchingProfile::exponential_decay(1.5),
         Worldline::inertial({-0.3, 0.1, 0.0}, {2.0, 0.0, 0.0})},
    };
    for (const auto& c : cases) {
        const auto [plo, phi] = c.p.proper_support(1e-16);
        const auto [tlo, thi] = support_window(c.p, c.w, 1e-16);
        auto eta_f = [&](double tau) { return c.p.eta(tau); };
        auto chi_f = [&](double t) { return chi(c.p, c.w, t); };
        // split both integrals at the kink image tau = 0 <-> t = 0
        double proper, coord;
        if (plo < 0.0 && phi > 0.0) {
            proper = simpson(eta_f, plo, 0.0, 200000) + simpson(eta_f, 0.0, phi, 200000);
            coord = simpson(chi_f, tlo, 0.0, 200000) + simpson(chi_f, 0.0, thi, 200000);
        } else {
            proper = simpson(eta_f, plo, phi, 200000);
            coord = simpson(chi_f, tlo, thi, 200000);
        }
        CHECK(coord == doctest::Approx(proper).epsilon(1e-10));
    }

    // sharp window on an inertial line: chi is the bare clock rate inside
    // the coordinate window and its integral is the proper window length
    const auto w = Worldline::inertial({0.6, 0.0, 0.0}, {});
    const auto p = SwitchingProfile::sudden(0.5, 2.0);
    const auto [tlo, thi] = support_window(p, w, 1e-8);
    const double coord = simpson([&](double t) { return w.dtau_dt(t); },
                                 tlo, thi, 20000);
    CHECK(coord == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(chi(p, w, 0.5 * (tlo + thi)) == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("fourier transform matches quadrature of the profile") {
    const SwitchingProfile profiles[] = {
        SwitchingProfile::sudden(-0.4, 2.7),
        SwitchingProfile::gaussian(-0.7, 1.3),
        SwitchingProfile::exponential_decay(2.0),
    };
    for (const auto& p : profiles) {
        for (double omega : {0.0, 0.3, 1.7, -2.4, 9.2}) {
            const cdouble exact = switching_fourier(p, omega);
            const cdouble num = fourier_oracle(p, omega);
            CHECK(std::abs(exact - num) < 1e-9 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("fourier transform special values") {
    // zero frequency gives the profile area
    CHECK(switching_fourier(SwitchingProfile::sudden(1.0, 3.0), 0.0).real() ==
          doctest::Approx(3.0).epsilon(1e-15));
    CHECK(switching_fourier(SwitchingProfile::exponential_decay(1.7), 0.0).real() ==
          doctest::Approx(3.4).epsilon(1e-15));
    CHECK(switching_fourier(SwitchingProfile::gaussian(0.0, 2.0), 0.0).real() ==
          doctest::Approx(2.0 * std::sqrt(2.0 * std::acos(-1.0))).epsilon(1e-15));
    // continuity across the tiny-frequency regime
    const auto sud = SwitchingProfile::sudden(0.0, 5.0);
    const cdouble near = switching_fourier(sud, 1e-13);
    CHECK(std::abs(near - cdouble(5.0, 0.0)) < 1e-10);
}

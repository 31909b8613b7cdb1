#pragma once
#include <string>
#include <vector>

#include "udw/kinematics.hpp"
#include "udw/switching.hpp"

namespace udw {

// One detector: a two-level system dragged along a worldline, coupled to the
// field with strength `coupling` while the switching profile is on, with
// internal energy gap `gap` between its ground and excited state.
struct DetectorConfig {
    double coupling = 1.0;
    double gap = 1.0;
    Worldline worldline;
    SwitchingProfile switching = SwitchingProfile::sudden(0.0, 1.0);
};

// A full signaling setup: Alice transmits, Bob receives, in n spatial
// dimensions (n = 1, 2, 3).  tail_cutoff bounds where non-compact switching
// profiles are truncated for quadrature.
struct Scenario {
    int dimension = 3;
    DetectorConfig alice;
    DetectorConfig bob;
    double tail_cutoff = 1e-10;
};

// Time-reversed scenario with sender and receiver exchanged: worldlines
// x'(t) = x(-t), switching chi'(t) = chi(-t).  Applying it twice restores
// the original scenario up to the role swap.
Scenario mirror(const Scenario& s);

// Perturbative smallness checks.  The dimensionless ratio per detector is
// lambda/Omega in n=1, lambda/sqrt(Omega) in n=2 and lambda itself in n=3;
// a warning string is produced when it exceeds 0.1, or when the ratio is
// undefined because the gap vanishes in n=1 or n=2.
std::vector<std::string> perturbative_warnings(const Scenario& s);

} // namespace udw

#pragma once
#include <string>
#include <vector>

// Bundled scenario files, also shipped under scenarios/.  `udw preset <name>`
// prints one so the copies can be regenerated instead of drifting.

namespace udw_cli {

inline const char* kFig2 = R"(# Resonance map for two resting detectors: signal strength across the
# (sender gap, receiver gap) plane with lightray-matched windows.
# Units: c = 1 and the separation L sets the scale, so durations are in
# units of L and gaps in units of 1/L.

[scenario]
dimension = 3
method = quadrature
output = coefficients

[alice]
coupling = 1
gap = 2.0                 # overridden by the sweep
worldline = rest
position = 0 0 0
switching = sudden
start = 0
duration = 7.5            # 7.5 L

[bob]
coupling = 1
gap = 2.0                 # overridden by the sweep
worldline = rest
position = 1 0 0
switching = sudden
start = auto              # lightray image of the sender window: [L, L + 7.5]
duration = auto

[sweep]
parameter = alice.gap
grid = linear 0.5 3.5 41

[sweep]
parameter = bob.gap
grid = linear 0.5 3.5 41
)";

inline const char* kFig4 = R"(# Receiver-gap scans against a receding sender at three recession speeds.
# The strength peaks at the Doppler-shifted resonance omega_a / zeta with
# zeta = sqrt((1+v)/(1-v)): 2.041 at v=0.2, 1.443 at v=0.5, 0.833 at v=0.8.

[scenario]
dimension = 3
method = quadrature
output = coefficients

[alice]
coupling = 1
gap = 2.5
worldline = inertial
velocity = -0.5 0 0       # overridden by the sweep
position = 0 0 0
switching = sudden
start = 0
duration = 7.5            # proper time, in units of the initial distance L

[bob]
coupling = 1
gap = 2.0                 # overridden by the sweep
worldline = rest
position = 1 0 0
switching = sudden
start = auto              # lightray image: [L, L + zeta 7.5]
duration = auto

[sweep]
parameter = velocity
values = 0.2 0.5 0.8

[sweep]
parameter = bob.gap
grid = linear 0.25 5.0 101
)";

inline const char* kFig5 = R"(# Signal strength from an eternally coupled uniformly accelerated sender to
# a resting receiver across the horizon, over the gap plane in units of the
# acceleration.  The closed form is the infinite-window limit and ignores
# the window details below; they matter only under method = both or
# quadrature, where the finite width shows up in the discrepancy column.
# Strengths at bob.gap/acceleration < 0.05 oscillate without settling and
# are flagged oscillatory.

[scenario]
dimension = 3
method = closed_form
output = coefficients

[alice]
coupling = 1
gap = 1.0                 # omega_a = y * acceleration, overridden by the sweep
worldline = accelerated
acceleration = 1
switching = exponential
width = 1000              # wide enough for quadrature to land within 1e-3

[bob]
coupling = 1
gap = 1.0                 # omega_b = x * acceleration, overridden by the sweep
worldline = rest
position = 0 0 0
switching = sudden
start = 0
duration = 40000

[sweep]
parameter = alice.gap
grid = linear 0.1 4.0 41

[sweep]
parameter = bob.gap
grid = linear 0.1 4.0 41
)";

inline const char* preset_text(const std::string& name) {
    if (name == "fig2") return kFig2;
    if (name == "fig4") return kFig4;
    if (name == "fig5") return kFig5;
    return nullptr;
}

inline std::vector<std::string> preset_names() { return {"fig2", "fig4", "fig5"}; }

} // namespace udw_cli

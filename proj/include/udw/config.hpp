#pragma once
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "udw/closedform.hpp"
#include "udw/quadrature.hpp"
#include "udw/scenario.hpp"

namespace udw {

// Scenario files are flat key = value text split into sections:
//
//   [scenario]    dimension, method, output, p2, tail_cutoff
//   [alice]       coupling, gap, worldline and switching keys
//   [bob]         same keys; start/duration may be the literal `auto`
//   [quadrature]  rel_tol, abs_tol, max_depth, points_per_period, max_panels
//   [sweep]       parameter plus grid or values; at most two blocks
//
// `#` starts a comment.  Unknown sections, unknown keys, duplicate keys and
// malformed values are rejected with the offending line number so the CLI
// can report schema violations precisely.

struct ConfigError : std::runtime_error {
    int line;          // 0 when the complaint is not tied to one line
    std::string field; // dotted key, e.g. "bob.duration"

    ConfigError(const std::string& msg, int line_, std::string field_)
        : std::runtime_error(msg), line(line_), field(std::move(field_)) {}
};

enum class WorldlineKindSpec { Rest, Inertial, Accelerated };
enum class SwitchingKindSpec { Sudden, Gaussian, Exponential };
enum class RunMethod { Quadrature, ClosedForm, Both };
enum class OutputLevel { Coefficients, Channel, Capacities };

struct WorldlineSpec {
    WorldlineKindSpec kind = WorldlineKindSpec::Rest;
    Vec3 position{0, 0, 0}; // at coordinate time 0; rest and inertial only
    Vec3 velocity{0, 0, 0}; // inertial only
    double acceleration = 0.0;
};

struct SwitchingSpec {
    SwitchingKindSpec kind = SwitchingKindSpec::Sudden;
    double start = 0.0;    // sudden, proper time
    double duration = 1.0; // sudden
    double center = 0.0;   // gaussian
    double width = 1.0;    // gaussian and exponential
    // Receiver-only: derive the window from the sender's through lightrays.
    bool start_auto = false;
    bool duration_auto = false;
};

struct DetectorSpec {
    double coupling = 1.0;
    double gap = 1.0;
    WorldlineSpec worldline;
    SwitchingSpec switching;
};

struct SweepSpec {
    std::string parameter;
    std::vector<double> values;
    int line = 0; // where the block starts, for diagnostics
};

struct ScenarioFile {
    int dimension = 3; // spatial dimensions: 1, 2 or 3
    RunMethod method = RunMethod::Quadrature;
    OutputLevel output = OutputLevel::Coefficients;
    std::optional<double> p2; // receiver excitation probability, enables holevo
    double tail_cutoff = 1e-10;
    DetectorSpec alice;
    DetectorSpec bob;
    QuadratureOptions quadrature;
    std::vector<SweepSpec> sweeps;            // outer block first
    std::optional<double> delay;              // drives bob.start, sweep-only
};

// Parse and cross-validate.  Throws ConfigError on any schema violation.
ScenarioFile parse_scenario_file(const std::string& text);
ScenarioFile load_scenario_file(const std::string& path);

// Sweepable parameter names: alice.gap, bob.gap, alice.coupling,
// bob.coupling, alice.duration, bob.duration, duration, alice.width,
// bob.width, separation, velocity, acceleration, delay.
bool is_sweep_parameter(const std::string& name);
void apply_parameter(ScenarioFile& f, const std::string& name, double value);

// Replace auto receiver windows (and a pending delay) with concrete numbers.
// The receiver switch-on lands on the lightray through the sender switch-on;
// likewise for switch-off.  Throws when no lightray connects them.
void resolve_windows(ScenarioFile& f);

// Engine scenario for a file whose windows are already resolved.
Scenario build_scenario(const ScenarioFile& f);

struct ClosedFormValues {
    std::optional<std::complex<double>> c2;
    std::optional<std::complex<double>> d2;
    double strength = 0.0;
    ClosedFormCase family = ClosedFormCase::Rest3p1;
    bool regime_limited = false; // oscillation-dominated corner of Accel3p1
};

// Match the (resolved) file against the closed-form catalogue and evaluate.
// Throws ConfigError when no catalogue entry covers the scenario.
ClosedFormValues evaluate_closed_form(const ScenarioFile& f);

} // namespace udw

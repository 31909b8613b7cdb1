#pragma once
#include <string>
#include <vector>

namespace udw {

// The release gate: twelve numbered checks with pinned tolerances, each
// reporting one pass/fail line.  The same battery backs `udw verify` and the
// acceptance test binary, so the gate cannot drift between the two.

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // metrics, e.g. worst ratio against the budget
};

struct AcceptanceOptions {
    // Rerun the quadrature-backed checks at a tenth of the usual tolerance.
    bool strict = false;
};

// fault injects a relative perturbation into every closed-form value before
// the comparison; nonzero values are for negative-control tests that prove
// the comparator actually bites.
CriterionResult criterion_oracle_equivalence(const AcceptanceOptions& opt, double fault = 0.0);
CriterionResult criterion_resonance_map(const AcceptanceOptions& opt);
CriterionResult criterion_doppler_peaks(const AcceptanceOptions& opt);
CriterionResult criterion_distance_scaling(const AcceptanceOptions& opt);
CriterionResult criterion_acceleration_bound(const AcceptanceOptions& opt);
CriterionResult criterion_accel_3p1_quadrature(const AcceptanceOptions& opt);
CriterionResult criterion_timelike_factorization(const AcceptanceOptions& opt);
CriterionResult criterion_mirror_symmetry(const AcceptanceOptions& opt);
CriterionResult criterion_channel_optimality(const AcceptanceOptions& opt);
CriterionResult criterion_capacities(const AcceptanceOptions& opt);
CriterionResult criterion_single_detector(const AcceptanceOptions& opt);
CriterionResult criterion_timelike_decay(const AcceptanceOptions& opt);

// All twelve in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

// "C07 PASS timelike-factorization  <detail>"
std::string format_criterion(const CriterionResult& r);

} // namespace udw

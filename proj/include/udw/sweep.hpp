#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udw/config.hpp"
#include "udw/signal.hpp"

namespace udw {

// One evaluated sweep point.  Row order follows the sweep blocks (outer
// block slowest), so repeated runs of the same file produce byte-identical
// tables regardless of how many worker threads computed them.
struct SweepRow {
    std::vector<double> params;
    std::optional<SignalCoefficients> quad;
    std::optional<ClosedFormValues> closed;
    // ok | oscillatory | accuracy_error | failed
    std::string status = "ok";
    std::string detail;
};

struct SweepResult {
    std::vector<std::string> columns;
    std::vector<SweepRow> rows;
    ScenarioFile file;
    bool any_failure = false; // accuracy_error or failed rows present
};

std::vector<std::string> column_names(const ScenarioFile& f);

// Evaluate every sweep point (the whole cross product for two blocks; a
// single row when the file has no sweeps).  threads <= 0 picks the hardware
// count.  Never throws for per-row numerical trouble; rows carry status.
SweepResult run_sweep(const ScenarioFile& f, int threads = 1);

// 17 significant digits, comma separated, one header line.
void write_csv(const SweepResult& r, std::ostream& out);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(std::istream& in);
std::vector<double> numeric_column(const CsvTable& t, const std::string& name);

struct PowerLawFit {
    double exponent = 0.0;
    double stderr_exponent = 0.0; // zero when only two points
    double amplitude = 0.0;       // y ~ amplitude * x^exponent
    int points = 0;
};

// Least squares on log y vs log x.  Requires strictly positive data.
PowerLawFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace udw

#pragma once
#include <complex>
#include <stdexcept>
#include <string>

namespace udw {

// A numerical routine ran out of budget before reaching its tolerance.  The
// best available estimate and a bound on its error ride along so callers can
// decide whether the partial answer is still usable.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, std::complex<double> estimate,
                  double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    std::complex<double> estimate() const { return estimate_; }
    double error_bound() const { return error_bound_; }

private:
    std::complex<double> estimate_;
    double error_bound_;
};

// Evaluation requested exactly at a pole or non-integrable singular point.
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace udw

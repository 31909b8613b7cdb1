#include "udw/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace udw {

namespace {

Worldline time_reflected(const Worldline& w) {
    switch (w.kind()) {
    case WorldlineKind::Rest:
        return w;
    case WorldlineKind::Inertial:
        return Worldline::inertial(-1.0 * w.base_velocity(), w.base_position());
    case WorldlineKind::UniformAcceleration:
        // sinh odd, cosh even: the hyperbola is its own reflection
        return w;
    }
    return w;
}

DetectorConfig reflected(const DetectorConfig& d) {
    DetectorConfig out = d;
    out.worldline = time_reflected(d.worldline);
    out.switching = d.switching.mirrored();
    return out;
}

} // namespace

Scenario mirror(const Scenario& s) {
    Scenario m;
    m.dimension = s.dimension;
    m.alice = reflected(s.bob);
    m.bob = reflected(s.alice);
    m.tail_cutoff = s.tail_cutoff;
    return m;
}

std::vector<std::string> perturbative_warnings(const Scenario& s) {
    std::vector<std::string> out;
    auto check = [&](const DetectorConfig& d, const char* name) {
        if (d.coupling < 0.0)
            throw std::invalid_argument("coupling must be >= 0");
        double ratio = 0.0;
        switch (s.dimension) {
        case 1:
            if (d.gap == 0.0) {
                if (d.coupling > 0.0)
                    out.push_back(std::string(name) +
                                  ": zero gap in 1+1, smallness ratio coupling/gap undefined");
                return;
            }
            ratio = d.coupling / std::abs(d.gap);
            break;
        case 2:
            if (d.gap == 0.0) {
                if (d.coupling > 0.0)
                    out.push_back(std::string(name) +
                                  ": zero gap in 2+1, smallness ratio coupling/sqrt(gap) undefined");
                return;
            }
            ratio = d.coupling / std::sqrt(std::abs(d.gap));
            break;
        default:
            ratio = d.coupling; // dimensionless in 3+1
            break;
        }
        if (ratio > 0.1)
            out.push_back(std::string(name) + ": smallness ratio " +
                          std::to_string(ratio) +
                          " > 0.1, perturbative result may be unreliable");
    };
    check(s.alice, "alice");
    check(s.bob, "bob");
    return out;
}

} // namespace udw

#pragma once
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "udw/errors.hpp"

namespace udw {

// One integrand evaluation.  error_density is a non-negative local error
// rate contributed by nested numerics (an inner integral's own bound, say);
// it is integrated alongside the value and lands in the final error figure,
// so outer refinement never hides inner uncertainty.
struct Sample {
    std::complex<double> value;
    double error_density = 0.0;
};

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-13;
    int max_depth = 48;
    // initial panels are sized so the supplied phase advances by less than
    // 2 pi / points_per_period across each
    int points_per_period = 16;
    std::size_t max_panels = 400000;
};

struct QuadratureResult {
    std::complex<double> value;
    // |K15-G7| bounds summed over panels, plus the integrated error density
    double error = 0.0;
    std::size_t panels = 0;
};

// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
//
//   breakpoints  known interior structure (kinks, window edges, cone
//                crossings); panels never straddle one
//   phase        monotone non-decreasing oscillation budget used to seed the
//                initial panelization; pass nullptr when the integrand does
//                not oscillate
//
// Endpoints of panels are never evaluated (all Kronrod nodes are interior),
// so integrable endpoint singularities that the caller has already weakened
// by substitution cannot produce infinities.
//
// Worst panels are refined first; refinement stops when the summed bound
// drops under max(abs_tol, rel_tol * |value|).  Exhausting the panel or
// depth budget first raises AccuracyError carrying the best estimate and
// its bound.  The final reduction sums panels ordered by left endpoint, so
// equal inputs give bit-identical results.
QuadratureResult integrate(const std::function<Sample(double)>& f, double a,
                           double b, const std::vector<double>& breakpoints,
                           const std::function<double(double)>& phase,
                           const QuadratureOptions& opt);

// Plain-valued convenience wrapper: no error density, no phase.
QuadratureResult integrate_value(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& breakpoints, const QuadratureOptions& opt);

} // namespace udw

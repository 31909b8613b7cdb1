#include "udw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace udw {

namespace {

using cdouble = std::complex<double>;

// Gauss-Kronrod (7,15) abscissae and weights on [-1,1]; even indices of the
// Kronrod set are the embedded Gauss nodes.
constexpr double kron_x[8] = {
    0.99145537112081263920685469752633, 0.94910791234275852452618968404785,
    0.86486442335976907278971278864093, 0.74153118559939443986386477328079,
    0.58608723546769113029414483825873, 0.40584515137739716690660641207696,
    0.20778495500789846760068940377324, 0.0,
};
constexpr double kron_w[8] = {
    0.02293532201052922496373200805897, 0.06309209262997855329070066318920,
    0.10479001032225018383987632254152, 0.14065325971552591874518959051024,
    0.16900472663926790282658342659855, 0.19035057806478540991325640242101,
    0.20443294007529889241416199923466, 0.20948214108472782801299917489171,
};
constexpr double gauss_w[4] = {
    0.12948496616886969327061143267908, 0.27970539148927666790146777142378,
    0.38183005050511894495036977548898, 0.41795918367346938775510204081633,
};

struct Panel {
    double a = 0.0, b = 0.0;
    cdouble value;
    double err = 0.0;     // |K15 - G7|
    double density = 0.0; // integrated error_density
    int depth = 0;
};

Panel eval_panel(const std::function<Sample(double)>& f, double a, double b,
                 int depth) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cdouble k15{};
    cdouble g7{};
    double den = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double w = kron_w[i];
        if (i == 7) {
            const Sample s = f(mid);
            k15 += w * s.value;
            g7 += gauss_w[3] * s.value;
            den += w * s.error_density;
            break;
        }
        const Sample lo = f(mid - half * kron_x[i]);
        const Sample hi = f(mid + half * kron_x[i]);
        k15 += w * (lo.value + hi.value);
        den += w * (lo.error_density + hi.error_density);
        if (i % 2 == 1)
            g7 += gauss_w[i / 2] * (lo.value + hi.value);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = half * k15;
    p.err = std::abs(half * (k15 - g7));
    p.density = half * den;
    p.depth = depth;
    return p;
}

struct WorstFirst {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err)
            return x.err < y.err; // larger error floats to the top
        return x.a > y.a;         // ties: leftmost panel first
    }
};

// Initial mesh: segment edges at a, b and the interior breakpoints, then
// each segment subdivided so the phase advance per panel stays within the
// oscillation budget.  The phase is only trusted to be monotone
// non-decreasing; steps adapt by doubling and shrinking.
std::vector<double> initial_edges(double a, double b,
                                  const std::vector<double>& breakpoints,
                                  const std::function<double(double)>& phase,
                                  const QuadratureOptions& opt) {
    std::vector<double> seg{a};
    for (double c : breakpoints)
        if (c > a && c < b)
            seg.push_back(c);
    seg.push_back(b);
    std::sort(seg.begin(), seg.end());
    seg.erase(std::unique(seg.begin(), seg.end()), seg.end());

    if (!phase)
        return seg;

    const double budget =
        2.0 * std::numbers::pi / static_cast<double>(opt.points_per_period);
    std::vector<double> edges;
    for (std::size_t k = 0; k + 1 < seg.size(); ++k) {
        const double lo = seg[k], hi = seg[k + 1];
        edges.push_back(lo);
        double t = lo;
        double step = (hi - lo) / 8.0;
        double phi_t = phase(t);
        while (t < hi) {
            double next = std::min(t + step, hi);
            double dphi = phase(next) - phi_t;
            int shrink = 0;
            while (dphi > 1.25 * budget && shrink < 60) {
                // shrink proportionally under the linear-phase guess
                step *= std::max(0.25, budget / dphi);
                next = std::min(t + step, hi);
                dphi = phase(next) - phi_t;
                ++shrink;
            }
            if (next < hi)
                edges.push_back(next);
            if (edges.size() > opt.max_panels)
                throw AccuracyError(
                    "oscillation budget needs more initial panels than allowed",
                    cdouble{}, std::numeric_limits<double>::infinity());
            phi_t = phase(next);
            t = next;
            if (dphi < 0.5 * budget)
                step *= 2.0;
        }
    }
    edges.push_back(b);
    return edges;
}

} // namespace

QuadratureResult integrate(const std::function<Sample(double)>& f, double a,
                           double b, const std::vector<double>& breakpoints,
                           const std::function<double(double)>& phase,
                           const QuadratureOptions& opt) {
    if (!(opt.rel_tol > 0.0) || !(opt.abs_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be positive");
    if (opt.points_per_period < 8)
        throw std::invalid_argument("points_per_period must be at least 8");
    if (!(a <= b))
        throw std::invalid_argument("integration bounds out of order");
    if (a == b)
        return {cdouble{}, 0.0, 0};

    const auto edges = initial_edges(a, b, breakpoints, phase, opt);

    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> heap;
    cdouble value{};
    double err_sum = 0.0;
    std::size_t panels = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = eval_panel(f, edges[i], edges[i + 1], 0);
        value += p.value;
        err_sum += p.err;
        ++panels;
        heap.push(std::move(p));
    }

    auto tol = [&]() {
        return std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
    };

    while (err_sum > tol() && panels < opt.max_panels) {
        const Panel worst = heap.top();
        if (worst.depth >= opt.max_depth)
            break; // the worst panel cannot be improved further
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = eval_panel(f, worst.a, mid, worst.depth + 1);
        Panel right = eval_panel(f, mid, worst.b, worst.depth + 1);
        value += left.value + right.value - worst.value;
        err_sum += left.err + right.err - worst.err;
        ++panels;
        heap.push(std::move(left));
        heap.push(std::move(right));
    }

    // deterministic reduction: drain the heap and sum in spatial order
    std::vector<Panel> rest;
    rest.reserve(heap.size());
    while (!heap.empty()) {
        rest.push_back(heap.top());
        heap.pop();
    }
    std::sort(rest.begin(), rest.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    cdouble total{};
    double err = 0.0;
    double density = 0.0;
    for (const Panel& p : rest) {
        total += p.value;
        err += p.err;
        density += p.density;
    }

    QuadratureResult res{total, err + density, rest.size()};
    if (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)))
        throw AccuracyError("quadrature did not reach tolerance", total,
                            err + density);
    return res;
}

QuadratureResult integrate_value(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& breakpoints, const QuadratureOptions& opt) {
    return integrate([&f](double t) { return Sample{f(t), 0.0}; }, a, b,
                     breakpoints, nullptr, opt);
}

} // namespace udw

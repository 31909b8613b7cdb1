#include "udw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>

#include "udw/channel.hpp"
#include "udw/errors.hpp"

namespace udw {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool wants_quad(const ScenarioFile& f) { return f.method != RunMethod::ClosedForm; }
bool wants_closed(const ScenarioFile& f) { return f.method != RunMethod::Quadrature; }

SweepRow compute_row(const ScenarioFile& base,
                     const std::vector<std::pair<std::string, double>>& assignments) {
    SweepRow row;
    for (const auto& [name, value] : assignments) row.params.push_back(value);
    ScenarioFile f = base;
    try {
        for (const auto& [name, value] : assignments) apply_parameter(f, name, value);
        resolve_windows(f);
    } catch (const std::exception& err) {
        row.status = "failed";
        row.detail = err.what();
        return row;
    }
    if (wants_closed(f)) {
        try {
            row.closed = evaluate_closed_form(f);
            if (row.closed->regime_limited) row.status = "oscillatory";
        } catch (const std::exception& err) {
            row.status = "failed";
            row.detail = err.what();
            return row;
        }
    }
    if (wants_quad(f)) {
        try {
            row.quad = compute_c2_d2(build_scenario(f), f.quadrature);
        } catch (const AccuracyError& err) {
            row.status = "accuracy_error";
            row.detail = err.what();
        } catch (const std::exception& err) {
            row.status = "failed";
            row.detail = err.what();
        }
    }
    return row;
}

// Channel and capacity outputs reduce through the coefficients; rows that
// carry only a closed-form strength still support the capacity figures
// (they depend on |c2| + |d2| alone).
struct Derived {
    double phi_c = kNan, phi_d = kNan;
    double alice_x = kNan, alice_y = kNan;
    CapacityReport cap;
    bool have_cap = false;
};

Derived derive_outputs(const ScenarioFile& f, const SweepRow& row) {
    Derived d;
    std::optional<SignalCoefficients> sc;
    if (row.quad) sc = *row.quad;
    else if (row.closed && row.closed->c2 && row.closed->d2)
        sc = SignalCoefficients{*row.closed->c2, *row.closed->d2, 0.0, 0.0};
    if (sc && std::abs(sc->c2) + std::abs(sc->d2) > 0) {
        d.phi_c = std::arg(sc->c2);
        d.phi_d = std::arg(sc->d2);
        auto states = optimal_alice_states(*sc);
        d.alice_x = states.first.x;
        d.alice_y = states.first.y;
    }
    std::optional<SignalCoefficients> strength_source = sc;
    if (!strength_source && row.closed)
        strength_source = SignalCoefficients{{row.closed->strength, 0.0}, {0.0, 0.0}, 0, 0};
    if (strength_source) {
        d.cap = capacities(*strength_source, f.p2);
        d.have_cap = true;
    }
    return d;
}

double discrepancy(const SweepRow& row) {
    if (!row.quad || !row.closed) return kNan;
    double worst = std::abs(signal_strength(*row.quad) - row.closed->strength);
    if (row.closed->c2) worst = std::max(worst, std::abs(row.quad->c2 - *row.closed->c2));
    if (row.closed->d2) worst = std::max(worst, std::abs(row.quad->d2 - *row.closed->d2));
    return worst;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::vector<std::string> column_names(const ScenarioFile& f) {
    std::vector<std::string> cols;
    for (const auto& sw : f.sweeps) cols.push_back(sw.parameter);
    if (wants_quad(f))
        for (const char* c : {"c2_re", "c2_im", "d2_re", "d2_im", "err_c2", "err_d2",
                              "strength", "strength_err"})
            cols.push_back(c);
    if (wants_closed(f)) {
        const bool suffix = f.method == RunMethod::Both;
        for (const char* c : {"c2_re", "c2_im", "d2_re", "d2_im", "strength"})
            cols.push_back(suffix ? std::string(c) + "_closed" : c);
        if (suffix) cols.push_back("discrepancy");
    }
    if (f.output != OutputLevel::Coefficients)
        for (const char* c : {"phi_c", "phi_d", "alice_opt_x", "alice_opt_y"})
            cols.push_back(c);
    if (f.output == OutputLevel::Capacities)
        for (const char* c : {"p_bit", "p_bit_alt", "shannon", "holevo", "valid"})
            cols.push_back(c);
    cols.push_back("status");
    return cols;
}

SweepResult run_sweep(const ScenarioFile& f, int threads) {
    SweepResult result;
    result.file = f;
    result.columns = column_names(f);

    std::vector<std::vector<std::pair<std::string, double>>> points;
    if (f.sweeps.empty()) {
        points.push_back({});
    } else if (f.sweeps.size() == 1) {
        for (double v : f.sweeps[0].values) points.push_back({{f.sweeps[0].parameter, v}});
    } else {
        for (double outer : f.sweeps[0].values)
            for (double inner : f.sweeps[1].values)
                points.push_back(
                    {{f.sweeps[0].parameter, outer}, {f.sweeps[1].parameter, inner}});
    }

    result.rows.resize(points.size());
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(points.size())));

    std::atomic<size_t> cursor{0};
    auto work = [&] {
        for (size_t i; (i = cursor.fetch_add(1)) < points.size();)
            result.rows[i] = compute_row(f, points[i]);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    for (const auto& row : result.rows)
        if (row.status == "failed" || row.status == "accuracy_error")
            result.any_failure = true;
    return result;
}

void write_csv(const SweepResult& r, std::ostream& out) {
    for (size_t i = 0; i < r.columns.size(); ++i)
        out << (i ? "," : "") << r.columns[i];
    out << "\n";
    const auto& f = r.file;
    for (const auto& row : r.rows) {
        std::vector<std::string> cells;
        for (double p : row.params) cells.push_back(fmt(p));
        if (wants_quad(f)) {
            if (row.quad) {
                const auto& q = *row.quad;
                for (double v : {q.c2.real(), q.c2.imag(), q.d2.real(), q.d2.imag(),
                                 q.err_c2, q.err_d2, signal_strength(q),
                                 q.err_c2 + q.err_d2})
                    cells.push_back(fmt(v));
            } else {
                for (int i = 0; i < 8; ++i) cells.push_back(fmt(kNan));
            }
        }
        if (wants_closed(f)) {
            if (row.closed) {
                const auto& c = *row.closed;
                auto opt_re = [](const std::optional<std::complex<double>>& z, bool re) {
                    return z ? (re ? z->real() : z->imag()) : kNan;
                };
                for (double v : {opt_re(c.c2, true), opt_re(c.c2, false),
                                 opt_re(c.d2, true), opt_re(c.d2, false), c.strength})
                    cells.push_back(fmt(v));
            } else {
                for (int i = 0; i < 5; ++i) cells.push_back(fmt(kNan));
            }
            if (f.method == RunMethod::Both) cells.push_back(fmt(discrepancy(row)));
        }
        if (f.output != OutputLevel::Coefficients) {
            Derived d = derive_outputs(f, row);
            for (double v : {d.phi_c, d.phi_d, d.alice_x, d.alice_y}) cells.push_back(fmt(v));
            if (f.output == OutputLevel::Capacities) {
                if (d.have_cap) {
                    cells.push_back(fmt(d.cap.p_bit));
                    cells.push_back(fmt(d.cap.p_bit_alt));
                    cells.push_back(fmt(d.cap.shannon));
                    cells.push_back(fmt(d.cap.holevo ? *d.cap.holevo : kNan));
                    cells.push_back(d.cap.leading_order_valid ? "1" : "0");
                } else {
                    for (int i = 0; i < 4; ++i) cells.push_back(fmt(kNan));
                    cells.push_back("0");
                }
            }
        }
        cells.push_back(row.status);
        for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << "\n";
    }
}

CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            } else if (ch != '\r') {
                cur.push_back(ch);
            }
        }
        out.push_back(cur);
        return out;
    };
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    t.columns = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() != t.columns.size())
            throw std::runtime_error("CSV row with " + std::to_string(cells.size()) +
                                     " cells under " + std::to_string(t.columns.size()) +
                                     " headers");
        t.rows.push_back(std::move(cells));
    }
    return t;
}

std::vector<double> numeric_column(const CsvTable& t, const std::string& name) {
    size_t idx = t.columns.size();
    for (size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name) idx = i;
    if (idx == t.columns.size()) throw std::runtime_error("no column named " + name);
    std::vector<double> out;
    for (const auto& row : t.rows) {
        const std::string& cell = row[idx];
        const char* begin = cell.c_str();
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0')
            throw std::runtime_error("non-numeric cell '" + cell + "' in column " + name);
        out.push_back(v);
    }
    return out;
}

PowerLawFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("power-law fit needs matching lists of at least 2 points");
    const int n = static_cast<int>(xs.size());
    std::vector<double> lx(n), ly(n);
    for (int i = 0; i < n; ++i) {
        if (!(xs[i] > 0) || !(ys[i] > 0))
            throw std::invalid_argument("power-law fit needs strictly positive data");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 0)) throw std::invalid_argument("power-law fit needs at least two distinct x");
    PowerLawFit fit;
    fit.points = n;
    fit.exponent = sxy / sxx;
    fit.amplitude = std::exp(my - fit.exponent * mx);
    if (n > 2) {
        double ssr = 0;
        for (int i = 0; i < n; ++i) {
            double r = ly[i] - my - fit.exponent * (lx[i] - mx);
            ssr += r * r;
        }
        fit.stderr_exponent = std::sqrt(ssr / (n - 2) / sxx);
    }
    return fit;
}

} // namespace udw

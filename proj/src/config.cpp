#include "udw/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "udw/kinematics.hpp"

namespace udw {
namespace {

struct Entry {
    std::string key, value;
    int line;
};

struct RawSection {
    std::string name;
    int line;
    std::vector<Entry> entries;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& msg, int line, const std::string& field) {
    throw ConfigError(msg, line, field);
}

std::vector<RawSection> split_sections(const std::string& text) {
    static const char* known[] = {"scenario", "alice", "bob", "quadrature", "sweep"};
    std::vector<RawSection> sections;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    int current = -1;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail("unterminated section header", line, "");
            std::string name = trim(s.substr(1, s.size() - 2));
            if (std::find(std::begin(known), std::end(known), name) == std::end(known))
                fail("unknown section [" + name + "]", line, name);
            if (name != "sweep")
                for (const auto& sec : sections)
                    if (sec.name == name)
                        fail("section [" + name + "] appears twice", line, name);
            sections.push_back({name, line, {}});
            current = static_cast<int>(sections.size()) - 1;
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos) fail("expected key = value", line, "");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail("empty key", line, "");
        if (value.empty()) fail("empty value for " + key, line, key);
        if (current < 0) fail("key outside any section", line, key);
        for (const auto& e : sections[current].entries)
            if (e.key == key)
                fail("duplicate key " + key + " in [" + sections[current].name + "]", line,
                     sections[current].name + "." + key);
        sections[current].entries.push_back({key, value, line});
    }
    return sections;
}

double parse_number(const Entry& e, const std::string& field) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        fail("expected a finite number for " + field + ", got '" + e.value + "'", e.line, field);
    return v;
}

int parse_integer(const Entry& e, const std::string& field) {
    double v = parse_number(e, field);
    if (v != std::floor(v) || std::abs(v) > 1e9)
        fail("expected an integer for " + field, e.line, field);
    return static_cast<int>(v);
}

std::vector<double> parse_number_list(const Entry& e, const std::string& field) {
    std::istringstream in(e.value);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) {
        const char* begin = tok.c_str();
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0' || !std::isfinite(v))
            fail("expected numbers for " + field + ", got '" + tok + "'", e.line, field);
        out.push_back(v);
    }
    return out;
}

Vec3 parse_vec3(const Entry& e, const std::string& field) {
    auto v = parse_number_list(e, field);
    if (v.size() != 3)
        fail(field + " needs three components, e.g. '1 0 0'", e.line, field);
    return {v[0], v[1], v[2]};
}

void parse_scenario_section(const RawSection& sec, ScenarioFile& f) {
    for (const auto& e : sec.entries) {
        std::string field = "scenario." + e.key;
        if (e.key == "dimension") {
            f.dimension = parse_integer(e, field);
            if (f.dimension < 1 || f.dimension > 3)
                fail("dimension counts spatial dimensions and must be 1, 2 or 3", e.line, field);
        } else if (e.key == "method") {
            if (e.value == "quadrature") f.method = RunMethod::Quadrature;
            else if (e.value == "closed_form") f.method = RunMethod::ClosedForm;
            else if (e.value == "both") f.method = RunMethod::Both;
            else fail("method must be quadrature, closed_form or both", e.line, field);
        } else if (e.key == "output") {
            if (e.value == "coefficients") f.output = OutputLevel::Coefficients;
            else if (e.value == "channel") f.output = OutputLevel::Channel;
            else if (e.value == "capacities") f.output = OutputLevel::Capacities;
            else fail("output must be coefficients, channel or capacities", e.line, field);
        } else if (e.key == "p2") {
            double v = parse_number(e, field);
            if (!(v > 0.0 && v < 1.0))
                fail("p2 is an excitation probability and must lie strictly between 0 and 1",
                     e.line, field);
            f.p2 = v;
        } else if (e.key == "tail_cutoff") {
            f.tail_cutoff = parse_number(e, field);
            if (!(f.tail_cutoff > 0.0 && f.tail_cutoff < 1.0))
                fail("tail_cutoff must lie in (0, 1)", e.line, field);
        } else {
            fail("unknown key " + e.key + " in [scenario]", e.line, field);
        }
    }
}

void parse_quadrature_section(const RawSection& sec, ScenarioFile& f) {
    for (const auto& e : sec.entries) {
        std::string field = "quadrature." + e.key;
        if (e.key == "rel_tol") {
            f.quadrature.rel_tol = parse_number(e, field);
            if (!(f.quadrature.rel_tol > 0)) fail("rel_tol must be positive", e.line, field);
        } else if (e.key == "abs_tol") {
            f.quadrature.abs_tol = parse_number(e, field);
            if (f.quadrature.abs_tol < 0) fail("abs_tol must be nonnegative", e.line, field);
        } else if (e.key == "max_depth") {
            int v = parse_integer(e, field);
            if (v < 1 || v > 64) fail("max_depth must lie in [1, 64]", e.line, field);
            f.quadrature.max_depth = v;
        } else if (e.key == "points_per_period") {
            int v = parse_integer(e, field);
            if (v < 2) fail("points_per_period must be at least 2", e.line, field);
            f.quadrature.points_per_period = v;
        } else if (e.key == "max_panels") {
            int v = parse_integer(e, field);
            if (v < 1) fail("max_panels must be positive", e.line, field);
            f.quadrature.max_panels = v;
        } else {
            fail("unknown key " + e.key + " in [quadrature]", e.line, field);
        }
    }
}

void parse_detector_section(const RawSection& sec, DetectorSpec& d, bool is_receiver) {
    const std::string who = sec.name;
    // Kind selectors first so dependent keys can be checked in one pass.
    bool have_accel = false, have_duration = false, have_width = false;
    for (const auto& e : sec.entries) {
        if (e.key == "worldline") {
            if (e.value == "rest") d.worldline.kind = WorldlineKindSpec::Rest;
            else if (e.value == "inertial") d.worldline.kind = WorldlineKindSpec::Inertial;
            else if (e.value == "accelerated")
                d.worldline.kind = WorldlineKindSpec::Accelerated;
            else
                fail("worldline must be rest, inertial or accelerated", e.line,
                     who + ".worldline");
        } else if (e.key == "switching") {
            if (e.value == "sudden") d.switching.kind = SwitchingKindSpec::Sudden;
            else if (e.value == "gaussian") d.switching.kind = SwitchingKindSpec::Gaussian;
            else if (e.value == "exponential")
                d.switching.kind = SwitchingKindSpec::Exponential;
            else
                fail("switching must be sudden, gaussian or exponential", e.line,
                     who + ".switching");
        }
    }
    for (const auto& e : sec.entries) {
        std::string field = who + "." + e.key;
        if (e.key == "worldline" || e.key == "switching") continue;
        if (e.key == "coupling") {
            d.coupling = parse_number(e, field);
            if (!(d.coupling > 0)) fail("coupling must be positive", e.line, field);
        } else if (e.key == "gap") {
            d.gap = parse_number(e, field);
        } else if (e.key == "position") {
            if (d.worldline.kind == WorldlineKindSpec::Accelerated)
                fail("accelerated worldlines are pinned to their vertex at x = 1/a; "
                     "translate the partner detector instead",
                     e.line, field);
            d.worldline.position = parse_vec3(e, field);
        } else if (e.key == "velocity") {
            if (d.worldline.kind != WorldlineKindSpec::Inertial)
                fail("velocity applies to inertial worldlines only", e.line, field);
            d.worldline.velocity = parse_vec3(e, field);
            if (!(d.worldline.velocity.norm() < 1.0))
                fail("|velocity| must be below 1 (c = 1)", e.line, field);
        } else if (e.key == "acceleration") {
            if (d.worldline.kind != WorldlineKindSpec::Accelerated)
                fail("acceleration applies to accelerated worldlines only", e.line, field);
            d.worldline.acceleration = parse_number(e, field);
            if (!(d.worldline.acceleration > 0))
                fail("acceleration must be positive", e.line, field);
            have_accel = true;
        } else if (e.key == "start") {
            if (d.switching.kind != SwitchingKindSpec::Sudden)
                fail("start applies to sudden switching only", e.line, field);
            if (e.value == "auto") {
                if (!is_receiver)
                    fail("auto windows are resolved against the sender; "
                         "give the sender explicit times",
                         e.line, field);
                d.switching.start_auto = true;
            } else {
                d.switching.start = parse_number(e, field);
            }
        } else if (e.key == "duration") {
            if (d.switching.kind != SwitchingKindSpec::Sudden)
                fail("duration applies to sudden switching only", e.line, field);
            have_duration = true;
            if (e.value == "auto") {
                if (!is_receiver)
                    fail("auto windows are resolved against the sender; "
                         "give the sender explicit times",
                         e.line, field);
                d.switching.duration_auto = true;
            } else {
                d.switching.duration = parse_number(e, field);
                if (!(d.switching.duration > 0))
                    fail("duration must be positive", e.line, field);
            }
        } else if (e.key == "center") {
            if (d.switching.kind != SwitchingKindSpec::Gaussian)
                fail("center applies to gaussian switching only", e.line, field);
            d.switching.center = parse_number(e, field);
        } else if (e.key == "width") {
            if (d.switching.kind == SwitchingKindSpec::Sudden)
                fail("width applies to gaussian or exponential switching only", e.line, field);
            d.switching.width = parse_number(e, field);
            if (!(d.switching.width > 0)) fail("width must be positive", e.line, field);
            have_width = true;
        } else {
            fail("unknown key " + e.key + " in [" + who + "]", e.line, field);
        }
    }
    if (d.worldline.kind == WorldlineKindSpec::Accelerated && !have_accel)
        fail("accelerated worldline needs an acceleration", sec.line, who + ".acceleration");
    if (d.switching.kind == SwitchingKindSpec::Sudden && !have_duration)
        fail("sudden switching needs a duration", sec.line, who + ".duration");
    if (d.switching.kind != SwitchingKindSpec::Sudden && !have_width)
        fail("gaussian and exponential switching need a width", sec.line, who + ".width");
}

void parse_sweep_section(const RawSection& sec, ScenarioFile& f) {
    if (f.sweeps.size() == 2)
        fail("at most two sweep blocks are supported (outer then inner)", sec.line, "sweep");
    SweepSpec sw;
    sw.line = sec.line;
    const Entry* grid = nullptr;
    const Entry* values = nullptr;
    for (const auto& e : sec.entries) {
        std::string field = "sweep." + e.key;
        if (e.key == "parameter") {
            if (!is_sweep_parameter(e.value))
                fail("unknown sweep parameter " + e.value, e.line, field);
            sw.parameter = e.value;
        } else if (e.key == "grid") {
            grid = &e;
        } else if (e.key == "values") {
            values = &e;
        } else {
            fail("unknown key " + e.key + " in [sweep]", e.line, field);
        }
    }
    if (sw.parameter.empty()) fail("sweep block needs a parameter", sec.line, "sweep.parameter");
    if ((grid != nullptr) == (values != nullptr))
        fail("each sweep block needs exactly one of grid or values", sec.line, "sweep.grid");
    if (values) {
        sw.values = parse_number_list(*values, "sweep.values");
        if (sw.values.empty()) fail("values list is empty", values->line, "sweep.values");
    } else {
        std::istringstream in(grid->value);
        std::string kind;
        in >> kind;
        std::string rest;
        std::getline(in, rest);
        Entry nums{grid->key, rest, grid->line};
        auto v = parse_number_list(nums, "sweep.grid");
        if ((kind != "linear" && kind != "log") || v.size() != 3)
            fail("grid needs the form 'linear|log <start> <stop> <count>'", grid->line,
                 "sweep.grid");
        int count = static_cast<int>(v[2]);
        if (v[2] != std::floor(v[2]) || count < 2)
            fail("grid count must be an integer of at least 2", grid->line, "sweep.grid");
        double lo = v[0], hi = v[1];
        if (kind == "log" && (!(lo > 0) || !(hi > 0)))
            fail("log grid endpoints must be positive", grid->line, "sweep.grid");
        for (int i = 0; i < count; ++i) {
            double t = static_cast<double>(i) / (count - 1);
            sw.values.push_back(kind == "log" ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                                              : lo + t * (hi - lo));
        }
    }
    f.sweeps.push_back(std::move(sw));
}

// Domain restrictions shared by parse-time validation and apply_parameter.
void check_parameter_value(const std::string& name, double v, int line) {
    if (name == "velocity") {
        if (!(v >= 0.0 && v < 1.0))
            fail("velocity values must lie in [0, 1): recession speed of the sender", line,
                 name);
    } else if (name == "acceleration") {
        if (!(v > 0)) fail("acceleration values must be positive", line, name);
    } else if (name == "alice.coupling" || name == "bob.coupling") {
        if (!(v > 0)) fail("coupling values must be positive", line, name);
    } else if (name == "duration" || name == "alice.duration" || name == "bob.duration" ||
               name == "alice.width" || name == "bob.width") {
        if (!(v > 0)) fail(name + " values must be positive", line, name);
    }
    if (!std::isfinite(v)) fail(name + " values must be finite", line, name);
}

// A sweep may only address a knob the detector blocks actually expose.
void check_sweep_applicability(const ScenarioFile& f, const SweepSpec& sw) {
    const auto& name = sw.parameter;
    auto need = [&](bool ok, const std::string& msg) {
        if (!ok) fail(msg, sw.line, name);
    };
    const bool a_sudden = f.alice.switching.kind == SwitchingKindSpec::Sudden;
    const bool b_sudden = f.bob.switching.kind == SwitchingKindSpec::Sudden;
    if (name == "alice.duration")
        need(a_sudden, "alice.duration sweeps need sudden sender switching");
    else if (name == "bob.duration") {
        need(b_sudden, "bob.duration sweeps need sudden receiver switching");
        need(!f.bob.switching.duration_auto,
             "bob.duration is auto here; sweep alice.duration and let it follow");
    } else if (name == "duration") {
        need(a_sudden && b_sudden, "duration sweeps need sudden switching on both detectors");
        need(!f.bob.switching.duration_auto,
             "bob.duration is auto here; sweep alice.duration and let it follow");
    } else if (name == "alice.width")
        need(f.alice.switching.kind != SwitchingKindSpec::Sudden,
             "alice.width sweeps need gaussian or exponential sender switching");
    else if (name == "bob.width")
        need(f.bob.switching.kind != SwitchingKindSpec::Sudden,
             "bob.width sweeps need gaussian or exponential receiver switching");
    else if (name == "separation")
        need(f.bob.worldline.kind == WorldlineKindSpec::Rest,
             "separation sweeps place the receiver at rest at (value, 0, 0)");
    else if (name == "velocity")
        need(f.alice.worldline.kind == WorldlineKindSpec::Inertial,
             "velocity sweeps need an inertial sender");
    else if (name == "acceleration")
        need(f.alice.worldline.kind == WorldlineKindSpec::Accelerated,
             "acceleration sweeps need an accelerated sender");
    else if (name == "delay")
        need(a_sudden && b_sudden, "delay sweeps need sudden switching on both detectors");
    for (double v : sw.values) check_parameter_value(name, v, sw.line);
}

void validate(const ScenarioFile& f) {
    if (f.sweeps.size() == 2) {
        const auto& p0 = f.sweeps[0].parameter;
        const auto& p1 = f.sweeps[1].parameter;
        bool clash = p0 == p1 ||
                     (p0 == "duration" && (p1 == "alice.duration" || p1 == "bob.duration")) ||
                     (p1 == "duration" && (p0 == "alice.duration" || p0 == "bob.duration"));
        if (clash)
            fail("the two sweep blocks drive the same knob (" + p0 + ", " + p1 + ")",
                 f.sweeps[1].line, p1);
    }
    for (const auto& sw : f.sweeps) check_sweep_applicability(f, sw);
}

Worldline make_worldline(const WorldlineSpec& w) {
    switch (w.kind) {
    case WorldlineKindSpec::Rest: return Worldline::rest(w.position);
    case WorldlineKindSpec::Inertial: return Worldline::inertial(w.velocity, w.position);
    case WorldlineKindSpec::Accelerated: return Worldline::uniform_acceleration(w.acceleration);
    }
    return Worldline::rest({0, 0, 0});
}

SwitchingProfile make_switching(const SwitchingSpec& s) {
    switch (s.kind) {
    case SwitchingKindSpec::Sudden: return SwitchingProfile::sudden(s.start, s.duration);
    case SwitchingKindSpec::Gaussian: return SwitchingProfile::gaussian(s.center, s.width);
    case SwitchingKindSpec::Exponential: return SwitchingProfile::exponential_decay(s.width);
    }
    return SwitchingProfile::sudden(0, 1);
}

} // namespace

bool is_sweep_parameter(const std::string& name) {
    static const char* names[] = {"alice.gap",      "bob.gap",      "alice.coupling",
                                  "bob.coupling",   "alice.duration", "bob.duration",
                                  "duration",       "alice.width",  "bob.width",
                                  "separation",     "velocity",     "acceleration",
                                  "delay"};
    return std::find(std::begin(names), std::end(names), name) != std::end(names);
}

void apply_parameter(ScenarioFile& f, const std::string& name, double value) {
    check_parameter_value(name, value, 0);
    if (name == "alice.gap") f.alice.gap = value;
    else if (name == "bob.gap") f.bob.gap = value;
    else if (name == "alice.coupling") f.alice.coupling = value;
    else if (name == "bob.coupling") f.bob.coupling = value;
    else if (name == "alice.duration") f.alice.switching.duration = value;
    else if (name == "bob.duration") f.bob.switching.duration = value;
    else if (name == "duration") {
        f.alice.switching.duration = value;
        if (!f.bob.switching.duration_auto) f.bob.switching.duration = value;
    } else if (name == "alice.width") f.alice.switching.width = value;
    else if (name == "bob.width") f.bob.switching.width = value;
    else if (name == "separation") f.bob.worldline.position.x = value;
    else if (name == "velocity") f.alice.worldline.velocity = {-value, 0, 0};
    else if (name == "acceleration") f.alice.worldline.acceleration = value;
    else if (name == "delay") f.delay = value;
    else fail("unknown sweep parameter " + name, 0, name);
}

void resolve_windows(ScenarioFile& f) {
    auto& bob = f.bob.switching;
    if (f.delay) {
        if (f.alice.switching.kind != SwitchingKindSpec::Sudden ||
            bob.kind != SwitchingKindSpec::Sudden)
            fail("delay needs sudden switching on both detectors", 0, "delay");
        bob.start = f.alice.switching.start + f.alice.switching.duration + *f.delay;
        bob.start_auto = false;
    }
    if (!bob.start_auto && !bob.duration_auto) return;
    if (f.alice.switching.kind != SwitchingKindSpec::Sudden)
        fail("auto receiver windows take their endpoints from a sudden sender window", 0,
             "bob.start");
    Worldline wa = make_worldline(f.alice.worldline);
    Worldline wb = make_worldline(f.bob.worldline);
    const double tau_on = f.alice.switching.start;
    const double tau_off = tau_on + f.alice.switching.duration;
    std::optional<double> r_on, r_off;
    try {
        r_on = reception_proper_time(wa, wb, tau_on);
        r_off = reception_proper_time(wa, wb, tau_off);
    } catch (const std::invalid_argument& err) {
        fail(std::string("auto receiver windows: ") + err.what(), 0, "bob.start");
    }
    if (!r_on || !r_off)
        fail("no lightray connects the sender window to the receiver "
             "(it sits beyond a horizon)",
             0, "bob.start");
    if (bob.start_auto) {
        bob.start = *r_on;
        bob.start_auto = false;
    }
    if (bob.duration_auto) {
        bob.duration = *r_off - *r_on;
        bob.duration_auto = false;
        if (!(bob.duration > 0))
            fail("the lightray image of the sender window has nonpositive length", 0,
                 "bob.duration");
    }
}

Scenario build_scenario(const ScenarioFile& f) {
    if (f.bob.switching.start_auto || f.bob.switching.duration_auto)
        fail("auto windows must be resolved before building the scenario", 0, "bob.start");
    Scenario s;
    s.dimension = f.dimension;
    s.tail_cutoff = f.tail_cutoff;
    s.alice.coupling = f.alice.coupling;
    s.alice.gap = f.alice.gap;
    s.alice.worldline = make_worldline(f.alice.worldline);
    s.alice.switching = make_switching(f.alice.switching);
    s.bob.coupling = f.bob.coupling;
    s.bob.gap = f.bob.gap;
    s.bob.worldline = make_worldline(f.bob.worldline);
    s.bob.switching = make_switching(f.bob.switching);
    return s;
}

ScenarioFile parse_scenario_file(const std::string& text) {
    ScenarioFile f;
    auto sections = split_sections(text);
    bool saw_alice = false, saw_bob = false;
    for (const auto& sec : sections) {
        if (sec.name == "scenario") parse_scenario_section(sec, f);
        else if (sec.name == "alice") {
            parse_detector_section(sec, f.alice, false);
            saw_alice = true;
        } else if (sec.name == "bob") {
            parse_detector_section(sec, f.bob, true);
            saw_bob = true;
        } else if (sec.name == "quadrature") parse_quadrature_section(sec, f);
        else parse_sweep_section(sec, f);
    }
    if (!saw_alice) fail("missing [alice] section", 0, "alice");
    if (!saw_bob) fail("missing [bob] section", 0, "bob");
    validate(f);
    return f;
}

ScenarioFile load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path, 0, "");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_file(buf.str());
}

namespace {

bool near(double a, double b, double scale) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(scale));
}

ClosedFormValues rest_family(const ScenarioFile& f) {
    const auto& A = f.alice;
    const auto& B = f.bob;
    const double ll_a = A.coupling, ll_b = B.coupling;
    Vec3 d = B.worldline.position - A.worldline.position;
    if (std::abs(d.y) > 1e-12 || std::abs(d.z) > 1e-12)
        fail("the resting catalogue needs the detectors separated along the x axis", 0,
             "bob.position");
    const double L = std::abs(d.x);
    const double a_on = A.switching.start;
    const double a_off = a_on + A.switching.duration;
    ClosedFormValues out;
    if (f.dimension == 1 && B.switching.start > a_off + L + 1e-12 * std::max(1.0, a_off + L)) {
        // every receiver point strictly inside the future cone of the window
        auto pa = SwitchingProfile::sudden(A.switching.start, A.switching.duration);
        auto pb = SwitchingProfile::sudden(B.switching.start, B.switching.duration);
        auto c2 = timelike_1p1(pa, pb, A.gap, B.gap, ll_a, ll_b);
        auto d2 = -timelike_1p1(pa, pb, A.gap, -B.gap, ll_a, ll_b);
        out.c2 = c2;
        out.d2 = d2;
        out.strength = std::abs(c2) + std::abs(d2);
        out.family = ClosedFormCase::Timelike1p1Sudden;
        return out;
    }
    if (!near(a_on, 0.0, A.switching.duration))
        fail("the lightray-matched catalogue assumes the sender switches on at proper time 0",
             0, "alice.start");
    if (!(L > 0))
        fail("co-located resting detectors are covered only when strictly timelike separated "
             "in 1+1; use method = quadrature",
             0, "bob.position");
    if (!near(B.switching.start, L, L) || !near(B.switching.duration, A.switching.duration,
                                                A.switching.duration))
        fail("the receiver window must be the lightray image of the sender window; "
             "use start = auto and duration = auto",
             0, "bob.start");
    const double T = A.switching.duration;
    if (f.dimension == 2) {
        if (std::abs(A.gap) > 1e-15 || std::abs(B.gap) > 1e-15)
            fail("resting detectors in 2+1 close only at zero gap; use method = quadrature",
                 0, "alice.gap");
        out.strength = rest_2p1_zero_gap(L, T, ll_a, ll_b);
        out.family = ClosedFormCase::Rest2p1ZeroGap;
        return out;
    }
    out.c2 = rest_c2(f.dimension, A.gap, B.gap, L, T, ll_a, ll_b);
    out.d2 = -rest_c2(f.dimension, A.gap, -B.gap, L, T, ll_a, ll_b);
    out.strength = std::abs(*out.c2) + std::abs(*out.d2);
    const bool zero = std::abs(A.gap) < 1e-15 && std::abs(B.gap) < 1e-15;
    const bool res = near(A.gap, B.gap, std::max(std::abs(A.gap), 1.0));
    if (f.dimension == 3)
        out.family = zero ? ClosedFormCase::Rest3p1ZeroGap
                          : res ? ClosedFormCase::Rest3p1Resonant : ClosedFormCase::Rest3p1;
    else
        out.family = zero ? ClosedFormCase::Rest1p1ZeroGap
                          : res ? ClosedFormCase::Rest1p1Resonant : ClosedFormCase::Rest1p1;
    return out;
}

ClosedFormValues inertial_family(const ScenarioFile& f) {
    const auto& A = f.alice;
    const auto& B = f.bob;
    if (f.dimension == 2)
        fail("the inertial catalogue covers 1+1 and 3+1 only", 0, "scenario.dimension");
    if (A.switching.kind != SwitchingKindSpec::Sudden ||
        B.switching.kind != SwitchingKindSpec::Sudden)
        fail("the inertial catalogue needs sudden windows on both detectors", 0,
             "alice.switching");
    const Vec3 vel = A.worldline.velocity;
    if (std::abs(vel.y) > 1e-15 || std::abs(vel.z) > 1e-15 || vel.x > 1e-15)
        fail("the inertial catalogue covers collinear recession: velocity = -v 0 0", 0,
             "alice.velocity");
    const double v = -vel.x;
    const Vec3 pa = A.worldline.position;
    if (std::abs(pa.x) > 1e-12 || std::abs(pa.y) > 1e-12 || std::abs(pa.z) > 1e-12)
        fail("the inertial catalogue sends the sender through the origin at t = 0", 0,
             "alice.position");
    const Vec3 pb = B.worldline.position;
    if (std::abs(pb.y) > 1e-12 || std::abs(pb.z) > 1e-12 || !(pb.x > 0))
        fail("the inertial catalogue puts the receiver at rest at (L, 0, 0), L > 0", 0,
             "bob.position");
    if (!near(A.switching.start, 0.0, A.switching.duration))
        fail("the lightray-matched catalogue assumes the sender switches on at proper time 0",
             0, "alice.start");
    const double L = pb.x;
    const double T = A.switching.duration;
    const double zeta = doppler_factor(v);
    if (!near(B.switching.start, L, L) ||
        !near(B.switching.duration, zeta * T, zeta * T))
        fail("the receiver window must be the lightray image of the sender window "
             "(length zeta T); use start = auto and duration = auto",
             0, "bob.start");
    ClosedFormValues out;
    out.c2 = inertial_c2(f.dimension, A.gap, B.gap, L, T, v, A.coupling, B.coupling);
    out.d2 = -inertial_c2(f.dimension, A.gap, -B.gap, L, T, v, A.coupling, B.coupling);
    out.strength = std::abs(*out.c2) + std::abs(*out.d2);
    if (f.dimension == 1) {
        out.family = ClosedFormCase::Inertial1p1;
    } else {
        const double res_gap = A.gap / zeta;
        out.family = near(B.gap, res_gap, std::max(std::abs(res_gap), 1.0))
                         ? ClosedFormCase::Inertial3p1Resonant
                         : ClosedFormCase::Inertial3p1;
    }
    return out;
}

ClosedFormValues accel_family(const ScenarioFile& f) {
    const auto& A = f.alice;
    const auto& B = f.bob;
    const double a = A.worldline.acceleration;
    ClosedFormValues out;
    // The eternal-coupling values do not depend on the receiver's position or
    // on the window details, so any resting receiver qualifies; finite-window
    // bias shows up in the discrepancy column under method = both.
    if (f.dimension == 3) {
        const double x = B.gap / a, y = A.gap / a;
        if (!(y > 0) || !(x > 0))
            fail("the accelerated 3+1 catalogue needs positive gaps", 0, "alice.gap");
        out.strength = accel_3p1_strength(x, y, A.coupling, B.coupling);
        out.family = ClosedFormCase::Accel3p1;
        out.regime_limited = accel_3p1_oscillation_dominated(x);
        return out;
    }
    if (f.dimension == 1) {
        if (!(A.gap > 0) || !(B.gap > 0))
            fail("the accelerated 1+1 catalogue needs positive gaps", 0, "alice.gap");
        auto r = accel_1p1(A.gap, B.gap, a, A.coupling, B.coupling);
        out.c2 = r.c2;
        out.strength = r.strength;
        out.family = ClosedFormCase::Accel1p1Limit;
        return out;
    }
    fail("the accelerated catalogue covers 1+1 and 3+1 only", 0, "scenario.dimension");
}

} // namespace

ClosedFormValues evaluate_closed_form(const ScenarioFile& f) {
    if (f.bob.switching.start_auto || f.bob.switching.duration_auto)
        fail("auto windows must be resolved before evaluation", 0, "bob.start");
    if (f.bob.worldline.kind != WorldlineKindSpec::Rest)
        fail("the catalogue needs the receiver at rest; "
             "a moving receiver has no closed form here, use method = quadrature",
             0, "bob.worldline");
    try {
        switch (f.alice.worldline.kind) {
        case WorldlineKindSpec::Rest:
            if (f.alice.switching.kind != SwitchingKindSpec::Sudden ||
                f.bob.switching.kind != SwitchingKindSpec::Sudden)
                fail("the resting catalogue needs sudden windows on both detectors", 0,
                     "alice.switching");
            return rest_family(f);
        case WorldlineKindSpec::Inertial: return inertial_family(f);
        case WorldlineKindSpec::Accelerated: return accel_family(f);
        }
    } catch (const std::invalid_argument& err) {
        fail(std::string("no closed form covers this scenario: ") + err.what(), 0, "method");
    }
    fail("no closed form covers this scenario; use method = quadrature", 0, "method");
}

} // namespace udw

#include "chainsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "chainsim/bridge.hpp"
#include "chainsim/csv.hpp"
#include "chainsim/errors.hpp"

namespace chainsim {

std::string to_string(Scale s) {
    switch (s) {
        case Scale::Micro: return "micro";
        case Scale::Macro: return "macro";
        case Scale::Compare: return "compare";
        case Scale::ShockTrack: return "shock-track";
        case Scale::Equilibrium: return "equilibrium";
    }
    return "micro";
}

Scale scale_from_string(const std::string& s) {
    if (s == "micro") return Scale::Micro;
    if (s == "macro") return Scale::Macro;
    if (s == "compare") return Scale::Compare;
    if (s == "shock-track") return Scale::ShockTrack;
    if (s == "equilibrium") return Scale::Equilibrium;
    throw ConfigError("unknown scale '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': bad number '" + s + "'");
    }
}

int to_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': bad integer '" + s + "'");
    }
}

bool to_bool(const std::string& s, const std::string& key) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ConfigError("key '" + key + "': expected true or false, got '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

std::vector<double> tuple_of(const std::string& item, std::size_t arity, const std::string& key) {
    const auto parts = split(item, ':');
    if (parts.size() != arity)
        throw ConfigError("key '" + key + "': expected " + std::to_string(arity) +
                          " colon-separated numbers in '" + item + "'");
    std::vector<double> vals;
    for (const auto& p : parts) vals.push_back(to_double(p, key));
    return vals;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "scale") {
            cfg.scale = scale_from_string(value);
        } else if (key == "law") {
            if (value != "f1" && value != "f2" && value != "power" && value != "table")
                throw ConfigError("unknown law '" + value + "'");
            cfg.law = value;
        } else if (key == "law_m") {
            cfg.law_m = to_double(value, key);
        } else if (key == "law_table") {
            cfg.law_table = value == "none" ? "" : value;
        } else if (key == "law_lipschitz") {
            cfg.law_lipschitz = to_double(value, key);
        } else if (key == "velocity") {
            if (value != "zero" && value != "constant" && value != "piecewise")
                throw ConfigError("unknown velocity '" + value + "'");
            cfg.velocity = value;
        } else if (key == "velocity_c") {
            cfg.velocity_c = to_double(value, key);
        } else if (key == "velocity_knots") {
            cfg.velocity_knots.clear();
            if (value != "none")
                for (const auto& item : split(value, ',')) {
                    const auto t = tuple_of(item, 2, key);
                    cfg.velocity_knots.emplace_back(t[0], t[1]);
                }
        } else if (key == "init") {
            if (value != "bumps" && value != "constants" && value != "ramp" &&
                value != "waiting-time" && value != "csv")
                throw ConfigError("unknown init '" + value + "'");
            cfg.init = value;
        } else if (key == "init_bumps") {
            cfg.init_bumps.clear();
            if (value != "none")
                for (const auto& item : split(value, ',')) {
                    const auto t = tuple_of(item, 3, key);
                    cfg.init_bumps.push_back({t[0], t[1], t[2]});
                }
        } else if (key == "init_pieces") {
            cfg.init_pieces.clear();
            if (value != "none")
                for (const auto& item : split(value, ',')) {
                    const auto t = tuple_of(item, 3, key);
                    cfg.init_pieces.push_back({t[0], t[1], t[2]});
                }
        } else if (key == "init_ramp") {
            const auto t = tuple_of(value, 4, key);
            cfg.init_ramp = {t[0], t[1], t[2], t[3]};
        } else if (key == "init_offset") {
            cfg.init_offset = to_double(value, key);
        } else if (key == "init_csv") {
            cfg.init_csv = value == "none" ? "" : value;
        } else if (key == "domain_left") {
            cfg.domain_left = to_double(value, key);
        } else if (key == "domain_right") {
            cfg.domain_right = to_double(value, key);
        } else if (key == "n") {
            cfg.n = to_int(value, key);
        } else if (key == "dx") {
            cfg.dx = to_double(value, key);
        } else if (key == "t_final") {
            cfg.t_final = to_double(value, key);
        } else if (key == "dt") {
            cfg.dt = to_double(value, key);
        } else if (key == "cfl_ratio") {
            cfg.cfl_ratio = to_double(value, key);
        } else if (key == "fp_iters") {
            cfg.fp_iters = to_int(value, key);
        } else if (key == "sample_every") {
            cfg.sample_every = to_int(value, key);
        } else if (key == "growth_alpha") {
            cfg.growth_alpha = to_double(value, key);
        } else if (key == "growth_rho_star") {
            cfg.growth_rho_star = to_double(value, key);
        } else if (key == "jump_threshold") {
            cfg.jump_threshold = to_double(value, key);
        } else if (key == "shock_x0") {
            if (value == "auto")
                cfg.shock_x0.reset();
            else
                cfg.shock_x0 = to_double(value, key);
        } else if (key == "track_start") {
            cfg.track_start = to_double(value, key);
        } else if (key == "bracket_left") {
            if (value == "auto")
                cfg.bracket_left.reset();
            else
                cfg.bracket_left = to_double(value, key);
        } else if (key == "bracket_right") {
            if (value == "auto")
                cfg.bracket_right.reset();
            else
                cfg.bracket_right = to_double(value, key);
        } else if (key == "compare_times") {
            cfg.compare_times.clear();
            if (value != "none")
                for (const auto& item : split(value, ',')) cfg.compare_times.push_back(to_double(item, key));
        } else if (key == "legacy_drift_sign") {
            cfg.legacy_drift_sign = to_bool(value, key);
        } else if (key == "max_snapshots") {
            cfg.max_snapshots = to_int(value, key);
        } else if (key == "out") {
            if (value.empty()) throw ConfigError("out must name a directory");
            cfg.out = value;
        } else if (key == "deterministic") {
            cfg.deterministic = to_bool(value, key);
        } else if (key == "note") {
            cfg.notes.push_back(value);
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config file " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    RunConfig cfg = parse_config(ss.str());
    cfg.base_dir = file.parent_path();
    return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    const auto num = [](double v) { return csv::format(v); };
    out << "scale = " << to_string(cfg.scale) << '\n';
    out << "law = " << cfg.law << '\n';
    out << "law_m = " << num(cfg.law_m) << '\n';
    out << "law_table = " << (cfg.law_table.empty() ? "none" : cfg.law_table) << '\n';
    out << "law_lipschitz = " << num(cfg.law_lipschitz) << '\n';
    out << "velocity = " << cfg.velocity << '\n';
    out << "velocity_c = " << num(cfg.velocity_c) << '\n';
    out << "velocity_knots = ";
    if (cfg.velocity_knots.empty()) {
        out << "none";
    } else {
        for (std::size_t i = 0; i < cfg.velocity_knots.size(); ++i)
            out << (i ? "," : "") << num(cfg.velocity_knots[i].first) << ':'
                << num(cfg.velocity_knots[i].second);
    }
    out << '\n';
    out << "init = " << cfg.init << '\n';
    out << "init_bumps = ";
    if (cfg.init_bumps.empty()) {
        out << "none";
    } else {
        for (std::size_t i = 0; i < cfg.init_bumps.size(); ++i)
            out << (i ? "," : "") << num(cfg.init_bumps[i].h) << ':' << num(cfg.init_bumps[i].b)
                << ':' << num(cfg.init_bumps[i].m);
    }
    out << '\n';
    out << "init_pieces = ";
    if (cfg.init_pieces.empty()) {
        out << "none";
    } else {
        for (std::size_t i = 0; i < cfg.init_pieces.size(); ++i)
            out << (i ? "," : "") << num(cfg.init_pieces[i].left) << ':'
                << num(cfg.init_pieces[i].right) << ':' << num(cfg.init_pieces[i].value);
    }
    out << '\n';
    out << "init_ramp = " << num(cfg.init_ramp.intercept) << ':' << num(cfg.init_ramp.slope)
        << ':' << num(cfg.init_ramp.min) << ':' << num(cfg.init_ramp.max) << '\n';
    out << "init_offset = " << num(cfg.init_offset) << '\n';
    out << "init_csv = " << (cfg.init_csv.empty() ? "none" : cfg.init_csv) << '\n';
    out << "domain_left = " << num(cfg.domain_left) << '\n';
    out << "domain_right = " << num(cfg.domain_right) << '\n';
    out << "n = " << cfg.n << '\n';
    out << "dx = " << num(cfg.dx) << '\n';
    out << "t_final = " << num(cfg.t_final) << '\n';
    out << "dt = " << num(cfg.dt) << '\n';
    out << "cfl_ratio = " << num(cfg.cfl_ratio) << '\n';
    out << "fp_iters = " << cfg.fp_iters << '\n';
    out << "sample_every = " << cfg.sample_every << '\n';
    out << "growth_alpha = " << num(cfg.growth_alpha) << '\n';
    out << "growth_rho_star = " << num(cfg.growth_rho_star) << '\n';
    out << "jump_threshold = " << num(cfg.jump_threshold) << '\n';
    out << "shock_x0 = " << (cfg.shock_x0 ? num(*cfg.shock_x0) : std::string("auto")) << '\n';
    out << "track_start = " << num(cfg.track_start) << '\n';
    out << "bracket_left = " << (cfg.bracket_left ? num(*cfg.bracket_left) : std::string("auto"))
        << '\n';
    out << "bracket_right = "
        << (cfg.bracket_right ? num(*cfg.bracket_right) : std::string("auto")) << '\n';
    out << "compare_times = ";
    if (cfg.compare_times.empty()) {
        out << "none";
    } else {
        for (std::size_t i = 0; i < cfg.compare_times.size(); ++i)
            out << (i ? "," : "") << num(cfg.compare_times[i]);
    }
    out << '\n';
    out << "legacy_drift_sign = " << (cfg.legacy_drift_sign ? "true" : "false") << '\n';
    out << "max_snapshots = " << cfg.max_snapshots << '\n';
    out << "out = " << cfg.out << '\n';
    out << "deterministic = " << (cfg.deterministic ? "true" : "false") << '\n';
    for (const auto& n : cfg.notes) out << "note = " << n << '\n';
    return out.str();
}

void validate(const RunConfig& cfg) {
    if (!cfg.deterministic) throw ConfigError("stochastic runs are not supported");
    if (cfg.law == "power") {
        if (!(cfg.law_m >= 1.0)) throw ConfigError("law_m must be >= 1");
        if (cfg.scale == Scale::Micro || cfg.scale == Scale::Compare)
            throw ConfigError("power law violates the boundedness the particle system requires; "
                              "use f1, f2 or a table law");
    }
    if (cfg.law == "table" && cfg.law_table.empty())
        throw ConfigError("table law needs law_table");
    if (cfg.law == "table" && !(cfg.law_lipschitz > 0.0))
        throw ConfigError("law_lipschitz must be positive");
    if (cfg.velocity == "piecewise" && cfg.velocity_knots.size() < 2)
        throw ConfigError("piecewise velocity needs at least two knots");

    if (!(cfg.domain_right > cfg.domain_left))
        throw ConfigError("domain_right must exceed domain_left");
    if (!(cfg.dx > 0.0)) throw ConfigError("dx must be positive");
    if (!(cfg.t_final > 0.0)) throw ConfigError("t_final must be positive");
    if (cfg.dt < 0.0) throw ConfigError("dt must be nonnegative");
    if (!(cfg.cfl_ratio > 0.0 && cfg.cfl_ratio <= 0.5))
        throw ConfigError("cfl_ratio must lie in (0, 0.5]");
    if (cfg.n < 1) throw ConfigError("n must be at least 1");
    if (cfg.fp_iters < 1) throw ConfigError("fp_iters must be at least 1");
    if (cfg.sample_every < 1) throw ConfigError("sample_every must be at least 1");
    if (cfg.growth_alpha < 0.0) throw ConfigError("growth_alpha must be nonnegative");
    if (!(cfg.growth_rho_star > 0.0)) throw ConfigError("growth_rho_star must be positive");
    if (!(cfg.jump_threshold > 0.0)) throw ConfigError("jump_threshold must be positive");
    if (cfg.track_start < 0.0) throw ConfigError("track_start must be nonnegative");
    if (cfg.max_snapshots < 0) throw ConfigError("max_snapshots must be nonnegative");

    if (cfg.init == "bumps") {
        if (cfg.init_bumps.empty()) throw ConfigError("init = bumps needs init_bumps");
        for (const auto& bp : cfg.init_bumps) {
            if (!(bp.b > 0.0)) throw ConfigError("bump half-width must be positive");
            if (!(bp.h >= 0.0)) throw ConfigError("bump height must be nonnegative");
        }
    } else if (cfg.init == "constants") {
        if (cfg.init_pieces.empty()) throw ConfigError("init = constants needs init_pieces");
        for (const auto& p : cfg.init_pieces) {
            if (!(p.right > p.left)) throw ConfigError("piece must have right > left");
            if (!(p.value >= 0.0)) throw ConfigError("piece value must be nonnegative");
        }
        for (std::size_t i = 1; i < cfg.init_pieces.size(); ++i)
            if (cfg.init_pieces[i].left < cfg.init_pieces[i - 1].right)
                throw ConfigError("pieces must be sorted and non-overlapping");
    } else if (cfg.init == "ramp") {
        if (!(cfg.init_ramp.max >= cfg.init_ramp.min) || !(cfg.init_ramp.min >= 0.0))
            throw ConfigError("ramp clamp must satisfy 0 <= min <= max");
    } else if (cfg.init == "waiting-time") {
        if (cfg.init_offset != 0.0)
            throw ConfigError("the waiting-time datum is fully specified; init_offset must be 0");
    } else if (cfg.init == "csv") {
        if (cfg.init_csv.empty()) throw ConfigError("init = csv needs init_csv");
    }
    if (cfg.init_offset < 0.0) throw ConfigError("init_offset must be nonnegative");

    for (double t : cfg.compare_times)
        if (!(t > 0.0 && t <= cfg.t_final * (1.0 + 1e-12)))
            throw ConfigError("compare_times must lie in (0, t_final]");
    if (cfg.scale == Scale::Equilibrium && cfg.bracket_left && cfg.bracket_right &&
        !(*cfg.bracket_left < *cfg.bracket_right))
        throw ConfigError("bracket_left must be below bracket_right");
}

ForceLaw build_force_law(const RunConfig& cfg) {
    if (cfg.law == "f1") return ForceLaw::f1();
    if (cfg.law == "f2") return ForceLaw::f2();
    if (cfg.law == "power") return ForceLaw::power(cfg.law_m);
    const auto path = cfg.base_dir.empty() ? std::filesystem::path(cfg.law_table)
                                           : cfg.base_dir / cfg.law_table;
    return ForceLaw::table(csv::read_table_knots(path), cfg.law_lipschitz);
}

VelocityField build_velocity(const RunConfig& cfg) {
    if (cfg.velocity == "zero") return VelocityField::zero();
    if (cfg.velocity == "constant") return VelocityField::constant(cfg.velocity_c);
    return VelocityField::piecewise_linear(cfg.velocity_knots);
}

std::function<double(double)> build_initializer(const RunConfig& cfg) {
    if (cfg.init == "bumps") {
        std::vector<std::function<double(double)>> parts;
        for (const auto& bp : cfg.init_bumps) parts.push_back(bump_density(bp.h, bp.b, bp.m, 0.0));
        const double offset = cfg.init_offset;
        return [parts, offset](double x) {
            double v = offset;
            for (const auto& p : parts) v += p(x);
            return v;
        };
    }
    if (cfg.init == "constants") {
        const auto pieces = cfg.init_pieces;
        const double offset = cfg.init_offset;
        return [pieces, offset](double x) {
            for (const auto& p : pieces)
                if (x >= p.left && x < p.right) return p.value;
            return offset;
        };
    }
    if (cfg.init == "ramp") {
        const RampSpec r = cfg.init_ramp;
        return [r](double x) { return std::clamp(r.intercept + r.slope * x, r.min, r.max); };
    }
    if (cfg.init == "waiting-time") return waiting_time_density();
    throw ConfigError("init = csv has no closed-form initializer");
}

MacroState build_macro_initial(const RunConfig& cfg) {
    if (cfg.init == "csv") {
        const auto path = cfg.base_dir.empty() ? std::filesystem::path(cfg.init_csv)
                                               : cfg.base_dir / cfg.init_csv;
        return csv::read_density_csv(path);
    }
    const int cells =
        static_cast<int>(std::lround((cfg.domain_right - cfg.domain_left) / cfg.dx));
    if (cells < 5) throw ConfigError("domain shorter than 5 cells at the configured dx");
    return discretize(build_initializer(cfg), cfg.domain_left, cfg.dx, cells);
}

MicroState build_micro_initial(const RunConfig& cfg) {
    if (cfg.init == "csv") {
        const auto path = cfg.base_dir.empty() ? std::filesystem::path(cfg.init_csv)
                                               : cfg.base_dir / cfg.init_csv;
        return csv::read_positions_csv(path);
    }
    return particles_from_density(build_macro_initial(cfg), cfg.n);
}

namespace {

RunConfig make_preset(Scale scale, const std::function<void(RunConfig&)>& fill) {
    RunConfig cfg;
    cfg.scale = scale;
    fill(cfg);
    return cfg;
}

std::vector<std::pair<std::string, RunConfig>> build_presets() {
    std::vector<std::pair<std::string, RunConfig>> out;

    out.emplace_back("fig-micro-smoothing", make_preset(Scale::Micro, [](RunConfig& c) {
        c.law = "f1";
        c.init = "constants";
        c.init_pieces = {{0.0, 0.5, 2.0}};
        c.domain_left = 0.0;
        c.domain_right = 0.5;
        c.n = 20;
        c.t_final = 0.5;
        c.sample_every = 10;
        c.notes = {"clustered chain, every gap below the interaction radius",
                   "initial plateau height: free choice of this preset"};
    }));

    out.emplace_back("fig-micro-plateaus", make_preset(Scale::Micro, [](RunConfig& c) {
        c.law = "f1";
        c.init = "constants";
        c.init_pieces = {{0.0, 0.25, 2.0}, {0.25, 0.75, 0.5}, {0.75, 1.0, 1.0}};
        c.domain_left = 0.0;
        c.domain_right = 1.0;
        c.n = 20;
        c.t_final = 0.5;
        c.sample_every = 10;
        c.notes = {"gap profile with non-interacting plateaus separated by gaps >= 1",
                   "plateau heights and widths: free choice of this preset"};
    }));

    out.emplace_back("fig-micro-drift-v1", make_preset(Scale::Micro, [](RunConfig& c) {
        c.law = "f1";
        c.velocity = "piecewise";
        c.velocity_knots = {{-1.0, 0.5}, {1.0, 1.5}, {3.0, 0.5}};
        c.init = "constants";
        c.init_pieces = {{0.0, 0.5, 2.0}};
        c.domain_left = 0.0;
        c.domain_right = 0.5;
        c.n = 20;
        c.t_final = 0.5;
        c.sample_every = 10;
        c.notes = {"velocity profile v1 accelerating around x = 1; shape: free choice of this preset"};
    }));

    out.emplace_back("fig-micro-drift-v2", make_preset(Scale::Micro, [](RunConfig& c) {
        c.law = "f1";
        c.velocity = "piecewise";
        c.velocity_knots = {{-1.0, 1.0}, {1.0, 0.0}, {3.0, -1.0}};
        c.init = "constants";
        c.init_pieces = {{0.0, 0.5, 2.0}};
        c.domain_left = 0.0;
        c.domain_right = 0.5;
        c.n = 20;
        c.t_final = 1.0;
        c.sample_every = 20;
        c.notes = {"velocity profile v2 congregating agents around x = 1; "
                   "shape: free choice of this preset"};
    }));

    out.emplace_back("fig-macro-drift", make_preset(Scale::Macro, [](RunConfig& c) {
        c.law = "f1";
        c.velocity = "constant";
        c.velocity_c = 1.0;
        c.init = "bumps";
        c.init_bumps = {{3.0, 0.3, 0.0}};
        c.init_offset = 0.5;
        c.domain_left = -1.0;
        c.domain_right = 1.0;
        c.dx = 2e-3;
        c.t_final = 0.05;
        c.sample_every = 12500;
        c.notes = {"drift versus diffusion; density is transported along +v "
                   "(use --legacy-drift-sign for the drift-to-the-left variant)",
                   "offset and spacing: free choice of this preset"};
    }));

    out.emplace_back("fig-macro-shock", make_preset(Scale::ShockTrack, [](RunConfig& c) {
        c.law = "f1";
        c.init = "ramp";
        c.init_ramp = {1.0, -0.5, 0.2, 1.8};
        c.domain_left = -3.5;
        c.domain_right = 2.5;
        c.dx = 1e-3;
        c.t_final = 0.01;
        c.sample_every = 400;
        c.jump_threshold = 1e-3;
        c.track_start = 1e-3;
        c.max_snapshots = 25;
        c.notes = {"density crossing the threshold continuously; a jump forms at t > 0",
                   "ramp slope and clamp levels: free choice of this preset"};
    }));

    out.emplace_back("fig-macro-collide", make_preset(Scale::Macro, [](RunConfig& c) {
        c.law = "f1";
        c.init = "constants";
        c.init_pieces = {{-0.45, -0.05, 1.8}, {0.05, 0.45, 1.8}};
        c.domain_left = -1.0;
        c.domain_right = 1.0;
        c.dx = 4e-3;
        c.t_final = 1.2;
        c.sample_every = 25000;
        c.notes = {"two spreading plateaus merging into one equilibrium interval",
                   "plateau heights, widths and separation: free choice of this preset, "
                   "so the merge time is specific to it"};
    }));

    out.emplace_back("fig-macro-waiting", make_preset(Scale::Macro, [](RunConfig& c) {
        c.law = "f2";
        c.init = "waiting-time";
        c.domain_left = -0.5;
        c.domain_right = 0.5;
        c.dx = 2e-3;
        c.t_final = 0.05;
        c.sample_every = 2500;
        c.notes = {"support edges at x = +-1/4 stand still for a positive waiting period"};
    }));

    out.emplace_back("fig-compare-n40", make_preset(Scale::Compare, [](RunConfig& c) {
        c.law = "f1";
        c.init = "bumps";
        c.init_bumps = {{3.0, 0.3, 0.0}};
        c.init_offset = 0.5;
        c.domain_left = -0.6;
        c.domain_right = 0.6;
        c.dx = 1e-3;
        c.n = 40;
        c.t_final = 0.01;
        c.compare_times = {1e-3, 5e-3, 1e-2};
        c.sample_every = 10000;
        c.notes = {"window chosen so the density carries unit mass and the gap "
                   "variables map onto 1/rho"};
    }));

    out.emplace_back("fig-growth", make_preset(Scale::Macro, [](RunConfig& c) {
        c.law = "f1";
        c.growth_alpha = 0.5;
        c.growth_rho_star = 1.5;
        c.init = "bumps";
        c.init_bumps = {{3.0, 0.3, 0.0}};
        c.domain_left = -1.5;
        c.domain_right = 1.5;
        c.dx = 5e-3;
        c.t_final = 3.0;
        c.sample_every = 60000;
        c.notes = {"logistic production spreads the profile while diffusion caps it "
                   "near the interaction threshold",
                   "initial bump: free choice of this preset"};
    }));

    for (auto& [name, cfg] : out) validate(cfg);
    return out;
}

}  // namespace

const std::vector<std::pair<std::string, RunConfig>>& presets() {
    static const auto catalogue = build_presets();
    return catalogue;
}

const RunConfig& preset(const std::string& name) {
    for (const auto& [n, cfg] : presets())
        if (n == name) return cfg;
    throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace chainsim

#include "chainsim/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chainsim/bridge.hpp"
#include "chainsim/csv.hpp"
#include "chainsim/errors.hpp"
#include "chainsim/shock.hpp"
#include "chainsim/version.hpp"

namespace chainsim {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// keep at most `cap` states, always including the first and last
template <class State>
std::vector<State> thin(const std::vector<State>& states, int cap) {
    if (cap <= 0 || static_cast<int>(states.size()) <= cap) return states;
    std::vector<State> out;
    const std::size_t stride = (states.size() + cap - 1) / cap;
    for (std::size_t i = 0; i < states.size(); i += stride) out.push_back(states[i]);
    if (out.back().t != states.back().t) out.push_back(states.back());
    return out;
}

double micro_dt(const RunConfig& cfg) {
    if (cfg.dt > 0.0) return cfg.dt;
    const double ds = 1.0 / cfg.n;
    return 0.1 * ds * ds;
}

struct Writer {
    fs::path dir;
    std::vector<std::string>* files;

    fs::path operator()(const std::string& name) const {
        files->push_back(name);
        return dir / name;
    }
};

void run_micro(const RunConfig& cfg, const Writer& w) {
    const ForceLaw law = build_force_law(cfg);
    const VelocityField field = build_velocity(cfg);
    const MicroState initial = build_micro_initial(cfg);
    MicroTrajectory traj = simulate_micro(initial, cfg.t_final, micro_dt(cfg), law, field,
                                          cfg.fp_iters, cfg.sample_every);
    csv::write_micro_diagnostics(w("diagnostics.csv"), traj);
    traj.states = thin(traj.states, cfg.max_snapshots);
    csv::write_micro_trajectory(w("trajectory.csv"), traj);
}

void run_macro(const RunConfig& cfg, const Writer& w) {
    const ForceLaw law = build_force_law(cfg);
    const VelocityField field = build_velocity(cfg);
    std::optional<GrowthParams> growth;
    if (cfg.growth_alpha > 0.0) growth = GrowthParams{cfg.growth_alpha, cfg.growth_rho_star};
    MacroTrajectory traj = simulate_macro(build_macro_initial(cfg), cfg.t_final, cfg.cfl_ratio,
                                          law, field, growth, cfg.sample_every,
                                          cfg.legacy_drift_sign);
    csv::write_macro_diagnostics(w("diagnostics.csv"), traj);
    traj.states = thin(traj.states, cfg.max_snapshots);
    csv::write_macro_snapshots(w("snapshots.csv"), traj);
}

std::string run_shock_track(const RunConfig& cfg, const Writer& w) {
    const ForceLaw law = build_force_law(cfg);
    const VelocityField field = build_velocity(cfg);
    MacroTrajectory traj = simulate_macro(build_macro_initial(cfg), cfg.t_final, cfg.cfl_ratio,
                                          law, field, {}, cfg.sample_every,
                                          cfg.legacy_drift_sign);

    std::vector<MacroState> window;
    for (const auto& s : traj.states)
        if (s.t >= cfg.track_start * (1.0 - 1e-12)) window.push_back(s);
    if (window.size() < 2)
        throw ConfigError("track_start leaves fewer than two snapshots to track through");

    const TrackResult result = track_shock(window, law, field, cfg.shock_x0, cfg.jump_threshold);
    csv::write_shock_path(w("shock_path.csv"), result.path);
    csv::write_macro_diagnostics(w("diagnostics.csv"), traj);
    traj.states = thin(traj.states, cfg.max_snapshots);
    csv::write_macro_snapshots(w("snapshots.csv"), traj);
    if (result.status == TrackStatus::JumpDissolved)
        return "jump dissolved at t=" + csv::format(result.stop_time) +
               "; tracking handed back";
    return "tracking completed";
}

std::string run_equilibrium(const RunConfig& cfg, const Writer& w) {
    const MacroState grid = build_macro_initial(cfg);
    const double c = cfg.bracket_left.value_or(grid.x_left);
    const double d = cfg.bracket_right.value_or(grid.right_edge());
    const EquilibriumInterval eq = equilibrium_interval(grid, c, d);

    ordered_json j;
    j["a"] = eq.a;
    j["b"] = eq.b;
    j["residual_mass"] = eq.residual_mass;
    j["residual_com"] = eq.residual_com;
    std::ofstream out(w("equilibrium.json"), std::ios::binary);
    out << j.dump(2) << '\n';
    return "a=" + csv::format(eq.a) + " b=" + csv::format(eq.b);
}

void run_compare(const RunConfig& cfg, const Writer& w) {
    const ForceLaw law = build_force_law(cfg);
    const VelocityField field = build_velocity(cfg);
    const MacroState grid0 = build_macro_initial(cfg);
    const MicroState part0 = particles_from_density(grid0, cfg.n);

    std::vector<double> times = cfg.compare_times.empty() ? std::vector<double>{cfg.t_final}
                                                          : cfg.compare_times;
    std::sort(times.begin(), times.end());
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw ConfigError("compare_times must be distinct");

    // advance both scales segment-wise so every requested time is hit exactly
    MicroTrajectory micro;
    micro.states.push_back(part0);
    micro.diagnostics.push_back(diagnose(part0));
    MacroTrajectory macro;
    macro.states.push_back(grid0);
    for (double t : times) {
        const MicroState& mprev = micro.states.back();
        const MicroTrajectory mseg = simulate_micro(mprev, t - mprev.t, micro_dt(cfg), law,
                                                    field, cfg.fp_iters, 1 << 30);
        micro.states.push_back(mseg.states.back());
        micro.diagnostics.push_back(mseg.diagnostics.back());

        const MacroState& gprev = macro.states.back();
        const MacroTrajectory gseg =
            simulate_macro(gprev, t - gprev.t, cfg.cfl_ratio, law, field, {}, 1 << 30,
                           cfg.legacy_drift_sign);
        macro.states.push_back(gseg.states.back());
    }

    const auto comparison = compare_scales(micro, macro, times);
    csv::write_comparison(w("comparison.csv"), comparison, cfg.n, cfg.dx);
    csv::write_micro_trajectory(w("trajectory.csv"), micro);
    csv::write_micro_diagnostics(w("diagnostics_micro.csv"), micro);
    csv::write_macro_snapshots(w("snapshots.csv"), macro);
    csv::write_macro_diagnostics(w("diagnostics_macro.csv"), macro);
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j = ordered_json::object();
    ordered_json notes = ordered_json::array();
    std::istringstream lines(serialize_config(cfg));
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 3);
        if (key == "note")
            notes.push_back(value);
        else
            j[key] = value;
    }
    j["note"] = notes;
    return j;
}

}  // namespace

RunResult run(const RunConfig& cfg, const std::filesystem::path& out_dir) {
    RunResult result;
    std::string detail;
    try {
        validate(cfg);
        fs::create_directories(out_dir);
        const Writer w{out_dir, &result.files};
        switch (cfg.scale) {
            case Scale::Micro:
                run_micro(cfg, w);
                break;
            case Scale::Macro:
                run_macro(cfg, w);
                break;
            case Scale::ShockTrack:
                detail = run_shock_track(cfg, w);
                break;
            case Scale::Equilibrium:
                detail = run_equilibrium(cfg, w);
                break;
            case Scale::Compare:
                run_compare(cfg, w);
                break;
        }
        result.message = detail.empty() ? "ok" : detail;
    } catch (const NumericalError& e) {
        result.status = 3;
        result.message = e.what();
    } catch (const ConfigError& e) {
        result.status = 2;
        result.message = e.what();
    } catch (const std::domain_error& e) {
        result.status = 2;
        result.message = e.what();
    } catch (const std::exception& e) {
        result.status = 3;
        result.message = e.what();
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    ordered_json manifest;
    manifest["tool"] = kToolName;
    manifest["version"] = kVersion;
    manifest["command"] = to_string(cfg.scale);
    manifest["status"] = result.status;
    manifest["message"] = result.message;
    manifest["config"] = config_json(cfg);
    manifest["outputs"] = result.files;
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    if (out) {
        out << manifest.dump(2) << '\n';
        result.files.push_back("manifest.json");
    }
    return result;
}

}  // namespace chainsim

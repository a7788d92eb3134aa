#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainsim/force_law.hpp"
#include "chainsim/macro.hpp"
#include "chainsim/micro.hpp"
#include "chainsim/velocity_field.hpp"

namespace chainsim {

enum class Scale { Micro, Macro, Compare, ShockTrack, Equilibrium };

std::string to_string(Scale s);
Scale scale_from_string(const std::string& s);

struct BumpSpec {
    double h = 1.0, b = 0.5, m = 0.0;
};

struct PieceSpec {
    double left = 0.0, right = 1.0, value = 1.0;
};

struct RampSpec {
    double intercept = 1.0, slope = 0.0, min = 0.0, max = 1.0;
};

// Flat, typed run description. Everything a run consumes lives here; the
// manifest always records the fully resolved set.
struct RunConfig {
    Scale scale = Scale::Micro;

    std::string law = "f1";  // f1 | f2 | power | table
    double law_m = 2.0;
    std::string law_table;  // csv path for table laws
    double law_lipschitz = 1.0;

    std::string velocity = "zero";  // zero | constant | piecewise
    double velocity_c = 0.0;
    std::vector<std::pair<double, double>> velocity_knots;

    std::string init = "constants";  // bumps | constants | ramp | waiting-time | csv
    std::vector<BumpSpec> init_bumps;
    std::vector<PieceSpec> init_pieces;
    RampSpec init_ramp;
    double init_offset = 0.0;
    std::string init_csv;

    double domain_left = 0.0;
    double domain_right = 1.0;

    int n = 20;          // particle gaps (micro / compare)
    double dx = 1e-3;    // grid spacing (macro side)
    double t_final = 0.1;
    double dt = 0.0;     // micro step; 0 selects 0.1 ds^2
    double cfl_ratio = 0.1;
    int fp_iters = 40;
    int sample_every = 100;

    double growth_alpha = 0.0;  // 0 disables the logistic source
    double growth_rho_star = 1.0;

    double jump_threshold = 0.1;
    std::optional<double> shock_x0;
    double track_start = 0.0;  // tracking begins at the first snapshot >= this

    std::optional<double> bracket_left;   // default: domain edges
    std::optional<double> bracket_right;

    std::vector<double> compare_times;  // default: t_final only

    bool legacy_drift_sign = false;
    int max_snapshots = 0;  // cap exported grid snapshots; 0 = all sampled
    std::string out = "out";  // output directory; the --out flag overrides it
    bool deterministic = true;

    std::vector<std::string> notes;

    // directory config-relative paths resolve against; not serialized
    std::filesystem::path base_dir;
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::filesystem::path& file);
std::string serialize_config(const RunConfig& cfg);

// Cross-field validation against the preconditions of the target modules.
// Throws ConfigError.
void validate(const RunConfig& cfg);

ForceLaw build_force_law(const RunConfig& cfg);
VelocityField build_velocity(const RunConfig& cfg);

// Initial density over the configured domain (not used for init = csv).
std::function<double(double)> build_initializer(const RunConfig& cfg);

// Grid initial state: discretized initializer, or the csv grid for init = csv.
MacroState build_macro_initial(const RunConfig& cfg);

// Particle initial state: quantiles of the grid initial state, or the csv
// positions for init = csv.
MicroState build_micro_initial(const RunConfig& cfg);

const std::vector<std::pair<std::string, RunConfig>>& presets();
const RunConfig& preset(const std::string& name);  // throws ConfigError if unknown

}  // namespace chainsim

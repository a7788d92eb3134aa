#include <CLI11.hpp>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <thread>
#include <vector>

#include "chainsim/config.hpp"
#include "chainsim/errors.hpp"
#include "chainsim/run.hpp"
#include "chainsim/version.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOpts {
    std::vector<std::string> configs;
    std::string preset_name;
    std::string out_dir;  // empty: use the config's own `out`
    bool legacy_drift_sign = false;
    int sweep = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.configs, "run configuration file(s)");
    cmd->add_option("--preset", opts.preset_name, "built-in experiment name");
    cmd->add_option("--out", opts.out_dir, "output directory (overrides the config's out)");
    cmd->add_flag("--legacy-drift-sign", opts.legacy_drift_sign,
                  "transport the density against v instead of along it");
    cmd->add_option("--sweep", opts.sweep, "max configs run concurrently")
        ->check(CLI::PositiveNumber);
}

struct Job {
    chainsim::RunConfig cfg;
    fs::path dir;
    std::string label;
};

int run_jobs(std::vector<Job> jobs, int sweep) {
    std::atomic<int> next{0};
    std::vector<int> statuses(jobs.size(), 0);
    std::vector<std::string> messages(jobs.size());

    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= static_cast<int>(jobs.size())) break;
            const chainsim::RunResult r = chainsim::run(jobs[i].cfg, jobs[i].dir);
            statuses[i] = r.status;
            messages[i] = r.message;
        }
    };

    const int n_threads = std::min<int>(sweep, static_cast<int>(jobs.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    int status = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (statuses[i] == 0)
            std::cout << jobs[i].label << ": " << messages[i] << " -> " << jobs[i].dir.string()
                      << '\n';
        else
            std::cerr << jobs[i].label << ": error (" << statuses[i] << "): " << messages[i]
                      << '\n';
        status = std::max(status, statuses[i]);
    }
    return status;
}

int run_scale(chainsim::Scale scale, const CommonOpts& opts) {
    std::vector<Job> jobs;
    try {
        if (!opts.preset_name.empty()) {
            chainsim::RunConfig cfg = chainsim::preset(opts.preset_name);
            if (cfg.scale != scale)
                throw chainsim::ConfigError("preset '" + opts.preset_name + "' has scale " +
                                            chainsim::to_string(cfg.scale) +
                                            ", not " + chainsim::to_string(scale));
            cfg.legacy_drift_sign = cfg.legacy_drift_sign || opts.legacy_drift_sign;
            const fs::path dir = opts.out_dir.empty() ? cfg.out : opts.out_dir;
            jobs.push_back({std::move(cfg), dir, opts.preset_name});
        }
        for (const auto& path : opts.configs) {
            chainsim::RunConfig cfg = chainsim::parse_config_file(path);
            if (cfg.scale != scale)
                throw chainsim::ConfigError(path + ": config has scale " +
                                            chainsim::to_string(cfg.scale) + ", not " +
                                            chainsim::to_string(scale));
            cfg.legacy_drift_sign = cfg.legacy_drift_sign || opts.legacy_drift_sign;
            const std::string stem = fs::path(path).stem().string();
            const fs::path base = opts.out_dir.empty() ? fs::path(cfg.out) : fs::path(opts.out_dir);
            const fs::path dir = (opts.configs.size() + (opts.preset_name.empty() ? 0 : 1)) > 1
                                     ? base / stem
                                     : base;
            jobs.push_back({std::move(cfg), dir, stem});
        }
    } catch (const std::exception& e) {
        std::cerr << "error (2): " << e.what() << '\n';
        return 2;
    }
    if (jobs.empty()) {
        std::cerr << "error (2): provide --config or --preset\n";
        return 2;
    }
    return run_jobs(std::move(jobs), opts.sweep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-scale simulator for repelling particle chains and their "
                 "nonlinear-diffusion limit"};
    app.set_version_flag("--version", std::string(chainsim::kVersion));
    app.require_subcommand(1);

    struct SubSpec {
        const char* name;
        const char* help;
        chainsim::Scale scale;
    };
    const std::vector<SubSpec> specs = {
        {"simulate-micro", "integrate the particle chain", chainsim::Scale::Micro},
        {"simulate-macro", "integrate the density equation", chainsim::Scale::Macro},
        {"shock-track", "integrate the density equation and track a jump",
         chainsim::Scale::ShockTrack},
        {"equilibrium", "predict the equilibrium plateau interval", chainsim::Scale::Equilibrium},
        {"compare", "run both scales and measure their L1 distance", chainsim::Scale::Compare},
    };

    std::vector<CommonOpts> opts(specs.size());
    std::vector<CLI::App*> cmds;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CLI::App* cmd = app.add_subcommand(specs[i].name, specs[i].help);
        add_common(cmd, opts[i]);
        cmds.push_back(cmd);
    }

    std::string show_name;
    CLI::App* presets_cmd = app.add_subcommand("presets", "list the built-in experiments");
    presets_cmd->add_option("--show", show_name, "print the full configuration of one preset");

    CLI11_PARSE(app, argc, argv);

    if (presets_cmd->parsed()) {
        try {
            if (!show_name.empty()) {
                std::cout << chainsim::serialize_config(chainsim::preset(show_name));
            } else {
                for (const auto& [name, cfg] : chainsim::presets())
                    std::cout << name << " (" << chainsim::to_string(cfg.scale) << ")\n";
            }
        } catch (const std::exception& e) {
            std::cerr << "error (2): " << e.what() << '\n';
            return 2;
        }
        return 0;
    }

    for (std::size_t i = 0; i < specs.size(); ++i)
        if (cmds[i]->parsed()) return run_scale(specs[i].scale, opts[i]);
    return 2;
}

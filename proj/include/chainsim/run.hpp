#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chainsim/config.hpp"

namespace chainsim {

struct RunResult {
    int status = 0;  // 0 ok, 2 config error, 3 numerical error
    std::string message;
    std::vector<std::string> files;  // written artifacts, relative to out_dir
};

// Execute one configured experiment, writing its CSV/JSON artifacts and a
// manifest.json with the fully resolved configuration into out_dir. Never
// throws; failures are reported through the status.
RunResult run(const RunConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace chainsim

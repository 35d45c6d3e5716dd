#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mclab/config.hpp"
#include "mclab/sweep.hpp"

namespace mclab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // e.g. coloring is not MC
inline constexpr int kExitUsage = 2;     // bad flags, files or config

// `mclab gen|analyze|verify|sweep|threshold ...`; args exclude the program
// name. MCLAB_WORKERS, when set, overrides the sweep worker count.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// JSON sidecar written next to a sweep CSV.
std::string sweep_sidecar_json(const ExperimentConfig& config,
                               const SweepReport& report,
                               const std::string& csv_path);

}  // namespace mclab::cli

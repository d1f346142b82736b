#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mscheme/presets.hpp"
#include "mscheme/solver.hpp"
#include "mscheme/sweep.hpp"

namespace mscheme {

/// Fully validated run description assembled from a JSON config document
/// (preset defaults, then params overrides, then --set overrides). Unknown
/// keys anywhere in the document are hard errors.
struct RunSpec {
    Command command = Command::kSweep;
    SystemParams params;
    std::string preset_name;

    std::optional<SweepAxis> axis;

    std::optional<RampSpec> ramp;
    int ramp_samples = 101;

    double t_end = 10.0;
    int time_samples = 101;
    LevelIndex initial_level{1};

    std::pair<LevelIndex, LevelIndex> channel{{2}, {5}};
    std::string output_path = "out.csv";
};

/// Parse a config document. `overrides` are "dotted.key=value" pairs applied
/// onto the document before validation (the --set flag). `command_arg`, when
/// nonempty, is the CLI subcommand and must agree with any "command" key.
RunSpec parse_config(const std::string& json_text, const std::vector<std::string>& overrides = {},
                     const std::string& command_arg = "");

RunSpec parse_config_file(const std::string& path,
                          const std::vector<std::string>& overrides = {},
                          const std::string& command_arg = "");

}  // namespace mscheme

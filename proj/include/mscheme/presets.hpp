#pragma once

#include <string>
#include <vector>

#include "mscheme/sweep.hpp"

namespace mscheme {

enum class Command { kSteady, kEvolve, kRamp, kSweep, kDressed };

std::string to_string(Command c);
Command command_from_string(const std::string& name);

/// Named parameter set with command defaults. The four shipped presets carry
/// the common operating points of the five-level transfer scheme.
struct Preset {
    std::string name;
    std::string description;
    SystemParams params;
    Command default_command = Command::kSweep;
    SweepAxis default_axis;
    std::pair<LevelIndex, LevelIndex> default_channel{{2}, {5}};
};

const std::vector<Preset>& all_presets();
const Preset& preset_by_name(const std::string& name);  // ValidationError if missing

/// Multi-line parameter listing (used by --list-presets and run summaries).
std::string pretty_print(const SystemParams& params);

}  // namespace mscheme

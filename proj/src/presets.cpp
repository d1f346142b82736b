#include "mscheme/presets.hpp"

#include <sstream>

namespace mscheme {

std::string to_string(Command c) {
    switch (c) {
        case Command::kSteady: return "steady";
        case Command::kEvolve: return "evolve";
        case Command::kRamp: return "ramp";
        case Command::kSweep: return "sweep";
        case Command::kDressed: return "dressed";
    }
    return "unknown";
}

Command command_from_string(const std::string& name) {
    if (name == "steady") return Command::kSteady;
    if (name == "evolve") return Command::kEvolve;
    if (name == "ramp") return Command::kRamp;
    if (name == "sweep") return Command::kSweep;
    if (name == "dressed") return Command::kDressed;
    throw ValidationError("unknown command \"" + name + "\"");
}

namespace {

SystemParams caption_params() {
    SystemParams p;
    p.rabi = {Complex(0.75), Complex(1.5), Complex(0.01), Complex(0.1)};
    p.detuning = {20.0, 0.0, 20.0, 20.0};
    p.decay = DecayRates{1.0, 1.0, 0.25, 0.25, 1.0, 1.0};
    p.dephasing = 0.01;
    p.topology = CouplingMap::m_scheme();
    return p;
}

std::vector<Preset> make_presets() {
    std::vector<Preset> out;

    Preset fig1a;
    fig1a.name = "fig1a";
    fig1a.description = "bare populations vs locked detuning delta3 = delta4";
    fig1a.params = caption_params();
    fig1a.default_command = Command::kSweep;
    fig1a.default_axis = SweepAxis::uniform(SweepParameter::kDelta3Locked, -40.0, 40.0, 161);
    out.push_back(fig1a);

    Preset fig1b;
    fig1b.name = "fig1b";
    fig1b.description = "bare populations vs cross-decay rate gamma25 at delta3 = delta4 = 20";
    fig1b.params = caption_params();
    fig1b.default_command = Command::kSweep;
    fig1b.default_axis = SweepAxis::uniform(SweepParameter::kGamma25, 0.0, 0.5, 51);
    out.push_back(fig1b);

    Preset fig2;
    fig2.name = "fig2";
    fig2.description = "dressed populations and eigenvalues vs locked detuning";
    fig2.params = caption_params();
    fig2.default_command = Command::kSweep;
    fig2.default_axis = SweepAxis::uniform(SweepParameter::kDelta3Locked, -40.0, 40.0, 161);
    out.push_back(fig2);

    Preset fig3a;
    fig3a.name = "fig3a";
    fig3a.description = "detunings delta1 and delta2 exchanged: delta1 = 0, delta2 = 20";
    fig3a.params = caption_params();
    fig3a.params.detuning[0] = 0.0;
    fig3a.params.detuning[1] = 20.0;
    fig3a.default_command = Command::kSweep;
    fig3a.default_axis = SweepAxis::uniform(SweepParameter::kDelta3Locked, -40.0, 40.0, 161);
    out.push_back(fig3a);

    return out;
}

}  // namespace

const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> presets = make_presets();
    return presets;
}

const Preset& preset_by_name(const std::string& name) {
    for (const auto& p : all_presets())
        if (p.name == name) return p;
    throw ValidationError("unknown preset \"" + name + "\"");
}

std::string pretty_print(const SystemParams& params) {
    std::ostringstream os;
    os << "topology: " << params.topology.name() << "\n";
    const char* omega_names[] = {"omega1", "omega2", "omega3", "omega4"};
    for (int k = 0; k < 4; ++k) {
        os << omega_names[k] << ": " << params.rabi[k].real();
        if (params.rabi[k].imag() != 0) os << (params.rabi[k].imag() > 0 ? "+" : "") << params.rabi[k].imag() << "i";
        os << "  ";
    }
    os << "\n";
    const char* delta_names[] = {"delta1", "delta2", "delta3", "delta4"};
    for (int k = 0; k < 4; ++k) os << delta_names[k] << ": " << params.detuning[k] << "  ";
    os << "\n";
    os << "gamma12: " << params.decay.g12 << "  gamma23: " << params.decay.g23
       << "  gamma25: " << params.decay.g25 << "  gamma14: " << params.decay.g14
       << "  gamma34: " << params.decay.g34 << "  gamma45: " << params.decay.g45 << "\n";
    os << "gamma_d: " << params.dephasing << "\n";
    return os.str();
}

}  // namespace mscheme

#include "mscheme/sweep.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace mscheme {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

std::string to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::kDelta3Locked: return "delta3_locked";
        case SweepParameter::kDelta1: return "delta1";
        case SweepParameter::kDelta2: return "delta2";
        case SweepParameter::kDelta3: return "delta3";
        case SweepParameter::kDelta4: return "delta4";
        case SweepParameter::kGamma25: return "gamma25";
        case SweepParameter::kGamma14: return "gamma14";
        case SweepParameter::kOmega1Mag: return "omega1";
        case SweepParameter::kOmega2Mag: return "omega2";
        case SweepParameter::kOmega3Mag: return "omega3";
        case SweepParameter::kOmega4Mag: return "omega4";
    }
    return "unknown";
}

SweepParameter sweep_parameter_from_string(const std::string& name) {
    static const std::map<std::string, SweepParameter> table = {
        {"delta3_locked", SweepParameter::kDelta3Locked},
        {"delta1", SweepParameter::kDelta1},
        {"delta2", SweepParameter::kDelta2},
        {"delta3", SweepParameter::kDelta3},
        {"delta4", SweepParameter::kDelta4},
        {"gamma25", SweepParameter::kGamma25},
        {"gamma14", SweepParameter::kGamma14},
        {"omega1", SweepParameter::kOmega1Mag},
        {"omega2", SweepParameter::kOmega2Mag},
        {"omega3", SweepParameter::kOmega3Mag},
        {"omega4", SweepParameter::kOmega4Mag},
    };
    auto it = table.find(name);
    if (it == table.end()) throw ValidationError("unknown sweep parameter \"" + name + "\"");
    return it->second;
}

SweepAxis SweepAxis::uniform(SweepParameter p, double lo, double hi, int points) {
    if (points < 1) throw ValidationError("sweep axis needs at least one point");
    if (points > 1 && hi <= lo) throw ValidationError("sweep axis range must be increasing");
    SweepAxis axis;
    axis.parameter = p;
    axis.values.reserve(points);
    for (int k = 0; k < points; ++k)
        axis.values.push_back(points == 1 ? lo : lo + (hi - lo) * k / (points - 1));
    return axis;
}

void SweepAxis::validate() const {
    if (values.empty()) throw ValidationError("sweep axis values must be nonempty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) throw ValidationError("sweep axis values must be finite");
        if (i > 0 && values[i] <= values[i - 1])
            throw ValidationError("sweep axis values must be strictly increasing");
    }
}

SystemParams apply_axis_value(SystemParams base, SweepParameter p, double value) {
    auto scale_omega = [&](int k) {
        const Complex w = base.rabi[k];
        base.rabi[k] = (std::abs(w) > 0) ? Complex(value) * (w / std::abs(w)) : Complex(value);
    };
    switch (p) {
        case SweepParameter::kDelta3Locked:
            base.detuning[2] = value;
            base.detuning[3] = value;
            break;
        case SweepParameter::kDelta1: base.detuning[0] = value; break;
        case SweepParameter::kDelta2: base.detuning[1] = value; break;
        case SweepParameter::kDelta3: base.detuning[2] = value; break;
        case SweepParameter::kDelta4: base.detuning[3] = value; break;
        case SweepParameter::kGamma25: base.decay.g25 = value; break;
        case SweepParameter::kGamma14: base.decay.g14 = value; break;
        case SweepParameter::kOmega1Mag: scale_omega(0); break;
        case SweepParameter::kOmega2Mag: scale_omega(1); break;
        case SweepParameter::kOmega3Mag: scale_omega(2); break;
        case SweepParameter::kOmega4Mag: scale_omega(3); break;
    }
    return base;
}

SweepTable run_sweep(const SystemParams& base, const SweepAxis& axis,
                     std::pair<LevelIndex, LevelIndex> channel_for_expansion,
                     const std::vector<int>& branch_selection, double dominance_threshold) {
    base.validate();
    axis.validate();

    SweepTable table;
    table.axis = axis;
    const std::size_t n = axis.values.size();

    std::vector<Hamiltonian> hs;
    hs.reserve(n);
    for (double v : axis.values)
        hs.push_back(build_hamiltonian(apply_axis_value(base, axis.parameter, v)));
    table.bases = track_branches(hs);

    for (std::size_t i = 0; i < n; ++i) {
        const SystemParams p = apply_axis_value(base, axis.parameter, axis.values[i]);
        const DressedBasis& basis = table.bases[i];
        table.eigenvalues.push_back(basis.eigenvalues);

        bool flagged = false;
        std::array<double, 5> pops{}, dpops{};
        double residual = kNaN, gap = kNaN;
        std::string pair = "degenerate";
        const Liouvillian lv = liouvillian(hs[i], collapse_operators(p));
        try {
            const SteadyStateResult ss = steady_state(lv);
            for (int k = 0; k < kLevels; ++k)
                pops[k] = ss.state.matrix()(k, k).real();
            dpops = dressed_populations(ss.state.matrix(), basis);
            residual = ss.residual;
            gap = ss.gap;
            const DecayExpansion ex =
                decay_expansion(basis, channel_for_expansion.first, channel_for_expansion.second);
            const auto dom = dominant_terms(ex, dominance_threshold, branch_selection);
            pair = dom.empty() ? "none" : pair_tag(dom.front());
        } catch (const DegenerateSteadyState&) {
            flagged = true;
            pops.fill(kNaN);
            dpops.fill(kNaN);
            gap = spectral_gap(lv);
        }
        table.bare_populations.push_back(pops);
        table.dressed_populations.push_back(dpops);
        table.residual.push_back(residual);
        table.gap.push_back(gap);
        table.dominant_pair.push_back(pair);
        table.flagged.push_back(flagged);
    }
    return table;
}

}  // namespace mscheme

#pragma once

#include <string>
#include <vector>

#include "mscheme/dressed.hpp"
#include "mscheme/solver.hpp"

namespace mscheme {

enum class SweepParameter {
    kDelta3Locked,  // delta3 swept with delta4 = delta3 at every point
    kDelta1,
    kDelta2,
    kDelta3,
    kDelta4,
    kGamma25,
    kGamma14,
    kOmega1Mag,  // magnitude scaled, phase kept
    kOmega2Mag,
    kOmega3Mag,
    kOmega4Mag,
};

std::string to_string(SweepParameter p);
SweepParameter sweep_parameter_from_string(const std::string& name);

struct SweepAxis {
    SweepParameter parameter = SweepParameter::kDelta3Locked;
    std::vector<double> values;  // finite, nonempty, increasing

    static SweepAxis uniform(SweepParameter p, double lo, double hi, int points);
    void validate() const;
};

SystemParams apply_axis_value(SystemParams base, SweepParameter p, double value);

/// One row per axis value. Rows where the steady-state solve was degenerate
/// are flagged: their state-dependent columns hold NaN and dominant_pair
/// reads "degenerate" (the eigenvalue columns are still filled from H).
struct SweepTable {
    SweepAxis axis;
    std::vector<std::array<double, 5>> bare_populations;     // rho11..rho55
    std::vector<std::array<double, 5>> dressed_populations;  // p0..p4
    std::vector<std::array<double, 5>> eigenvalues;          // eps0..eps4
    std::vector<double> residual;
    std::vector<double> gap;
    std::vector<std::string> dominant_pair;
    std::vector<bool> flagged;
    std::vector<DressedBasis> bases;  // tracked, one per row
};

/// Steady state + dressed analysis per axis point, with branch labels tracked
/// sequentially across the sweep. The decay expansion behind dominant_pair is
/// restricted to branch_selection (the {e0, e3, e4} set by default, matching
/// the transfer analysis).
SweepTable run_sweep(const SystemParams& base, const SweepAxis& axis,
                     std::pair<LevelIndex, LevelIndex> channel_for_expansion = {{2}, {5}},
                     const std::vector<int>& branch_selection = {0, 3, 4},
                     double dominance_threshold = 0.3);

}  // namespace mscheme

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mscheme/lindblad.hpp"
#include "mscheme/model.hpp"

namespace mscheme {

struct SteadyStateResult {
    DensityMatrix state;
    double residual = 0;  // max |L vec(rho)| on the unmodified generator
    double gap = 0;       // second-smallest singular value of L
};

/// Unique steady state of L: replace the row vec_index(1,1) with the trace
/// functional, solve against the unit right-hand side, Hermitize, and verify
/// the residual on the original L. The nullspace must be one-dimensional
/// (second-smallest singular value > 1e-8).
SteadyStateResult steady_state(const Liouvillian& lv);

/// Second-smallest singular value of L (certified lower bound on the distance
/// to a second stationary direction).
double spectral_gap(const Liouvillian& lv);

constexpr double kDegeneracyGap = 1e-8;

/// Time-evolution record. Stored states are Hermitized and trace-normalized
/// samples of the integrator state; trace_drift and herm_drift report the
/// raw (unnormalized) worst-case deviations over all samples.
struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::map<std::string, std::vector<double>> observables;  // rho11..rho55, coh12_abs, coh13_abs
    std::vector<double> tracking_error;  // adiabatic ramps only
    double trace_drift = 0;
    double herm_drift = 0;
};

/// Fixed-parameter evolution d vec(rho)/dt = L vec(rho), propagated with the
/// matrix exponential of L*dt between uniform samples (exact for constant L,
/// which meets the trace/Hermiticity/step-halving accuracy contract).
/// n_samples >= 2; sample times are k*t_end/(n_samples-1).
Trajectory evolve(const DensityMatrix& rho0, const SystemParams& params, double t_end,
                  int n_samples);

enum class RampTarget { kDelta3, kDelta3Delta4Locked };
enum class RampShape { kLinear, kSmoothstep };

struct RampSpec {
    RampTarget target = RampTarget::kDelta3Delta4Locked;
    double start_value = 0;
    double end_value = 0;
    double duration = 0;  // > 0
    RampShape shape = RampShape::kLinear;
};

/// Detuning ramp: integrates the time-dependent generator L(t) with an
/// exponential midpoint rule under step-doubling error control (the generator
/// is affine in the ramped detuning, so L(t) = L0 + g(t) L1). At each sample
/// the instantaneous steady state is computed and tracking_error records the
/// max-entry distance to it. Throws StepFailure below the step floor and
/// DegenerateSteadyState (with the ramp time) if any sampled instant is
/// degenerate.
Trajectory adiabatic_ramp(const DensityMatrix& rho0, const SystemParams& params,
                          const RampSpec& ramp, int n_samples);

}  // namespace mscheme

#include "mscheme/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "mscheme/csv.hpp"

namespace mscheme {

namespace {

double max_finite(const std::vector<double>& v) {
    double m = 0;
    for (double x : v)
        if (std::isfinite(x)) m = std::max(m, x);
    return m;
}

}  // namespace

void execute(const RunSpec& spec) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    std::size_t points = 0;
    double residual_max = 0;

    switch (spec.command) {
        case Command::kSweep: {
            const SweepTable table = run_sweep(spec.params, *spec.axis, spec.channel);
            csv::write_sweep(table, spec.output_path);
            points = table.axis.values.size();
            residual_max = max_finite(table.residual);
            break;
        }
        case Command::kSteady: {
            // single-point sweep at the current locked detuning
            SweepAxis axis;
            axis.parameter = SweepParameter::kDelta3;
            axis.values = {spec.params.detuning[2]};
            const SweepTable table = run_sweep(spec.params, axis, spec.channel);
            if (table.flagged[0])
                throw DegenerateSteadyState("steady state is degenerate at the requested point");
            csv::write_sweep(table, spec.output_path);
            points = 1;
            residual_max = table.residual[0];
            break;
        }
        case Command::kEvolve: {
            const Trajectory traj = evolve(DensityMatrix::level(spec.initial_level), spec.params,
                                           spec.t_end, spec.time_samples);
            csv::write_trajectory(traj, spec.output_path);
            points = traj.times.size();
            break;
        }
        case Command::kRamp: {
            SystemParams start_params = spec.params;
            start_params.detuning[2] = spec.ramp->start_value;
            if (spec.ramp->target == RampTarget::kDelta3Delta4Locked)
                start_params.detuning[3] = spec.ramp->start_value;
            const Liouvillian lv =
                liouvillian(build_hamiltonian(start_params), collapse_operators(start_params));
            const SteadyStateResult ss0 = steady_state(lv);
            const Trajectory traj =
                adiabatic_ramp(ss0.state, spec.params, *spec.ramp, spec.ramp_samples);
            csv::write_trajectory(traj, spec.output_path);
            points = traj.times.size();
            residual_max = ss0.residual;
            break;
        }
        case Command::kDressed: {
            const DressedBasis basis = diagonalize(build_hamiltonian(spec.params));
            csv::write_dressed(basis, spec.output_path);
            points = kLevels;
            break;
        }
    }

    const double wall =
        std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() - t0).count();
    std::printf("%s: %zu points, residual max %.3e, wall %.3f s -> %s\n",
                to_string(spec.command).c_str(), points, residual_max, wall,
                spec.output_path.c_str());
}

int exit_code_for(const std::exception& ex) {
    if (dynamic_cast<const ParseError*>(&ex)) return 2;
    if (dynamic_cast<const UnknownKey*>(&ex)) return 3;
    if (dynamic_cast<const CyclicTopology*>(&ex)) return 6;
    if (dynamic_cast<const InvalidTopology*>(&ex)) return 5;
    if (dynamic_cast<const ValidationError*>(&ex)) return 4;
    if (dynamic_cast<const DegenerateSteadyState*>(&ex)) return 7;
    if (dynamic_cast<const SingularSolve*>(&ex)) return 8;
    if (dynamic_cast<const AmbiguousTracking*>(&ex)) return 9;
    if (dynamic_cast<const StepFailure*>(&ex)) return 10;
    if (dynamic_cast<const IoError*>(&ex)) return 11;
    return 1;
}

std::string exit_code_table() {
    return "exit codes:\n"
           "  0   success\n"
           "  1   unexpected error\n"
           "  2   ParseError (malformed config document)\n"
           "  3   UnknownKey (key outside the config schema)\n"
           "  4   ValidationError (bad parameter value)\n"
           "  5   InvalidTopology (bad coupling map)\n"
           "  6   CyclicTopology (coupling graph has a cycle)\n"
           "  7   DegenerateSteadyState (nullspace not one-dimensional)\n"
           "  8   SingularSolve (steady-state linear system singular)\n"
           "  9   AmbiguousTracking (sweep too coarse for branch tracking)\n"
           "  10  StepFailure (integrator step floor reached)\n"
           "  11  IoError (file read/write failure)\n";
}

}  // namespace mscheme

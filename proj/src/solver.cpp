#include "mscheme/solver.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

namespace mscheme {

namespace {

Matrix5c hermitized(const Matrix5c& m) { return 0.5 * (m + m.adjoint()); }

DensityMatrix sample_state(const Matrix5c& raw) {
    Matrix5c m = hermitized(raw);
    m /= m.trace().real();
    return DensityMatrix(m);
}

void record_observables(Trajectory& traj, const Matrix5c& rho) {
    static const char* pop_names[] = {"rho11", "rho22", "rho33", "rho44", "rho55"};
    for (int k = 0; k < kLevels; ++k)
        traj.observables[pop_names[k]].push_back(rho(k, k).real());
    traj.observables["coh12_abs"].push_back(std::abs(rho(0, 1)));
    traj.observables["coh13_abs"].push_back(std::abs(rho(0, 2)));
}

void record_drift(Trajectory& traj, const Matrix5c& raw) {
    traj.trace_drift = std::max(traj.trace_drift, std::abs(raw.trace() - Complex(1.0, 0.0)));
    traj.herm_drift =
        std::max(traj.herm_drift, (raw - raw.adjoint()).cwiseAbs().maxCoeff());
}

double ramp_value(const RampSpec& ramp, double t) {
    double s = std::clamp(t / ramp.duration, 0.0, 1.0);
    if (ramp.shape == RampShape::kSmoothstep) s = s * s * (3.0 - 2.0 * s);
    return ramp.start_value + (ramp.end_value - ramp.start_value) * s;
}

SystemParams with_target(SystemParams p, RampTarget target, double value) {
    p.detuning[2] = value;
    if (target == RampTarget::kDelta3Delta4Locked) p.detuning[3] = value;
    return p;
}

Liouvillian build_lv(const SystemParams& p) {
    return liouvillian(build_hamiltonian(p), collapse_operators(p));
}

}  // namespace

double spectral_gap(const Liouvillian& lv) {
    Eigen::JacobiSVD<MatrixXc> svd(lv.matrix);
    return svd.singularValues()(kLiouvilleDim - 2);  // sorted descending
}

SteadyStateResult steady_state(const Liouvillian& lv) {
    const double gap = spectral_gap(lv);
    if (gap <= kDegeneracyGap)
        throw DegenerateSteadyState("Liouvillian nullspace is not one-dimensional (gap " +
                                    std::to_string(gap) + ")");

    MatrixXc a = lv.matrix;
    a.row(vec_index({1}, {1})).setZero();
    for (int k = 1; k <= kLevels; ++k)
        a(vec_index({1}, {1}), vec_index({LevelIndex{k}}, {LevelIndex{k}})) = 1.0;
    VectorXc b = VectorXc::Zero(kLiouvilleDim);
    b(vec_index({1}, {1})) = 1.0;

    Eigen::FullPivLU<MatrixXc> lu(a);
    if (!lu.isInvertible())
        throw SingularSolve("replaced-row steady-state system is numerically singular");
    const VectorXc x = lu.solve(b);

    const Matrix5c rho = hermitized(unvec(x));
    const double residual = (lv.matrix * vec(rho)).cwiseAbs().maxCoeff();
    return SteadyStateResult{DensityMatrix(rho), residual, gap};
}

Trajectory evolve(const DensityMatrix& rho0, const SystemParams& params, double t_end,
                  int n_samples) {
    if (t_end <= 0) throw ValidationError("t_end must be > 0");
    if (n_samples < 2) throw ValidationError("n_samples must be >= 2");
    const Liouvillian lv = build_lv(params);
    const double dt = t_end / (n_samples - 1);
    const MatrixXc propagator = (lv.matrix * dt).exp();

    Trajectory traj;
    MatrixXc v = vec(rho0.matrix());
    for (int k = 0; k < n_samples; ++k) {
        if (k > 0) v = propagator * v;
        const Matrix5c raw = unvec(v);
        record_drift(traj, raw);
        traj.times.push_back(k * dt);
        traj.states.push_back(sample_state(raw));
        record_observables(traj, traj.states.back().matrix());
    }
    return traj;
}

Trajectory adiabatic_ramp(const DensityMatrix& rho0, const SystemParams& params,
                          const RampSpec& ramp, int n_samples) {
    if (ramp.duration <= 0) throw ValidationError("ramp duration must be > 0");
    if (n_samples < 2) throw ValidationError("n_samples must be >= 2");
    params.validate();

    // L is affine in the ramped detuning: L(g) = L0 + g*L1.
    const MatrixXc l0 = build_lv(with_target(params, ramp.target, 0.0)).matrix;
    const MatrixXc l1 = build_lv(with_target(params, ramp.target, 1.0)).matrix - l0;
    auto lv_at = [&](double t) {
        Liouvillian lv;
        lv.matrix = l0 + ramp_value(ramp, t) * l1;
        return lv;
    };

    const double h_floor = ramp.duration * 1e-9;
    const double step_tol = 1e-8;  // per-step max-entry error, estimated by doubling
    double h = std::min(0.5, ramp.duration / 128.0);

    Trajectory traj;
    MatrixXc v = vec(rho0.matrix());
    double t = 0.0;
    int check_countdown = 0;

    auto take_sample = [&](double at) {
        const Matrix5c raw = unvec(v);
        record_drift(traj, raw);
        traj.times.push_back(at);
        traj.states.push_back(sample_state(raw));
        record_observables(traj, traj.states.back().matrix());
        try {
            const SteadyStateResult ss = steady_state(lv_at(at));
            traj.tracking_error.push_back(
                (traj.states.back().matrix() - ss.state.matrix()).cwiseAbs().maxCoeff());
        } catch (const DegenerateSteadyState& ex) {
            throw DegenerateSteadyState(std::string(ex.what()) + " at ramp time t=" +
                                        std::to_string(at));
        }
    };

    take_sample(0.0);
    const double sample_dt = ramp.duration / (n_samples - 1);
    for (int k = 1; k < n_samples; ++k) {
        const double t_target = k * sample_dt;
        while (t < t_target - 1e-12 * ramp.duration) {
            double step = std::min(h, t_target - t);
            const MatrixXc mid = (lv_at(t + 0.5 * step).matrix * step).exp();
            MatrixXc v_full = mid * v;
            if (check_countdown <= 0) {
                // step-doubling spot check; halve h until the local error passes
                const MatrixXc e1 = (lv_at(t + 0.25 * step).matrix * (0.5 * step)).exp();
                const MatrixXc e2 = (lv_at(t + 0.75 * step).matrix * (0.5 * step)).exp();
                const double err = (v_full - e2 * (e1 * v)).cwiseAbs().maxCoeff();
                if (err > step_tol) {
                    h = 0.5 * step;
                    if (h < h_floor)
                        throw StepFailure("ramp integrator step fell below floor at t=" +
                                          std::to_string(t));
                    continue;
                }
                check_countdown = 16;
            }
            --check_countdown;
            v = v_full;
            t += step;
        }
        t = t_target;
        take_sample(t_target);
    }
    return traj;
}

}  // namespace mscheme

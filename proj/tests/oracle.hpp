#pragma once

// Test-only reference implementations, kept independent of the solver
// module's computational path. The steady-state oracle takes the full
// singular-value decomposition of L and trace-normalizes the null vector;
// steady_state() instead solves a replaced-row linear system, so agreement
// between the two certifies both.

#include <Eigen/SVD>
#include <random>

#include "mscheme/lindblad.hpp"
#include "mscheme/model.hpp"

namespace mscheme::oracle {

inline Matrix5c svd_steady_state(const Liouvillian& lv) {
    Eigen::JacobiSVD<MatrixXc> svd(lv.matrix, Eigen::ComputeFullV);
    VectorXc null_vec = svd.matrixV().col(kLiouvilleDim - 1);
    Matrix5c rho = unvec(null_vec);
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-6)
        throw Error("oracle: null vector is traceless; steady state ill-defined");
    rho *= std::conj(tr) / std::abs(tr);  // make the trace real positive
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();
    return rho;
}

inline Liouvillian liouvillian_of(const SystemParams& p) {
    return liouvillian(build_hamiltonian(p), collapse_operators(p));
}

inline Matrix5c svd_steady_state(const SystemParams& p) {
    return svd_steady_state(liouvillian_of(p));
}

inline Matrix5c random_density_matrix(std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    Matrix5c a;
    for (int i = 0; i < kLevels; ++i)
        for (int j = 0; j < kLevels; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix5c rho = a * a.adjoint();
    rho /= rho.trace().real();
    return rho;
}

inline SystemParams random_params(std::mt19937& rng, bool variant_topology = false) {
    std::uniform_real_distribution<double> mag(0.0, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> det(-30.0, 30.0);
    std::uniform_real_distribution<double> rate(0.0, 1.5);
    SystemParams p;
    for (int k = 0; k < 4; ++k) {
        p.rabi[k] = std::polar(mag(rng), phase(rng));
        p.detuning[k] = det(rng);
    }
    p.decay = DecayRates{rate(rng), rate(rng), rate(rng), rate(rng), rate(rng), rate(rng)};
    p.dephasing = 0.1 * rate(rng);
    p.topology = variant_topology ? CouplingMap::variant() : CouplingMap::m_scheme();
    return p;
}

}  // namespace mscheme::oracle

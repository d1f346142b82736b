#include "mscheme/lindblad.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace mscheme {

namespace {

// Kronecker product for the 5x5 -> 25x25 vectorization identities:
// vec(A X B) = (B^T kron A) vec(X) under column stacking.
MatrixXc kron(const Matrix5c& a, const Matrix5c& b) {
    MatrixXc k(kLiouvilleDim, kLiouvilleDim);
    for (int i = 0; i < kLevels; ++i)
        for (int j = 0; j < kLevels; ++j)
            k.block<kLevels, kLevels>(i * kLevels, j * kLevels) = a(i, j) * b;
    return k;
}

}  // namespace

MatrixXc vec(const Matrix5c& m) {
    MatrixXc v(kLiouvilleDim, 1);
    for (int c = 0; c < kLevels; ++c)
        for (int r = 0; r < kLevels; ++r) v(c * kLevels + r, 0) = m(r, c);
    return v;
}

Matrix5c unvec(const MatrixXc& v) {
    Matrix5c m;
    for (int c = 0; c < kLevels; ++c)
        for (int r = 0; r < kLevels; ++r) m(r, c) = v(c * kLevels + r, 0);
    return m;
}

DensityMatrix::DensityMatrix(const Matrix5c& m) : m_(m) {
    const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol)
        throw ValidationError("density matrix not Hermitian: max deviation " + std::to_string(herm));
    const double tr_err = std::abs(m_.trace() - Complex(1.0, 0.0));
    if (tr_err > kTraceTol)
        throw ValidationError("density matrix trace differs from 1 by " + std::to_string(tr_err));
    Eigen::SelfAdjointEigenSolver<Matrix5c> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < kEigenFloor)
        throw ValidationError("density matrix has eigenvalue " +
                              std::to_string(es.eigenvalues().minCoeff()) + " below floor");
}

DensityMatrix DensityMatrix::level(LevelIndex k) {
    Matrix5c m = Matrix5c::Zero();
    m(k.idx(), k.idx()) = 1.0;
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(Matrix5c::Identity() * 0.2);
}

std::vector<CollapseOperator> collapse_operators(const SystemParams& params) {
    params.validate();
    std::vector<CollapseOperator> ops;
    const struct {
        int excited, ground;
        double rate;
        const char* label;
    } channels[] = {
        {2, 1, params.decay.g12, "gamma_12"}, {2, 3, params.decay.g23, "gamma_23"},
        {2, 5, params.decay.g25, "gamma_25"}, {4, 1, params.decay.g14, "gamma_14"},
        {4, 3, params.decay.g34, "gamma_34"}, {4, 5, params.decay.g45, "gamma_45"},
    };
    for (const auto& ch : channels) {
        if (ch.rate <= 0) continue;
        CollapseOperator op;
        op.matrix(ch.ground - 1, ch.excited - 1) = std::sqrt(ch.rate);
        op.rate_label = ch.label;
        ops.push_back(op);
    }
    if (params.dephasing > 0) {
        for (int k = 1; k <= kLevels; ++k) {
            CollapseOperator op;
            op.matrix(k - 1, k - 1) = std::sqrt(params.dephasing);
            op.rate_label = "dephase_" + std::to_string(k);
            ops.push_back(op);
        }
    }
    return ops;
}

Liouvillian liouvillian(const Hamiltonian& h, const std::vector<CollapseOperator>& collapses) {
    const Complex i_unit(0.0, 1.0);
    const Matrix5c id = Matrix5c::Identity();
    Liouvillian lv;
    lv.matrix = -i_unit * (kron(id, h.matrix) - kron(h.matrix.transpose(), id));
    for (const auto& c : collapses) {
        const Matrix5c cdc = c.matrix.adjoint() * c.matrix;
        lv.matrix += kron(c.matrix.conjugate(), c.matrix);
        lv.matrix -= 0.5 * kron(id, cdc);
        lv.matrix -= 0.5 * kron(cdc.transpose(), id);
    }
    return lv;
}

Matrix5c rhs(const Matrix5c& rho, const Hamiltonian& h,
             const std::vector<CollapseOperator>& collapses) {
    const Complex i_unit(0.0, 1.0);
    Matrix5c out = -i_unit * (h.matrix * rho - rho * h.matrix);
    for (const auto& c : collapses) {
        const Matrix5c cdc = c.matrix.adjoint() * c.matrix;
        out += c.matrix * rho * c.matrix.adjoint() - 0.5 * (cdc * rho + rho * cdc);
    }
    return out;
}

}  // namespace mscheme

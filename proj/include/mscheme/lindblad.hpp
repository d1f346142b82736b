#pragma once

#include <string>
#include <vector>

#include "mscheme/model.hpp"
#include "mscheme/types.hpp"

namespace mscheme {

/// Column-stacking index of density-matrix entry (row, col), 1-based levels:
/// vec index = (col-1)*5 + (row-1).
constexpr int vec_index(LevelIndex row, LevelIndex col) {
    return (col.value - 1) * kLevels + (row.value - 1);
}

/// Inverse of vec_index.
constexpr std::pair<LevelIndex, LevelIndex> unvec_index(int k) {
    return {LevelIndex{k % kLevels + 1}, LevelIndex{k / kLevels + 1}};
}

MatrixXc vec(const Matrix5c& m);
Matrix5c unvec(const MatrixXc& v);

/// Jump or dephasing operator. Decay channels have a single entry
/// sqrt(gamma_ij) at (ground, excited); dephasers are sqrt(gamma_d)|k><k|.
struct CollapseOperator {
    Matrix5c matrix = Matrix5c::Zero();
    std::string rate_label;
};

/// Validated 5x5 state: Hermitian to 1e-12, unit trace to 1e-12,
/// eigenvalues >= -1e-10.
class DensityMatrix {
  public:
    explicit DensityMatrix(const Matrix5c& m);

    static DensityMatrix level(LevelIndex k);   // |k><k|
    static DensityMatrix maximally_mixed();

    const Matrix5c& matrix() const { return m_; }
    double population(LevelIndex k) const { return m_(k.idx(), k.idx()).real(); }

    static constexpr double kHermTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kEigenFloor = -1e-10;

  private:
    Matrix5c m_;
};

/// 25x25 generator acting on the column-stacked density matrix:
/// L vec(rho) = vec(-i[H,rho] + sum_C C rho C^+ - {C^+C, rho}/2).
struct Liouvillian {
    MatrixXc matrix = MatrixXc::Zero(kLiouvilleDim, kLiouvilleDim);
};

/// Six decay channels (2->1, 2->3, 2->5, 4->1, 4->3, 4->5 at rates
/// gamma_12, gamma_23, gamma_25, gamma_14, gamma_34, gamma_45) plus one
/// dephaser per level. Zero-rate operators are omitted.
std::vector<CollapseOperator> collapse_operators(const SystemParams& params);

Liouvillian liouvillian(const Hamiltonian& h, const std::vector<CollapseOperator>& collapses);

/// d(rho)/dt evaluated directly on matrices; agrees with unvec(L vec(rho))
/// to 1e-12 for any rho (property-tested).
Matrix5c rhs(const Matrix5c& rho, const Hamiltonian& h,
             const std::vector<CollapseOperator>& collapses);

}  // namespace mscheme

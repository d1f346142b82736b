#pragma once

#include <Eigen/Dense>
#include <complex>

namespace mscheme {

inline constexpr int kLevels = 5;
inline constexpr int kLiouvilleDim = kLevels * kLevels;

using Complex = std::complex<double>;
using Matrix5c = Eigen::Matrix<Complex, kLevels, kLevels>;
using Vector5c = Eigen::Matrix<Complex, kLevels, 1>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Bare-state label, 1-based as in the level diagram. {1,3,5} are ground
/// sublevels, {2,4} are excited states.
struct LevelIndex {
    int value = 1;

    constexpr bool valid() const { return value >= 1 && value <= kLevels; }
    constexpr bool is_ground() const { return value == 1 || value == 3 || value == 5; }
    constexpr bool is_excited() const { return value == 2 || value == 4; }
    constexpr int idx() const { return value - 1; }  // 0-based storage index

    friend constexpr bool operator==(LevelIndex a, LevelIndex b) { return a.value == b.value; }
    friend constexpr bool operator!=(LevelIndex a, LevelIndex b) { return a.value != b.value; }
};

}  // namespace mscheme

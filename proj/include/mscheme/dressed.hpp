#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mscheme/lindblad.hpp"
#include "mscheme/model.hpp"

namespace mscheme {

/// Eigendecomposition of the rotating-frame Hamiltonian with stable branch
/// labels. Row convention |e_i> = sum_j U_ij |j>, i.e. vectors.row(label)
/// holds the dressed state in the bare basis. Labels:
///   e0 = eigenvalue of smallest magnitude (the near-dark branch),
///   e3, e4 = the two branches with dominant weight on bare levels {4,5}
///            (e4 the one with the larger |<5|e>|^2),
///   e1 <= e2 = the remaining pair, ascending.
/// Each eigenvector's global phase makes its largest-magnitude component
/// real positive.
struct DressedBasis {
    std::array<double, 5> eigenvalues{};
    Matrix5c vectors = Matrix5c::Identity();
};

DressedBasis diagonalize(const Hamiltonian& h);

/// Relabels each point of a sweep by maximum-overlap greedy matching against
/// the previous point (first point labeled per diagonalize). Throws
/// AmbiguousTracking when any matched overlap falls below 1/sqrt(2).
std::vector<DressedBasis> track_branches(const std::vector<Hamiltonian>& h_sequence);

/// p_i = <e_i|rho|e_i>; real, in [0,1], summing to trace(rho).
std::array<double, 5> dressed_populations(const Matrix5c& rho, const DressedBasis& basis);

/// Coefficients of |source><target| in the dressed basis:
/// M_ab = conj(U_{a,source}) U_{b,target}. Unit Frobenius norm.
struct DecayExpansion {
    Matrix5c coefficients = Matrix5c::Zero();
    LevelIndex source;  // excited
    LevelIndex target;  // ground
};

DecayExpansion decay_expansion(const DressedBasis& basis, LevelIndex source, LevelIndex target);

struct DominantTerm {
    int bra_branch = 0;  // a in |e_a><e_b|
    int ket_branch = 0;  // b
    double magnitude = 0;
};

inline const std::vector<int> kAllBranches{0, 1, 2, 3, 4};

/// Entries with |M_ab| >= threshold * max|M| over branches x branches,
/// descending by magnitude, ties broken by (a, b) lexicographic order.
/// threshold in (0, 1].
std::vector<DominantTerm> dominant_terms(const DecayExpansion& expansion, double threshold,
                                         const std::vector<int>& branches = kAllBranches);

/// "e0e3"-style tag for the leading term of a dominant_terms result.
std::string pair_tag(const DominantTerm& term);

}  // namespace mscheme

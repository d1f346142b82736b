#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mscheme/errors.hpp"
#include "mscheme/types.hpp"

namespace mscheme {

/// One driving field: field index k in 1..4 coupling a ground level to an
/// excited level with Rabi frequency Omega_k and detuning delta_k.
struct CouplingEdge {
    int field = 0;      // 1..4
    LevelIndex lower;   // ground
    LevelIndex upper;   // excited
};

/// The coupling topology: four ground<->excited edges forming a forest over
/// the five levels (with exactly four edges this means a spanning tree).
/// Cyclic graphs are rejected: a closed loop would impose a phase condition
/// the rotating frame cannot absorb.
class CouplingMap {
  public:
    explicit CouplingMap(std::array<CouplingEdge, 4> edges);

    static CouplingMap m_scheme();  // fields 1..4 on 1-2, 3-2, 3-4, 5-4
    static CouplingMap variant();   // fields 1..4 on 1-2, 5-2, 3-4, 5-4

    const std::array<CouplingEdge, 4>& edges() const { return edges_; }
    const std::string& name() const { return name_; }

  private:
    std::array<CouplingEdge, 4> edges_;
    std::string name_ = "custom";
};

/// Six spontaneous-emission rates, one per excited->ground channel.
/// gamma_ij pairs the two levels; the jump always goes excited -> ground
/// (gamma_25 is |2> -> |5>, gamma_14 is |4> -> |1>).
struct DecayRates {
    double g12 = 0, g23 = 0, g25 = 0, g14 = 0, g34 = 0, g45 = 0;
};

/// All physical inputs, in units of the reference rate gamma (hbar = 1).
struct SystemParams {
    std::array<Complex, 4> rabi{};     // Omega_1..Omega_4
    std::array<double, 4> detuning{};  // delta_1..delta_4
    DecayRates decay;
    double dephasing = 0;  // gamma_d, one scalar applied per level
    CouplingMap topology = CouplingMap::m_scheme();

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

/// Rotating-frame Hamiltonian: diagonal = frame energies theta_1..theta_5,
/// off-diagonals Omega_k at (upper, lower) per the coupling map. Hermitian by
/// construction.
struct Hamiltonian {
    Matrix5c matrix = Matrix5c::Zero();
    std::array<double, 5> frame_energies{};
};

/// Frame energies from the composite-detuning recursion: theta_1 = 0 and
/// theta_upper - theta_lower = delta_k on every edge, resolved by
/// breadth-first traversal from level 1. Levels unreachable from level 1 get
/// theta = 0 and are reported through `unreachable` when non-null (cannot
/// happen for a validated 4-edge map, which is a spanning tree).
std::array<double, 5> frame_energies(const CouplingMap& topology,
                                     const std::array<double, 4>& detunings,
                                     std::vector<LevelIndex>* unreachable = nullptr);

Hamiltonian build_hamiltonian(const SystemParams& params);

}  // namespace mscheme

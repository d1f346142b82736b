#pragma once

#include <string>
#include <vector>

#include "mscheme/dressed.hpp"
#include "mscheme/solver.hpp"
#include "mscheme/sweep.hpp"

namespace mscheme {
namespace csv {

/// Reals are rendered with 17 significant digits (round-trip safe).
std::string format_double(double v);

/// Header "axis,rho11,...,rho55,p0,...,p4,eps0,...,eps4,residual,gap,dominant_pair".
void write_sweep(const SweepTable& table, const std::string& path);

/// Header "t,rho11,...,rho55,coh12_abs,coh13_abs[,tracking_error]".
void write_trajectory(const Trajectory& traj, const std::string& path);

/// One row per branch: "branch,eps,u1_re,u1_im,...,u5_re,u5_im".
void write_dressed(const DressedBasis& basis, const std::string& path);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Parse a CSV written by this module (no quoting or escapes).
Table read_table(const std::string& path);

}  // namespace csv
}  // namespace mscheme

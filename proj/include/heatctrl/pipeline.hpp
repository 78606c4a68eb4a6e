#pragma once

#include "heatctrl/config.hpp"
#include "heatctrl/problems.hpp"

#include <iosfwd>
#include <vector>

namespace heatctrl::pipeline {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;

/// Builds the problem instance a config describes, sampling built-in data
/// at the nodes. Grid overrides support refinement sweeps.
ProblemSpec make_problem(const Config& config, int nx_override = 0, int nt_override = 0);

/// Full pipeline: lift -> minimize -> extract control -> forward check.
/// Writes convergence.csv, control.csv, final_state.csv and summary.json
/// into the config's output directory (also on non-convergence).
int run(const Config& config, std::ostream& log);

/// Central-difference gradient checks on deterministic random (u, U)
/// pairs for the config's instance. Exit 0 when all pass 1e-6.
int check_gradient(const Config& config, std::ostream& log);

/// Refinement study: minimizes on each grid size (Nx = Nt = g) and writes
/// sweep.csv with the discrete minimum per grid.
int sweep(const Config& config, const std::vector<int>& grids, std::ostream& log);

} // namespace heatctrl::pipeline

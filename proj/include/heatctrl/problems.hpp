#pragma once

#include "heatctrl/descent.hpp"

namespace heatctrl {

/// A controllability instance: variant, horizon, grid, nodal data samples
/// and the descent options used to minimize it.
struct ProblemSpec {
    Variant variant;
    double T = 1.0;
    int nx = 2;
    int nt = 2;
    std::vector<double> u0; ///< nx+1 samples of the initial datum
    std::vector<double> uT; ///< nx+1 samples of the final/target datum
    DescentOptions options;
};

/// The control read off a minimizer.
struct Control {
    enum class Kind { Boundary, Inner };

    Kind kind = Kind::Boundary;
    double T = 1.0;

    // Boundary case: f(t_j) = u(t_j, 1), j = 0..nt.
    std::vector<double> boundary_trace;

    // Inner case: nodal field over the full grid, zero outside q = (0,T) x omega.
    Field inner_field;
    int nx = 0;
    int nt = 0;
    double omega_a = 0.0;
    double omega_b = 0.0;
};

/// Feasible lift of the data: ubar(t,x) = (1 - t/T) u0(x) + (t/T) uT(x)
/// at the nodes. Throws IncompatibleDataError if the samples violate the
/// variant's homogeneous boundary conditions (|.| > 1e-12 at pinned ends).
Field lift_data(const ProblemSpec& spec, const SpaceTimeGrid& grid);

/// Trace of u along x = 1, verbatim (no smoothing).
Control extract_boundary_control(const Field& u, const SpaceTimeGrid& grid);

/// Weak residual projection onto q = (0,T) x omega: solves M_q f = r with
/// r_phi = integral over q of (u_t phi + u_x phi_x), f = 0 outside q and on
/// its boundary. Throws std::invalid_argument if omega is not grid-aligned.
Control extract_inner_control(const Field& u, const SpaceTimeGrid& grid,
                              double omega_a, double omega_b);

/// Snaps omega bounds to the nearest grid lines. Throws
/// std::invalid_argument if the snapped interval degenerates.
std::pair<double, double> snap_omega(const SpaceTimeGrid& grid, double a, double b);

} // namespace heatctrl

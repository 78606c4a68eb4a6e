#pragma once

#include "heatctrl/problems.hpp"

namespace heatctrl {

/// Grid for the independent time-stepping check. The theta parameter is
/// fixed at 1/2 (Crank-Nicolson); the grid may differ from the space-time
/// optimization grid.
struct ForwardGrid {
    int nx = 2; ///< spatial intervals, >= 2
    int nt = 2; ///< time steps, >= 2
};

/// Marches u_t - u_xx = source from u0 (samples at the forward grid's
/// nx+1 spatial nodes) and returns u(T, .). Boundary controls impose
/// u(t,0)=0, u(t,1)=f(t); inner controls impose homogeneous Dirichlet and
/// add the source on omega. Controls on a different grid are interpolated
/// linearly. Unconditionally stable.
std::vector<double> forward_heat(std::span<const double> u0, const Control& control,
                                 const ForwardGrid& fgrid);

/// Full trajectory of the same march, row-major by time level:
/// (nt+1) x (nx+1) values, level 0 = u0.
std::vector<double> forward_heat_trajectory(std::span<const double> u0,
                                            const Control& control,
                                            const ForwardGrid& fgrid);

/// Trapezoidal L2(0,1) norm of a - b on equally spaced samples with
/// spacing h. Throws std::invalid_argument on a length mismatch.
double l2_error(std::span<const double> a, std::span<const double> b, double h);

/// |central difference - pairing| / max(|pairing|, 1e-14) for the energy
/// derivative at u in direction U with step eta.
double fd_gradient_check(const SpaceTimeGrid& grid, const Variant& variant,
                         const Field& u, const Field& U, double eta);

/// Least-squares slope of log(error) vs log(h). Spacings must be strictly
/// decreasing and errors strictly positive (std::invalid_argument otherwise).
double convergence_order(const std::vector<double>& errors,
                         const std::vector<double>& spacings);

} // namespace heatctrl

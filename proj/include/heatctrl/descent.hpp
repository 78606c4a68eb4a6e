#pragma once

#include "heatctrl/corrector.hpp"

#include <string>

namespace heatctrl {

/// Controls for the energy minimization loop.
struct DescentOptions {
    enum class Method { SteepestDescent, ConjugateGradient };

    int max_iterations = 500;
    double tol_gradient = 1e-8; ///< relative to the first gradient norm
    double tol_energy = 1e-10;  ///< absolute stop on E
    Method method = Method::ConjugateGradient;
    int record_every = 1; ///< history stride (first and last always kept)
};

struct HistoryEntry {
    int iteration;
    double energy;
    double gradient_norm; ///< Riesz (H1) norm of the gradient
};

/// Minimization outcome. The energy history is non-increasing and the
/// final energy is its minimum (exact line search on a convex quadratic).
struct RunResult {
    Field best_u;
    std::vector<HistoryEntry> history;
    double initial_energy = 0.0;
    double final_energy = 0.0;
    double final_gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string reason; ///< "gradient-tolerance" | "energy-tolerance" |
                        ///< "max-iterations" | "stationary-direction"
};

/// Optimal step along a direction, with a flag for directions the
/// corrector map annihilates.
struct StepResult {
    double eta = 0.0;
    bool stationary = false;
};

/// Directional derivative <E'(u), U> given the corrector v of u.
/// U must vanish on the variant's fixed variation nodes
/// (std::invalid_argument otherwise).
double pairing(const SpaceTimeGrid& grid, const Variant& variant,
               const Field& v, const Field& U);

/// Riesz representative g of E'(u) in the H1(Q) inner product on the
/// variation space: (g, U)_H1 = <E'(u), U> for all discrete U.
Field riesz_gradient(const SpaceTimeGrid& grid, const Variant& variant,
                     const Field& v);

/// Global minimizer of eta -> E(u + eta*d): eta* = -<v,V>_X / <V,V>_X with
/// V the corrector response of d. Returns eta=0, stationary=true when
/// <V,V>_X vanishes.
StepResult exact_step(const SpaceTimeGrid& grid, const Variant& variant,
                      const Field& v, const Field& d);

/// Minimizes the error functional over the affine feasible set
/// ubar + (variation space). Fixed DOFs of ubar are never modified.
/// Throws NumericalFailureError if the energy becomes non-finite.
RunResult minimize(const SpaceTimeGrid& grid, const Variant& variant,
                   const Field& ubar, const DescentOptions& opts);

/// Reusable state for repeated descent work on one (grid, variant):
/// the corrector system plus the H1 Gram matrix of the variation space.
class DescentContext {
public:
    DescentContext(const SpaceTimeGrid& grid, const Variant& variant);

    const CorrectorSystem& system() const { return system_; }
    const DofMask& variation_mask() const { return system_.variation_mask(); }

    /// Solves G z = w|free and scatters to a full field (zero on fixed).
    Field riesz_solve(const Field& pairing_vec, double tol = 1e-12) const;

    /// Corrector response of a variation direction (zero-data solve).
    Field response(const Field& d, double tol = kCorrectorTol) const;

    RunResult minimize(const Field& ubar, const DescentOptions& opts) const;

private:
    CorrectorSystem system_;
    SparseMatrix gram_; ///< H1 inner product on free variation DOFs

    RunResult minimize_sd(const Field& ubar, const DescentOptions& opts) const;
    RunResult minimize_cg(const Field& ubar, const DescentOptions& opts) const;
};

} // namespace heatctrl

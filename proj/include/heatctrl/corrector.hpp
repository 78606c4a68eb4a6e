#pragma once

#include "heatctrl/grid.hpp"
#include "heatctrl/linalg.hpp"

namespace heatctrl {

/// Default relative tolerance for the inner CG solves. Two orders below
/// any descent tolerance so gradients stay consistent with energies.
inline constexpr double kCorrectorTol = 1e-10;

/// Which corrector problem is being solved.
///
/// BoundaryH1:       bilinear form = full H1 inner product,
///                   load l(phi) = -int(u_t phi + u_x phi_x).
/// BoundaryExtended: same bilinear form,
///                   load l(phi) = int(u phi_t - u_x phi_x).
/// Inner:            bilinear form = space-time Dirichlet stiffness,
///                   load l(phi) = -int over Q\q of (u_t phi + u_x phi_x),
///                   q = (0,T) x omega.
struct Variant {
    enum class Kind { BoundaryH1, BoundaryExtended, Inner };

    Kind kind = Kind::BoundaryH1;
    double omega_a = 0.0; ///< Inner only: 0 < omega_a < omega_b < 1
    double omega_b = 0.0;

    static Variant boundary_h1() { return {Kind::BoundaryH1, 0.0, 0.0}; }
    static Variant boundary_extended() { return {Kind::BoundaryExtended, 0.0, 0.0}; }
    /// Throws std::invalid_argument unless 0 < a < b < 1.
    static Variant inner(double a, double b);

    bool is_inner() const { return kind == Kind::Inner; }
    /// The variation space paired with this variant.
    SpaceTag variation_tag() const {
        return is_inner() ? SpaceTag::VariationInner : SpaceTag::VariationBoundary;
    }
};

/// Corrector field with its energy and solver diagnostics.
struct CorrectorSolution {
    Field v;             ///< all nodes; exactly zero on the space-time boundary
    double energy = 0.0; ///< 0.5 * <v,v>_X with the variant's energy matrix
    SolveReport report;
};

// Global (all-nodes) matrices assembled from exact element integrals.
SparseMatrix global_mass(const SpaceTimeGrid& grid);
SparseMatrix global_space_stiffness(const SpaceTimeGrid& grid);
SparseMatrix global_time_stiffness(const SpaceTimeGrid& grid);
/// C[k,l] = integral of N_k * dt N_l over Q.
SparseMatrix global_time_gradient(const SpaceTimeGrid& grid);

/// Restriction of an all-nodes matrix to the free x free block of a mask.
SparseMatrix restrict_matrix(const SparseMatrix& A, const DofMask& mask);

/// Cached assembly for one (grid, variant) pair. The descent loop reuses
/// a single instance; the free functions below build a fresh one per call.
class CorrectorSystem {
public:
    CorrectorSystem(const SpaceTimeGrid& grid, const Variant& variant);

    const SpaceTimeGrid& grid() const { return grid_; }
    const Variant& variant() const { return variant_; }
    const DofMask& corrector_mask() const { return h10_; }
    const DofMask& variation_mask() const { return variation_; }

    /// SPD operator on free corrector DOFs.
    const SparseMatrix& op() const { return op_; }
    /// Energy matrix X over all nodes (independent of the solve path).
    const SparseMatrix& energy_matrix() const { return energy_; }

    /// Load vector over free corrector DOFs; linear in u.
    std::vector<double> load(const Field& u) const;

    CorrectorSolution solve(const Field& u, double tol = kCorrectorTol) const;

    /// <a,b>_X over all nodes.
    double energy_product(const Field& a, const Field& b) const;

    /// Directional-derivative coefficients w with <E'(u),U> = sum_k w_k U_k,
    /// given the corrector v of u. Zero on variation-fixed nodes.
    Field pairing_vector(const Field& v) const;

private:
    SpaceTimeGrid grid_;
    Variant variant_;
    DofMask h10_;
    DofMask variation_;
    SparseMatrix op_;
    SparseMatrix energy_;
    SparseMatrix load_matrix_; ///< B over all nodes: load = sign*(B u) on free rows
    double sign_;
};

/// SPD matrix of the variant's corrector problem on free H10 DOFs.
SparseMatrix assemble_operator(const SpaceTimeGrid& grid, const Variant& variant);

/// Load vector over free H10 DOFs for the field u.
/// Throws std::invalid_argument if an Inner omega is not grid-aligned.
std::vector<double> assemble_load(const SpaceTimeGrid& grid, const Variant& variant,
                                  const Field& u);

/// Solves for the corrector of u and evaluates the error functional.
CorrectorSolution solve_corrector(const SpaceTimeGrid& grid, const Variant& variant,
                                  const Field& u, double tol = kCorrectorTol);

/// The variant's energy inner product <a,b>_X of two full fields.
double energy_product(const SpaceTimeGrid& grid, const Variant& variant,
                      const Field& a, const Field& b);

} // namespace heatctrl

#include "heatctrl/corrector.hpp"

#include <cmath>
#include <stdexcept>

namespace heatctrl {

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 zero4() { return Mat4{}; }

void add_scaled(Mat4& dst, const Mat4& src, double w) {
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            dst[k][l] += w * src[k][l];
        }
    }
}

Mat4 transpose(const Mat4& m) {
    Mat4 t{};
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            t[k][l] = m[l][k];
        }
    }
    return t;
}

// Assembles one identical local matrix over every element, optionally
// skipping the spatial element band [skip_lo, skip_hi). Elements are
// visited time-major so the triplet order is fixed.
SparseMatrix assemble_uniform(const SpaceTimeGrid& grid, const Mat4& local,
                              int skip_lo = 0, int skip_hi = 0) {
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(grid.num_elements()) * 16);
    for (int jt = 0; jt < grid.nt; ++jt) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            if (ix >= skip_lo && ix < skip_hi) {
                continue;
            }
            const std::array<int, 4> nodes = element_nodes(grid, ix, jt);
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) {
                    triplets.push_back({nodes[k], nodes[l], local[k][l]});
                }
            }
        }
    }
    return assemble(grid.num_nodes(), std::move(triplets));
}

struct OmegaBand {
    int lo = 0; ///< first spatial element index inside omega
    int hi = 0; ///< one past the last
    bool aligned = false;
};

OmegaBand omega_band(const SpaceTimeGrid& grid, const Variant& variant) {
    OmegaBand band;
    const double fa = variant.omega_a * grid.nx;
    const double fb = variant.omega_b * grid.nx;
    band.lo = static_cast<int>(std::lround(fa));
    band.hi = static_cast<int>(std::lround(fb));
    const double tol = 1e-9 * grid.nx;
    band.aligned = std::abs(fa - band.lo) <= tol && std::abs(fb - band.hi) <= tol &&
                   band.lo >= 1 && band.hi <= grid.nx - 1 && band.lo < band.hi;
    return band;
}

} // namespace

Variant Variant::inner(double a, double b) {
    if (!(0.0 < a && a < b && b < 1.0)) {
        throw std::invalid_argument("Variant::inner: omega must satisfy 0 < a < b < 1");
    }
    return {Kind::Inner, a, b};
}

SparseMatrix global_mass(const SpaceTimeGrid& grid) {
    return assemble_uniform(grid, element_integrals(grid.hx, grid.ht).mass);
}

SparseMatrix global_space_stiffness(const SpaceTimeGrid& grid) {
    return assemble_uniform(grid, element_integrals(grid.hx, grid.ht).space_stiffness);
}

SparseMatrix global_time_stiffness(const SpaceTimeGrid& grid) {
    return assemble_uniform(grid, element_integrals(grid.hx, grid.ht).time_stiffness);
}

SparseMatrix global_time_gradient(const SpaceTimeGrid& grid) {
    return assemble_uniform(grid, element_integrals(grid.hx, grid.ht).mixed);
}

SparseMatrix restrict_matrix(const SparseMatrix& A, const DofMask& mask) {
    std::vector<Triplet> triplets;
    for (int r = 0; r < A.n; ++r) {
        const int fr = mask.free_index[r];
        if (fr < 0) {
            continue;
        }
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k) {
            const int fc = mask.free_index[A.col_idx[k]];
            if (fc >= 0) {
                triplets.push_back({fr, fc, A.values[k]});
            }
        }
    }
    return assemble(mask.num_free(), std::move(triplets));
}

CorrectorSystem::CorrectorSystem(const SpaceTimeGrid& grid, const Variant& variant)
    : grid_(grid),
      variant_(variant),
      h10_(dof_mask(grid, SpaceTag::CorrectorH10)),
      variation_(dof_mask(grid, variant.variation_tag())) {
    const ElementIntegrals e = element_integrals(grid.hx, grid.ht);

    Mat4 op_local = zero4();
    add_scaled(op_local, e.space_stiffness, 1.0);
    add_scaled(op_local, e.time_stiffness, 1.0);

    Mat4 load_local = zero4();
    int skip_lo = 0, skip_hi = 0;
    switch (variant.kind) {
    case Variant::Kind::BoundaryH1:
        add_scaled(op_local, e.mass, 1.0);
        // l(phi) = -int(u_t phi + u_x phi_x)
        add_scaled(load_local, e.mixed, 1.0);
        add_scaled(load_local, e.space_stiffness, 1.0);
        sign_ = -1.0;
        break;
    case Variant::Kind::BoundaryExtended:
        add_scaled(op_local, e.mass, 1.0);
        // l(phi) = int(u phi_t - u_x phi_x)
        add_scaled(load_local, transpose(e.mixed), 1.0);
        add_scaled(load_local, e.space_stiffness, -1.0);
        sign_ = 1.0;
        break;
    case Variant::Kind::Inner: {
        // l(phi) = -int over Q\q of (u_t phi + u_x phi_x)
        add_scaled(load_local, e.mixed, 1.0);
        add_scaled(load_local, e.space_stiffness, 1.0);
        sign_ = -1.0;
        const OmegaBand band = omega_band(grid, variant);
        if (band.aligned) {
            skip_lo = band.lo;
            skip_hi = band.hi;
        } else {
            skip_lo = -1; // marks misaligned omega; load() rejects
            skip_hi = -1;
        }
        break;
    }
    }

    energy_ = assemble_uniform(grid_, op_local);
    op_ = restrict_matrix(energy_, h10_);
    if (skip_lo >= 0) {
        load_matrix_ = assemble_uniform(grid_, load_local, skip_lo, skip_hi);
    } else {
        load_matrix_.n = -1; // misaligned inner omega
    }
}

std::vector<double> CorrectorSystem::load(const Field& u) const {
    if (load_matrix_.n < 0) {
        throw std::invalid_argument("corrector: omega is not aligned to grid lines");
    }
    if (static_cast<int>(u.size()) != grid_.num_nodes()) {
        throw std::invalid_argument("corrector: field size does not match grid");
    }
    std::vector<double> full(grid_.num_nodes());
    load_matrix_.apply(u, full);
    std::vector<double> out = h10_.gather(full);
    for (double& v : out) {
        v *= sign_;
    }
    return out;
}

CorrectorSolution CorrectorSystem::solve(const Field& u, double tol) const {
    const std::vector<double> rhs = load(u);
    auto [x, report] = cg_solve(op_, rhs, tol, 10 * std::max(op_.n, 1));
    CorrectorSolution sol;
    sol.v.assign(grid_.num_nodes(), 0.0);
    h10_.scatter(x, sol.v);
    sol.energy = 0.5 * energy_product(sol.v, sol.v);
    sol.report = report;
    return sol;
}

double CorrectorSystem::energy_product(const Field& a, const Field& b) const {
    return energy_.quadratic_form(a, b);
}

Field CorrectorSystem::pairing_vector(const Field& v) const {
    if (load_matrix_.n < 0) {
        throw std::invalid_argument("corrector: omega is not aligned to grid lines");
    }
    Field w(grid_.num_nodes());
    load_matrix_.apply_transpose(v, w);
    for (double& value : w) {
        value *= sign_;
    }
    for (int node : variation_.fixed_nodes) {
        w[node] = 0.0;
    }
    return w;
}

SparseMatrix assemble_operator(const SpaceTimeGrid& grid, const Variant& variant) {
    return CorrectorSystem(grid, variant).op();
}

std::vector<double> assemble_load(const SpaceTimeGrid& grid, const Variant& variant,
                                  const Field& u) {
    return CorrectorSystem(grid, variant).load(u);
}

CorrectorSolution solve_corrector(const SpaceTimeGrid& grid, const Variant& variant,
                                  const Field& u, double tol) {
    return CorrectorSystem(grid, variant).solve(u, tol);
}

double energy_product(const SpaceTimeGrid& grid, const Variant& variant,
                      const Field& a, const Field& b) {
    return CorrectorSystem(grid, variant).energy_product(a, b);
}

} // namespace heatctrl

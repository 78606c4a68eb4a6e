#include "heatctrl/grid.hpp"

#include <stdexcept>
#include <string>

namespace heatctrl {

Field SpaceTimeGrid::interpolate(const std::function<double(double, double)>& g) const {
    Field f(num_nodes());
    for (int j = 0; j <= nt; ++j) {
        const double t = j * ht;
        for (int i = 0; i <= nx; ++i) {
            f[node(i, j)] = g(t, i * hx);
        }
    }
    return f;
}

std::vector<double> DofMask::gather(const Field& full) const {
    std::vector<double> out(free_nodes.size());
    for (std::size_t k = 0; k < free_nodes.size(); ++k) {
        out[k] = full[free_nodes[k]];
    }
    return out;
}

void DofMask::scatter(const std::vector<double>& free_values, Field& full) const {
    for (std::size_t k = 0; k < free_nodes.size(); ++k) {
        full[free_nodes[k]] = free_values[k];
    }
}

SpaceTimeGrid make_grid(double T, int nx, int nt) {
    if (!(T > 0.0)) {
        throw std::invalid_argument("make_grid: T must be > 0, got " + std::to_string(T));
    }
    if (nx < 2 || nt < 2) {
        throw std::invalid_argument("make_grid: interval counts must be >= 2, got Nx=" +
                                    std::to_string(nx) + ", Nt=" + std::to_string(nt));
    }
    return SpaceTimeGrid{T, nx, nt, 1.0 / nx, T / nt};
}

DofMask dof_mask(const SpaceTimeGrid& grid, SpaceTag tag) {
    DofMask mask;
    mask.tag = tag;
    const int n = grid.num_nodes();
    mask.free_index.assign(n, -1);
    for (int idx = 0; idx < n; ++idx) {
        bool fixed = grid.on_initial(idx) || grid.on_final(idx) || grid.on_left(idx);
        if (tag != SpaceTag::VariationBoundary) {
            fixed = fixed || grid.on_right(idx);
        }
        if (fixed) {
            mask.fixed_nodes.push_back(idx);
        } else {
            mask.free_index[idx] = static_cast<int>(mask.free_nodes.size());
            mask.free_nodes.push_back(idx);
        }
    }
    return mask;
}

ElementIntegrals element_integrals(double hx, double ht) {
    if (!(hx > 0.0) || !(ht > 0.0)) {
        throw std::invalid_argument("element_integrals: hx and ht must be > 0");
    }
    // 1D factors on [0,h]: mass h*[[1/3,1/6],[1/6,1/3]], stiffness
    // (1/h)*[[1,-1],[-1,1]], and int L_a L_b' = [[-1/2,1/2],[-1/2,1/2]].
    const double mt[2][2] = {{ht / 3.0, ht / 6.0}, {ht / 6.0, ht / 3.0}};
    const double mx[2][2] = {{hx / 3.0, hx / 6.0}, {hx / 6.0, hx / 3.0}};
    const double st[2][2] = {{1.0 / ht, -1.0 / ht}, {-1.0 / ht, 1.0 / ht}};
    const double sx[2][2] = {{1.0 / hx, -1.0 / hx}, {-1.0 / hx, 1.0 / hx}};
    const double dt[2][2] = {{-0.5, 0.5}, {-0.5, 0.5}};

    ElementIntegrals e;
    e.hx = hx;
    e.ht = ht;
    for (int k = 0; k < 4; ++k) {
        const int a = k / 2, b = k % 2;
        for (int l = 0; l < 4; ++l) {
            const int c = l / 2, d = l % 2;
            e.mass[k][l] = mt[a][c] * mx[b][d];
            e.space_stiffness[k][l] = mt[a][c] * sx[b][d];
            e.time_stiffness[k][l] = st[a][c] * mx[b][d];
            e.mixed[k][l] = dt[a][c] * mx[b][d];
        }
    }
    return e;
}

std::array<int, 4> element_nodes(const SpaceTimeGrid& grid, int ix, int jt) {
    return {grid.node(ix, jt), grid.node(ix + 1, jt),
            grid.node(ix, jt + 1), grid.node(ix + 1, jt + 1)};
}

} // namespace heatctrl

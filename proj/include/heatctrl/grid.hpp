#pragma once

#include <array>
#include <functional>
#include <vector>

namespace heatctrl {

/// Nodal coefficient vector over a space-time grid, one value per node.
using Field = std::vector<double>;

/// Uniform tensor grid on Q = (0,T) x (0,1) with bilinear (Q1) elements.
///
/// Nodes are ordered row-major by time level then space index:
/// node(i, j) sits at (t = j*ht, x = i*hx) and has index j*(nx+1) + i.
struct SpaceTimeGrid {
    double T;  ///< time horizon, > 0
    int nx;    ///< spatial intervals, >= 2
    int nt;    ///< temporal intervals, >= 2
    double hx; ///< 1/nx
    double ht; ///< T/nt

    int num_nodes() const { return (nx + 1) * (nt + 1); }
    int num_elements() const { return nx * nt; }

    int node(int i, int j) const { return j * (nx + 1) + i; }
    double node_x(int index) const { return (index % (nx + 1)) * hx; }
    double node_t(int index) const { return (index / (nx + 1)) * ht; }

    bool on_initial(int index) const { return index / (nx + 1) == 0; }
    bool on_final(int index) const { return index / (nx + 1) == nt; }
    bool on_left(int index) const { return index % (nx + 1) == 0; }
    bool on_right(int index) const { return index % (nx + 1) == nx; }

    /// Nodal interpolant of an analytic field g(t, x).
    Field interpolate(const std::function<double(double, double)>& g) const;
};

/// Function spaces realized as node partitions.
enum class SpaceTag {
    VariationBoundary, ///< fixed on {t=0}, {t=T}, {x=0}; free elsewhere (incl. x=1)
    VariationInner,    ///< fixed on all of the space-time boundary
    CorrectorH10,      ///< fixed on all of the space-time boundary
};

/// Partition of grid nodes into free (unknown) and fixed (pinned) sets.
struct DofMask {
    SpaceTag tag;
    std::vector<int> free_nodes;  ///< ascending node indices with unknown value
    std::vector<int> fixed_nodes; ///< ascending node indices pinned to data
    std::vector<int> free_index;  ///< node -> position in free_nodes, or -1

    int num_free() const { return static_cast<int>(free_nodes.size()); }
    bool is_free(int node) const { return free_index[node] >= 0; }

    /// Values of a full field at the free nodes, in free order.
    std::vector<double> gather(const Field& full) const;
    /// Writes free-ordered values back into a full field (fixed nodes untouched).
    void scatter(const std::vector<double>& free_values, Field& full) const;
};

/// Exact integrals of bilinear shape-function products over one hx x ht
/// rectangle. Local node k = 2a + b, a = time factor, b = space factor,
/// so: 0=(t0,x0), 1=(t0,x1), 2=(t1,x0), 3=(t1,x1).
struct ElementIntegrals {
    double hx;
    double ht;
    std::array<std::array<double, 4>, 4> mass;            ///< integral of Ni*Nj
    std::array<std::array<double, 4>, 4> space_stiffness; ///< integral of dxNi*dxNj
    std::array<std::array<double, 4>, 4> time_stiffness;  ///< integral of dtNi*dtNj
    std::array<std::array<double, 4>, 4> mixed;           ///< integral of Ni*dtNj
};

/// Builds a grid. Throws std::invalid_argument for T <= 0 or interval
/// counts below 2.
SpaceTimeGrid make_grid(double T, int nx, int nt);

/// Node partition for the requested function space.
DofMask dof_mask(const SpaceTimeGrid& grid, SpaceTag tag);

/// Closed-form element matrices for a hx x ht rectangle.
ElementIntegrals element_integrals(double hx, double ht);

/// Global node indices of the four corners of element (ix, jt), in local order.
std::array<int, 4> element_nodes(const SpaceTimeGrid& grid, int ix, int jt);

} // namespace heatctrl

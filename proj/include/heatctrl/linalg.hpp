#pragma once

#include <span>
#include <vector>

namespace heatctrl {

/// One (row, col, value) contribution for assembly. Duplicates are summed.
struct Triplet {
    int row;
    int col;
    double value;
};

/// Square sparse matrix in compressed sparse row layout.
/// Column indices are strictly increasing within each row.
struct SparseMatrix {
    int n = 0;
    std::vector<int> row_ptr;
    std::vector<int> col_idx;
    std::vector<double> values;

    int nnz() const { return static_cast<int>(values.size()); }

    /// y = A*x. Fixed accumulation order (ascending column within row).
    void apply(std::span<const double> x, std::span<double> y) const;

    /// y = A^T * x, same deterministic ordering (row-major scatter).
    void apply_transpose(std::span<const double> x, std::span<double> y) const;

    /// x^T A y, accumulated row by row.
    double quadratic_form(std::span<const double> x, std::span<const double> y) const;

    /// max |A_ij - A_ji| over stored entries (0 for empty matrices).
    double max_asymmetry() const;
};

/// Outcome of an iterative solve.
struct SolveReport {
    int iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
};

/// Sums duplicate triplets into canonical sorted CSR.
/// Throws std::invalid_argument on out-of-range indices.
SparseMatrix assemble(int n, std::vector<Triplet> triplets);

/// Jacobi-preconditioned conjugate gradients for SPD systems.
///
/// Returns x with ||Ax-b||/||b|| <= tol, or converged=false after maxit.
/// b = 0 returns x = 0 immediately. All reductions use a fixed summation
/// order, so identical inputs give bit-identical outputs.
/// Throws IndefiniteMatrixError on a zero or negative diagonal entry.
std::pair<std::vector<double>, SolveReport>
cg_solve(const SparseMatrix& A, std::span<const double> b, double tol, int maxit);

/// As cg_solve, additionally recording ||r||_2 after every iteration
/// (residual_history[0] is the initial residual norm).
std::pair<std::vector<double>, SolveReport>
cg_solve_traced(const SparseMatrix& A, std::span<const double> b, double tol,
                int maxit, std::vector<double>& residual_history);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

} // namespace heatctrl

#include "heatctrl/linalg.hpp"

#include "heatctrl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heatctrl {

void SparseMatrix::apply(std::span<const double> x, std::span<double> y) const {
    for (int r = 0; r < n; ++r) {
        double acc = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            acc += values[k] * x[col_idx[k]];
        }
        y[r] = acc;
    }
}

void SparseMatrix::apply_transpose(std::span<const double> x, std::span<double> y) const {
    std::fill(y.begin(), y.end(), 0.0);
    for (int r = 0; r < n; ++r) {
        const double xr = x[r];
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            y[col_idx[k]] += values[k] * xr;
        }
    }
}

double SparseMatrix::quadratic_form(std::span<const double> x,
                                    std::span<const double> y) const {
    double acc = 0.0;
    for (int r = 0; r < n; ++r) {
        double row = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            row += values[k] * y[col_idx[k]];
        }
        acc += x[r] * row;
    }
    return acc;
}

double SparseMatrix::max_asymmetry() const {
    double worst = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            const int c = col_idx[k];
            // binary search for (c, r)
            double transposed = 0.0;
            const int lo = row_ptr[c], hi = row_ptr[c + 1];
            const int* begin = col_idx.data() + lo;
            const int* end = col_idx.data() + hi;
            const int* it = std::lower_bound(begin, end, r);
            if (it != end && *it == r) {
                transposed = values[lo + (it - begin)];
            }
            worst = std::max(worst, std::abs(values[k] - transposed));
        }
    }
    return worst;
}

SparseMatrix assemble(int n, std::vector<Triplet> triplets) {
    if (n < 0) {
        throw std::invalid_argument("assemble: negative dimension");
    }
    for (const Triplet& t : triplets) {
        if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
            throw std::invalid_argument("assemble: index (" + std::to_string(t.row) +
                                        "," + std::to_string(t.col) +
                                        ") out of range for n=" + std::to_string(n));
        }
    }
    std::stable_sort(triplets.begin(), triplets.end(),
                     [](const Triplet& a, const Triplet& b) {
                         return a.row != b.row ? a.row < b.row : a.col < b.col;
                     });

    SparseMatrix A;
    A.n = n;
    A.row_ptr.assign(n + 1, 0);
    std::size_t k = 0;
    while (k < triplets.size()) {
        const int r = triplets[k].row;
        const int c = triplets[k].col;
        double sum = 0.0;
        while (k < triplets.size() && triplets[k].row == r && triplets[k].col == c) {
            sum += triplets[k].value;
            ++k;
        }
        A.col_idx.push_back(c);
        A.values.push_back(sum);
        A.row_ptr[r + 1] = static_cast<int>(A.values.size());
    }
    for (int r = 0; r < n; ++r) {
        A.row_ptr[r + 1] = std::max(A.row_ptr[r + 1], A.row_ptr[r]);
    }
    return A;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

namespace {

std::pair<std::vector<double>, SolveReport>
cg_impl(const SparseMatrix& A, std::span<const double> b, double tol, int maxit,
        std::vector<double>* residual_history) {
    const int n = A.n;
    std::vector<double> x(n, 0.0);
    SolveReport report;

    const double bnorm = norm2(b);
    if (bnorm == 0.0) {
        report.converged = true;
        return {std::move(x), report};
    }

    std::vector<double> inv_diag(n, 0.0);
    for (int r = 0; r < n; ++r) {
        double d = 0.0;
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k) {
            if (A.col_idx[k] == r) {
                d = A.values[k];
                break;
            }
        }
        if (!(d > 0.0)) {
            throw IndefiniteMatrixError("cg_solve: non-positive diagonal entry at row " +
                                        std::to_string(r));
        }
        inv_diag[r] = 1.0 / d;
    }

    // x0 = 0, so r0 = b.
    std::vector<double> r(b.begin(), b.end());
    std::vector<double> z(n), p(n), Ap(n);
    for (int i = 0; i < n; ++i) {
        z[i] = inv_diag[i] * r[i];
    }
    p = z;
    double rz = dot(r, z);
    double rnorm = bnorm;
    if (residual_history) {
        residual_history->push_back(rnorm);
    }

    for (int it = 0; it < maxit; ++it) {
        if (rnorm / bnorm <= tol) {
            break;
        }
        A.apply(p, Ap);
        const double pAp = dot(p, Ap);
        if (!(pAp > 0.0)) {
            throw IndefiniteMatrixError("cg_solve: direction of non-positive curvature");
        }
        const double alpha = rz / pAp;
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
        }
        for (int i = 0; i < n; ++i) {
            r[i] -= alpha * Ap[i];
        }
        for (int i = 0; i < n; ++i) {
            z[i] = inv_diag[i] * r[i];
        }
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        for (int i = 0; i < n; ++i) {
            p[i] = z[i] + beta * p[i];
        }
        rz = rz_next;
        rnorm = norm2(r);
        ++report.iterations;
        if (residual_history) {
            residual_history->push_back(rnorm);
        }
    }

    report.relative_residual = rnorm / bnorm;
    report.converged = report.relative_residual <= tol;
    return {std::move(x), report};
}

} // namespace

std::pair<std::vector<double>, SolveReport>
cg_solve(const SparseMatrix& A, std::span<const double> b, double tol, int maxit) {
    return cg_impl(A, b, tol, maxit, nullptr);
}

std::pair<std::vector<double>, SolveReport>
cg_solve_traced(const SparseMatrix& A, std::span<const double> b, double tol,
                int maxit, std::vector<double>& residual_history) {
    residual_history.clear();
    return cg_impl(A, b, tol, maxit, &residual_history);
}

} // namespace heatctrl

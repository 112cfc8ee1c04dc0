#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tang::kernels {

/// Five-point Laplacian with Dirichlet cut cells, matrix-free:
///   (A x)_i = diag_i * x_i - inv_h2 * sum over interior neighbours x_j.
/// nbr holds 4 entries per row (W, E, S, N), -1 where the neighbour is a
/// boundary cut (its zero value is already folded into diag).
struct StencilSystem {
    std::size_t n = 0;
    double inv_h2 = 0;
    std::vector<double> diag;
    std::vector<std::int32_t> nbr;
};

void apply_serial(const StencilSystem& sys, const double* x, double* y);
void apply_omp(const StencilSystem& sys, const double* x, double* y);

/// Block-deterministic reductions: fixed 4096-element blocks summed serially,
/// block partials accumulated in index order. The serial and OpenMP variants
/// produce bitwise-identical results for any thread count.
double dot_serial(const double* a, const double* b, std::size_t n);
double dot_omp(const double* a, const double* b, std::size_t n);
double sum_serial(const double* a, std::size_t n);
double sum_omp(const double* a, std::size_t n);

void axpy_serial(double alpha, const double* x, double* y, std::size_t n); // y += alpha x
void axpy_omp(double alpha, const double* x, double* y, std::size_t n);
void xpay_serial(const double* x, double beta, double* y, std::size_t n); // y = x + beta y
void xpay_omp(const double* x, double beta, double* y, std::size_t n);

struct CgResult {
    int iterations = 0;
    double rel_residual = 0;
    bool converged = false;
};

/// Unpreconditioned CG from a zero initial guess down to
/// ||b - A u|| <= tol ||b||. `parallel` switches every kernel between the
/// serial reference and the OpenMP implementation; both give identical bits.
CgResult cg_solve(const StencilSystem& sys, std::span<const double> rhs, std::span<double> u,
                  double tol, int max_iter, bool parallel);

} // namespace tang::kernels

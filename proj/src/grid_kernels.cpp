#include "tang/grid_kernels.hpp"

#include <algorithm>
#include <cmath>

namespace tang::kernels {

namespace {

constexpr std::size_t kBlock = 4096;

inline double apply_row(const StencilSystem& sys, const double* x, std::size_t i) {
    double v = sys.diag[i] * x[i];
    double acc = 0.0;
    const std::int32_t* nb = &sys.nbr[4 * i];
    for (int a = 0; a < 4; ++a)
        if (nb[a] >= 0) acc += x[nb[a]];
    return v - sys.inv_h2 * acc;
}

inline double dot_block(const double* a, const double* b, std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    return s;
}

inline double sum_block(const double* a, std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i];
    return s;
}

} // namespace

void apply_serial(const StencilSystem& sys, const double* x, double* y) {
    for (std::size_t i = 0; i < sys.n; ++i) y[i] = apply_row(sys, x, i);
}

void apply_omp(const StencilSystem& sys, const double* x, double* y) {
    const std::int64_t n = static_cast<std::int64_t>(sys.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) y[i] = apply_row(sys, x, static_cast<std::size_t>(i));
}

double dot_serial(const double* a, const double* b, std::size_t n) {
    const std::size_t nb = (n + kBlock - 1) / kBlock;
    double total = 0.0;
    for (std::size_t blk = 0; blk < nb; ++blk)
        total += dot_block(a, b, blk * kBlock, std::min(n, (blk + 1) * kBlock));
    return total;
}

double dot_omp(const double* a, const double* b, std::size_t n) {
    const std::int64_t nb = static_cast<std::int64_t>((n + kBlock - 1) / kBlock);
    std::vector<double> partial(static_cast<std::size_t>(nb));
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < nb; ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
        partial[blk] = dot_block(a, b, lo, std::min(n, lo + kBlock));
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

double sum_serial(const double* a, std::size_t n) {
    const std::size_t nb = (n + kBlock - 1) / kBlock;
    double total = 0.0;
    for (std::size_t blk = 0; blk < nb; ++blk)
        total += sum_block(a, blk * kBlock, std::min(n, (blk + 1) * kBlock));
    return total;
}

double sum_omp(const double* a, std::size_t n) {
    const std::int64_t nb = static_cast<std::int64_t>((n + kBlock - 1) / kBlock);
    std::vector<double> partial(static_cast<std::size_t>(nb));
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < nb; ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
        partial[blk] = sum_block(a, lo, std::min(n, lo + kBlock));
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

void axpy_serial(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_omp(double alpha, const double* x, double* y, std::size_t n) {
    const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nn; ++i) y[i] += alpha * x[i];
}

void xpay_serial(const double* x, double beta, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + beta * y[i];
}

void xpay_omp(const double* x, double beta, double* y, std::size_t n) {
    const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nn; ++i) y[i] = x[i] + beta * y[i];
}

CgResult cg_solve(const StencilSystem& sys, std::span<const double> rhs, std::span<double> u,
                  double tol, int max_iter, bool parallel) {
    const std::size_t n = sys.n;
    auto apply = parallel ? apply_omp : apply_serial;
    auto dot = parallel ? dot_omp : dot_serial;
    auto axpy = parallel ? axpy_omp : axpy_serial;
    auto xpay = parallel ? xpay_omp : xpay_serial;

    std::vector<double> r(rhs.begin(), rhs.end()); // u starts at zero
    std::vector<double> p(r);
    std::vector<double> ap(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = 0.0;

    const double bnorm2 = dot(rhs.data(), rhs.data(), n);
    if (bnorm2 == 0.0) return {0, 0.0, true};
    const double stop2 = tol * tol * bnorm2;

    double rs = dot(r.data(), r.data(), n);
    CgResult res;
    while (res.iterations < max_iter && rs > stop2) {
        apply(sys, p.data(), ap.data());
        const double alpha = rs / dot(p.data(), ap.data(), n);
        axpy(alpha, p.data(), u.data(), n);
        axpy(-alpha, ap.data(), r.data(), n);
        const double rs_next = dot(r.data(), r.data(), n);
        xpay(r.data(), rs_next / rs, p.data(), n);
        rs = rs_next;
        ++res.iterations;
    }
    res.rel_residual = std::sqrt(rs / bnorm2);
    res.converged = rs <= stop2;
    return res;
}

} // namespace tang::kernels

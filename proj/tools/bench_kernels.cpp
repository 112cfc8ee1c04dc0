// Times the serial reference kernels against the OpenMP ones on the disk
// torsion system and checks that both produce identical bits.

#include "tang/grid_kernels.hpp"
#include "tang/torsion.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int across = argc > 1 ? std::atoi(argv[1]) : 512;
    const double h = 2.0 / across;
    const auto domain = tang::make_disk_domain(1.0);
    const auto sys = tang::build_stencil_system(domain, h);
    std::printf("disk system: h = 1/%d, unknowns = %zu\n", across / 2, sys.n);
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both paths run serially\n");
#endif

    std::vector<double> x(sys.n), y1(sys.n), y2(sys.n);
    for (std::size_t i = 0; i < sys.n; ++i) x[i] = 1.0 + 1e-3 * static_cast<double>(i % 97);

    const int reps = 200;
    auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) tang::kernels::apply_serial(sys, x.data(), y1.data());
    const double t_serial = ms_since(t0) / reps;
    t0 = Clock::now();
    for (int r = 0; r < reps; ++r) tang::kernels::apply_omp(sys, x.data(), y2.data());
    const double t_omp = ms_since(t0) / reps;
    const bool apply_same = std::memcmp(y1.data(), y2.data(), sys.n * sizeof(double)) == 0;
    std::printf("apply:  serial %8.3f ms   omp %8.3f ms   speedup %5.2fx   identical: %s\n",
                t_serial, t_omp, t_serial / t_omp, apply_same ? "yes" : "NO");

    t0 = Clock::now();
    double d1 = 0;
    for (int r = 0; r < reps; ++r) d1 = tang::kernels::dot_serial(x.data(), y1.data(), sys.n);
    const double td_serial = ms_since(t0) / reps;
    t0 = Clock::now();
    double d2 = 0;
    for (int r = 0; r < reps; ++r) d2 = tang::kernels::dot_omp(x.data(), y2.data(), sys.n);
    const double td_omp = ms_since(t0) / reps;
    std::printf("dot:    serial %8.3f ms   omp %8.3f ms   speedup %5.2fx   identical: %s\n",
                td_serial, td_omp, td_serial / td_omp, d1 == d2 ? "yes" : "NO");

    std::vector<double> rhs(sys.n, 1.0), u_serial(sys.n), u_omp(sys.n);
    t0 = Clock::now();
    const auto cg_s = tang::kernels::cg_solve(sys, rhs, u_serial, 1e-10, 200000, false);
    const double tc_serial = ms_since(t0);
    t0 = Clock::now();
    const auto cg_p = tang::kernels::cg_solve(sys, rhs, u_omp, 1e-10, 200000, true);
    const double tc_omp = ms_since(t0);
    const bool cg_same =
        std::memcmp(u_serial.data(), u_omp.data(), sys.n * sizeof(double)) == 0 &&
        cg_s.iterations == cg_p.iterations;
    std::printf("cg:     serial %8.1f ms   omp %8.1f ms   speedup %5.2fx   iters %d   identical: %s\n",
                tc_serial, tc_omp, tc_serial / tc_omp, cg_s.iterations, cg_same ? "yes" : "NO");
    return (apply_same && d1 == d2 && cg_same) ? 0 : 1;
}

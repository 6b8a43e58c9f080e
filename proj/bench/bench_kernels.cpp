// Throughput comparison of the sweep kernels: serial reference vs OpenMP.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ctsurf/analysis.hpp"
#include "ctsurf/sweeps.hpp"

using namespace ctsurf;

namespace {

template <typename F>
double time_s(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %9.3f s %9.3f s %7.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-28s %11s %11s %8s\n", "kernel", "serial", "parallel", "speedup");

    row("identity_sweep 2e5",
        time_s([] { identity_sweep(200000, 1, 1e-6, 2.0, Exec::Serial); }),
        time_s([] { identity_sweep(200000, 1, 1e-6, 2.0, Exec::Parallel); }));

    row("rel_length_margins 20x1e4",
        time_s([] {
            for (int n = 1; n <= 20; ++n)
                relative_length_min_margin(n, 1.0, 10000, 7, Exec::Serial);
        }),
        time_s([] {
            for (int n = 1; n <= 20; ++n)
                relative_length_min_margin(n, 1.0, 10000, 7, Exec::Parallel);
        }));

    row("pants_energy_sweep 2e3",
        time_s([] { pants_energy_sweep(2000, 2, 1e-6, 0.5, Exec::Serial); }),
        time_s([] { pants_energy_sweep(2000, 2, 1e-6, 0.5, Exec::Parallel); }));

    row("gradient_fd 20x1000",
        time_s([] { gradient_fd_max_relerr(20, 1000, 3, 1e-6, Exec::Serial); }),
        time_s([] { gradient_fd_max_relerr(20, 1000, 3, 1e-6, Exec::Parallel); }));

    {
        const TreeSurface tree = build_tree(CuffProfile::power(1.5, 1.0, 1.0), 14);
        row("mass_bounds depth 14",
            time_s([&] { mass_bound_min_margin(tree, 14, Exec::Serial); }),
            time_s([&] { mass_bound_min_margin(tree, 14, Exec::Parallel); }));
    }

    std::printf("(kernels are bit-deterministic: both policies return"
                " identical values; see tests/test_sweeps.cpp)\n");
    return 0;
}

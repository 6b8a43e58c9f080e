#pragma once

#include <cstddef>
#include <cstdint>

#include "ctsurf/surface.hpp"

namespace ctsurf {

/// Execution policy of the sweep kernels.  Serial runs the plain loop and is
/// kept as the reference implementation; Parallel distributes items across
/// OpenMP threads.  Per-item work depends only on (seed, item index) and the
/// reductions are exact min/max, so both policies produce identical results.
enum class Exec { Serial, Parallel };

/// Deterministic per-item RNG (splitmix64 stream).
struct SweepRng {
    std::uint64_t state;

    explicit SweepRng(std::uint64_t seed, std::uint64_t item);
    double u01();
    double log_uniform(double lo, double hi);
};

struct IdentityStats {
    double max_pentagon_residual;  // |tanh(p) cosh(o12) tanh(l2/2) - 1|
    double max_pq_residual;        // |p + q - l1/2| / (l1/2)
    double max_axis_residual;      // |oP + oR - o12| / o12
    double max_b1_gluing_residual; // |tanh(arc2) cosh(oR) - tanh(b1p)| rel
};
IdentityStats identity_sweep(std::size_t count, std::uint64_t seed, double lo,
                             double hi, Exec exec);

/// Minimal two-sided-bound margin of the relative lengths over triples with
/// max(l2, l3) <= C2/(n+1)^2 (lengths log-uniform in [1e-6, cap]).
double relative_length_min_margin(int n, double c2, std::size_t count,
                           std::uint64_t seed, Exec exec);

struct AuxStats {
    bool all_b1_bounded;
    double max_b1;            // empirical D
    double max_denom_c;
    double max_atanh_c;
    double min_ratio_l3_le_l2;   // p/l1 over triples with l3 <= l2
    double min_ratio_cosh_le_2;  // p/l1 over triples with cosh(l3/2) <= 2
};
AuxStats aux_sweep(std::size_t count, std::uint64_t seed, double B, Exec exec);

struct EnergyStats {
    double max_ratio;       // pants energy / (1/l1 + 1/l2 + 1/l3)
    double max_quad_error;
    double max_quad_bound_excess;  // numeric / per-quad analytic bound
};
EnergyStats pants_energy_sweep(std::size_t count, std::uint64_t seed, double lo,
                               double hi, Exec exec);

/// Max relative error between the analytic gradient and central differences
/// (step h) at `points` interior points of each of `triples` random quads.
double gradient_fd_max_relerr(std::size_t triples, std::size_t points,
                              std::uint64_t seed, double h, Exec exec);

struct DilatationStats {
    double max_formula_dev;   // |quoted quotient - cosh(-y)|, absolute
    double max_beltrami_dev;  // |implied dilatation - cosh(-y)|, absolute
};
DilatationStats dilatation_grid(std::size_t nx, std::size_t ny, double y_min,
                                double y_max, Exec exec);

/// Enumerate every cuff to max_level and compare its transverse mass against
/// the certified bounds; returns the worst signed margin
/// min(value - lower, upper - value) (nonnegative = all inside).
double mass_bound_min_margin(const TreeSurface& tree, int max_level, Exec exec);

/// Sign agreement of trig_gap(x, A) with sign(A - 1) on a log grid
/// x in (0, x_max], A in [a_lo, a_hi]; returns the number of violations.
std::size_t trig_gap_sign_violations(std::size_t nx, std::size_t na,
                                     double x_max, double a_lo, double a_hi,
                                     Exec exec);

}  // namespace ctsurf

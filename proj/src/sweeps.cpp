#include "ctsurf/sweeps.hpp"

#include <algorithm>
#include <cmath>

#include "ctsurf/foliation.hpp"
#include "ctsurf/qc.hpp"
#include "exception_gate.hpp"

namespace ctsurf {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

SweepRng::SweepRng(std::uint64_t seed, std::uint64_t item)
    : state(mix64(seed ^ mix64(item))) {}

double SweepRng::u01() {
    state = mix64(state);
    return double(state >> 11) * 0x1.0p-53;
}

double SweepRng::log_uniform(double lo, double hi) {
    return std::exp(std::log(lo) + u01() * (std::log(hi) - std::log(lo)));
}

IdentityStats identity_sweep(std::size_t count, std::uint64_t seed, double lo,
                             double hi, Exec exec) {
    double pent = 0.0, pq = 0.0, axis = 0.0, glue = 0.0;
    const std::int64_t n = std::int64_t(count);
    detail::ExceptionGate gate;
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel) \
    reduction(max : pent, pq, axis, glue)
    for (std::int64_t i = 0; i < n; ++i) {
        gate.run([&, i] {
            SweepRng rng(seed, std::uint64_t(i));
            const PantsTriple t(rng.log_uniform(lo, hi), rng.log_uniform(lo, hi),
                                rng.log_uniform(lo, hi));
            const FrontGeometry g = front_geometry(t);
            pent = std::max(pent, std::abs(std::tanh(g.p) * cosh_o12(t) *
                                               std::tanh(0.5 * t.l2) - 1.0));
            pq = std::max(pq, std::abs(g.p + g.q - 0.5 * t.l1) / (0.5 * t.l1));
            axis = std::max(axis, std::abs(g.oP + g.oR - g.o12) / g.o12);
            glue = std::max(glue, std::abs(std::tanh(g.arc2) * std::cosh(g.oR) -
                                           std::tanh(g.b1p)) / std::tanh(g.b1p));
        });
    }
    gate.rethrow();
    return {pent, pq, axis, glue};
}

double relative_length_min_margin(int n, double c2, std::size_t count,
                                  std::uint64_t seed, Exec exec) {
    const double cap = c2 / (double(n + 1) * double(n + 1));
    double neg_margin = -1e300;  // track -margin so the reduction is a max
    const std::int64_t cnt = std::int64_t(count);
    detail::ExceptionGate gate;
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel) \
    reduction(max : neg_margin)
    for (std::int64_t i = 0; i < cnt; ++i) {
        gate.run([&, i] {
            SweepRng rng(seed, std::uint64_t(i));
            // the log draw may land one ulp above the cap
            const PantsTriple t(rng.log_uniform(1e-6, 2.0),
                                std::min(rng.log_uniform(1e-6, cap), cap),
                                std::min(rng.log_uniform(1e-6, cap), cap));
            neg_margin = std::max(neg_margin, -relative_length_margin(t, c2, n));
        });
    }
    gate.rethrow();
    return -neg_margin;
}

AuxStats aux_sweep(std::size_t count, std::uint64_t seed, double B, Exec exec) {
    double max_b1 = 0.0, denom = 0.0, lin = 0.0;
    double neg_r32 = -1e300, neg_rc2 = -1e300;
    std::int64_t bad = 0;
    const std::int64_t cnt = std::int64_t(count);
    detail::ExceptionGate gate;
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel) \
    reduction(max : max_b1, denom, lin, neg_r32, neg_rc2) reduction(+ : bad)
    for (std::int64_t i = 0; i < cnt; ++i) {
        gate.run([&, i] {
            SweepRng rng(seed, std::uint64_t(i));
            const PantsTriple t(rng.log_uniform(1e-6, 1.0),
                                rng.log_uniform(1e-6, 1.0),
                                rng.log_uniform(1e-6, 1.0));
            const AuxInequalities a = aux_inequalities(t, B);
            if (!a.b1_bound_ok) ++bad;
            max_b1 = std::max(max_b1, a.b1);
            denom = std::max(denom, a.denom_bound_c);
            lin = std::max(lin, a.atanh_linear_c);
            if (t.l3 <= t.l2) neg_r32 = std::max(neg_r32, -a.p_vs_l1_ratio);
            if (std::cosh(0.5 * t.l3) <= 2.0)
                neg_rc2 = std::max(neg_rc2, -a.p_vs_l1_ratio);
        });
    }
    gate.rethrow();
    return {bad == 0, max_b1, denom, lin, -neg_r32, -neg_rc2};
}

EnergyStats pants_energy_sweep(std::size_t count, std::uint64_t seed, double lo,
                               double hi, Exec exec) {
    double ratio = 0.0, err = 0.0, excess = 0.0;
    const std::int64_t cnt = std::int64_t(count);
    detail::ExceptionGate gate;
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::Parallel) \
    reduction(max : ratio, err, excess)
    for (std::int64_t i = 0; i < cnt; ++i) {
        gate.run([&, i] {
            SweepRng rng(seed, std::uint64_t(i));
            const PantsTriple t(rng.log_uniform(lo, hi), rng.log_uniform(lo, hi),
                                rng.log_uniform(lo, hi));
            const EnergyEstimate e = pants_dirichlet(t);
            ratio = std::max(ratio,
                             e.numeric / (1.0 / t.l1 + 1.0 / t.l2 + 1.0 / t.l3));
            err = std::max(err, e.quad_error / e.numeric);
            const FrontGeometry g = front_geometry(t);
            const EnergyEstimate q = quad_dirichlet({g.p, g.oP, 1.0});
            excess = std::max(excess, q.numeric / q.analytic_bound);
        });
    }
    gate.rethrow();
    return {ratio, err, excess};
}

double gradient_fd_max_relerr(std::size_t triples, std::size_t points,
                              std::uint64_t seed, double h, Exec exec) {
    double worst = 0.0;
    const std::int64_t cnt = std::int64_t(triples);
    detail::ExceptionGate gate;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel) \
    reduction(max : worst)
    for (std::int64_t i = 0; i < cnt; ++i) {
        gate.run([&, i] {
            SweepRng rng(seed, std::uint64_t(i));
            const PantsTriple t(rng.log_uniform(1e-4, 1.0),
                                rng.log_uniform(1e-4, 1.0),
                                rng.log_uniform(1e-4, 1.0));
            const FrontGeometry g = front_geometry(t);
            const QuadFoliation f{g.p, g.oP, 1.0};
            for (std::size_t k = 0; k < points; ++k) {
                // interior points, away from the boundary by a few steps
                const double x = (0.02 + 0.96 * rng.u01()) * f.o_len;
                if (x < 4.0 * h || x > f.o_len - 4.0 * h) continue;
                const double dm = d_h(x - h, f.p_len);
                const double y =
                    (0.05 + 0.9 * rng.u01()) * std::min(dm, d_h(x, f.p_len));
                if (y < 4.0 * h) continue;
                const GradientSq an = v_gradient(x, y, f);
                const double fdx =
                    (v_value(x + h, y, f) - v_value(x - h, y, f)) / (2.0 * h);
                const double fdy =
                    (v_value(x, y + h, f) - v_value(x, y - h, f)) / (2.0 * h);
                const double ax = std::sqrt(an.gx2), ay = std::sqrt(an.gy2);
                // v decreases in x (d_h grows), compare |fdx| with sqrt(gx2)
                const double ex =
                    std::abs(std::abs(fdx) - ax) / std::max(ax, 1e-9);
                const double ey = std::abs(fdy - ay) / ay;
                worst = std::max(worst, std::max(ex, ey));
            }
        });
    }
    gate.rethrow();
    return worst;
}

DilatationStats dilatation_grid(std::size_t nx, std::size_t ny, double y_min,
                                double y_max, Exec exec) {
    double fdev = 0.0, bdev = 0.0;
    const std::int64_t total = std::int64_t(nx * ny);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel) \
    reduction(max : fdev, bdev)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const std::size_t ix = std::size_t(idx) % nx;
        const std::size_t iy = std::size_t(idx) / nx;
        const double x = -1.0 + 2.0 * double(ix) / double(nx - 1);
        // log-spaced in -y between y_min and y_max
        const double t = std::exp(std::log(y_min) +
                                  (std::log(y_max) - std::log(y_min)) *
                                      double(iy) / double(ny - 1));
        const FlatPoint z{x, -t};
        fdev = std::max(fdev, std::abs(dilatation_quoted(t) - std::cosh(t)));
        if (t > 1e-5) {
            const double K = implied_dilatation(beltrami_estimate(z, 1e-6));
            bdev = std::max(bdev, std::abs(K - std::cosh(t)));
        }
    }
    return {fdev, bdev};
}

double mass_bound_min_margin(const TreeSurface& tree, int max_level, Exec exec) {
    double neg = -1e300;
    for (int n = 0; n <= max_level; ++n) {
        const std::int64_t cuffs = std::int64_t(1) << (n + 1);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel) \
    reduction(max : neg)
        for (std::int64_t j = 1; j <= cuffs; ++j) {
            const TransverseMass m =
                transverse_mass(tree, CuffAddress(n, std::uint64_t(j)));
            neg = std::max(neg, -std::min(m.value - m.lower, m.upper - m.value));
        }
    }
    return -neg;
}

std::size_t trig_gap_sign_violations(std::size_t nx, std::size_t na,
                                     double x_max, double a_lo, double a_hi,
                                     Exec exec) {
    std::int64_t bad = 0;
    const std::int64_t total = std::int64_t(nx * na);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel) \
    reduction(+ : bad)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const std::size_t ix = std::size_t(idx) % nx;
        const std::size_t ia = std::size_t(idx) / nx;
        const double x = x_max * double(ix + 1) / double(nx);
        const double A = std::exp(std::log(a_lo) +
                                  (std::log(a_hi) - std::log(a_lo)) *
                                      double(ia) / double(na - 1));
        const double gap = trig_gap(x, A);
        if (std::abs(A - 1.0) < 1e-12) {
            if (std::abs(gap) > 1e-14) ++bad;
        } else if (gap * (A - 1.0) <= 0.0) {
            ++bad;
        }
    }
    return std::size_t(bad);
}

}  // namespace ctsurf

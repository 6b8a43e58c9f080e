#include "ctsurf/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "exception_gate.hpp"

namespace ctsurf {

using detail::ExceptionGate;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NotParabolicCertificate: return "NotParabolicCertificate";
        case Verdict::HypothesisNotSatisfied: return "HypothesisNotSatisfied";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

// mass at every cuff of a level, computed level-by-level; index j-1.
std::vector<double> level_masses(const TreeSurface& tree, int n) {
    std::vector<double> mass(2, 1.0);  // both root aliases carry mass 1
    for (int k = 1; k <= n; ++k) {
        std::vector<double> next(std::size_t(1) << (k + 1));
        const auto parents = std::int64_t(mass.size());
        ExceptionGate gate;
#pragma omp parallel for schedule(static)
        for (std::int64_t j = 0; j < parents; ++j) {
            gate.run([&] {
                const RelativeLengths rl =
                    relative_lengths(tree.pants_below(CuffAddress(k - 1, j + 1)));
                next[2 * j] = mass[j] * rl.l0;
                next[2 * j + 1] = mass[j] * rl.l1;
            });
        }
        gate.rethrow();
        mass = std::move(next);
    }
    return mass;
}

}  // namespace

LevelEnergy level_energy(const TreeSurface& tree, int n, int genus_cap,
                         double rel_tol) {
    if (n < 1 || n > tree.depth())
        throw ValidationError("level_energy: level outside [1, depth]");
    const double factor = double(4 * genus_cap + 1);
    const double c2t = tree.validity().c2_requirement * kMassT;

    LevelEnergy out{n, 0.0, 0.0, 0.0};
    if (tree.level_homogeneous()) {
        // one pants and one mass represent the whole level
        double mass = 1.0;
        for (int k = 1; k < n; ++k) {
            const RelativeLengths rl =
                relative_lengths(tree.pants_below(CuffAddress(k - 1, 1)));
            mass *= rl.l0;
        }
        const EnergyEstimate e =
            pants_dirichlet(tree.pants_below(CuffAddress(n - 1, 1)), rel_tol);
        const double count = std::ldexp(1.0, n);
        out.numeric = factor * count * mass * mass * e.numeric;
        out.quad_error = factor * count * mass * mass * e.quad_error;
    } else {
        const std::vector<double> mass = level_masses(tree, n - 1);
        const std::int64_t pants = std::int64_t(mass.size());
        std::vector<double> contrib(pants), errs(pants);
        ExceptionGate gate;
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t j = 0; j < pants; ++j) {
            gate.run([&] {
                const EnergyEstimate e = pants_dirichlet(
                    tree.pants_below(CuffAddress(n - 1, j + 1)), rel_tol);
                contrib[j] = mass[j] * mass[j] * e.numeric;
                errs[j] = mass[j] * mass[j] * e.quad_error;
            });
        }
        gate.rethrow();
        for (std::int64_t j = 0; j < pants; ++j) {
            out.numeric += factor * contrib[j];
            out.quad_error += factor * errs[j];
        }
    }
    const double mass_upper = std::exp(c2t) * std::ldexp(1.0, -(n - 1));
    out.analytic_majorant =
        factor * std::ldexp(1.0, n) * mass_upper * mass_upper * kPantsEnergy *
        (1.0 / tree.level_min_length(n - 1) + 2.0 / tree.level_min_length(n));
    return out;
}

DirichletReport dirichlet_certificate(const TreeSurface& tree, int genus_cap,
                                      double rel_tol) {
    DirichletReport rep;
    rep.hypotheses = tree.validity();
    rep.genus_cap = genus_cap;
    rep.blooming_factor = double(4 * genus_cap + 1);

    bool quad_ok = true;
    double running = 0.0;
    for (int n = 1; n <= tree.depth(); ++n) {
        try {
            rep.per_level.push_back(level_energy(tree, n, genus_cap, rel_tol));
        } catch (const QuadratureFailure& e) {
            quad_ok = false;
            rep.note = e.what();
            break;
        }
        running += rep.per_level.back().numeric;
        rep.partial_sums.push_back(running);
    }

    if (!quad_ok) {
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }
    if (!rep.hypotheses.all_pass()) {
        rep.verdict = Verdict::HypothesisNotSatisfied;
        return rep;
    }

    const double r = tree.profile().r;
    double kcal = 0.0;
    for (const LevelEnergy& le : rep.per_level)
        if (le.n >= 5 || tree.depth() < 5)
            kcal = std::max(kcal, le.numeric * std::pow(double(le.n), r));
    rep.k_calibrated = kCalibrationSafety * kcal;
    for (const LevelEnergy& le : rep.per_level)
        rep.k_majorants.push_back(rep.k_calibrated / std::pow(double(le.n), r));

    const double N = double(tree.depth());
    rep.tail_bound = rep.k_calibrated * std::pow(N, 1.0 - r) / (r - 1.0);
    rep.total_with_tail = rep.partial_sums.back() + rep.tail_bound;
    rep.verdict = std::isfinite(rep.total_with_tail)
                      ? Verdict::NotParabolicCertificate
                      : Verdict::Inconclusive;
    return rep;
}

LeafEscape leaf_escape_check(const TreeSurface& tree, const CuffAddress& a) {
    if (a.level >= tree.depth()) return LeafEscape::Truncated;
    // below: the pants hanging off this cuff splits its front half into p+q
    const PantsTriple below = tree.pants_below(a);
    const RelativeLengths rl = relative_lengths(below);
    if (std::abs(rl.l0 + rl.l1 - 1.0) > 1e-9)
        throw ConsistencyError("leaf continuation: p + q != len/2");
    // above: level >= 1 has its parent pants; the root cuff is shared by the
    // two level-1 pants (both side slots), so continuation holds there too.
    if (a.level >= 1)
        (void)tree.pants_below(a.parent());
    return LeafEscape::Escapes;
}

}  // namespace ctsurf

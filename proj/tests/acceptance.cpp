// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ctsurf/analysis.hpp"
#include "ctsurf/qc.hpp"
#include "ctsurf/render.hpp"
#include "ctsurf/sweeps.hpp"
#include "oracle2d.hpp"

using namespace ctsurf;

namespace {

int g_failures = 0;

class Criterion {
  public:
    explicit Criterion(int id, std::string what)
        : id_(id), what_(std::move(what)), start_(clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            failed_ = true;
            details_ += (details_.empty() ? "" : "; ") + detail;
        }
    }

    void expect_le(double value, double bound, const std::string& label) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s = %.6g (limit %.6g)", label.c_str(),
                      value, bound);
        expect(value <= bound, buf);
        if (value <= bound) last_ok_ = buf;
    }

    void budget(double seconds_limit) {
        const double s = seconds();
        char buf[96];
        std::snprintf(buf, sizeof(buf), "runtime %.2f s (limit %.0f s)", s,
                      seconds_limit);
        expect(s < seconds_limit, buf);
    }

    ~Criterion() {
        std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n",
                    failed_ ? "FAIL" : "PASS", id_, what_.c_str(), seconds(),
                    failed_ ? " -- " : "",
                    failed_ ? details_.c_str() : "");
        std::fflush(stdout);
        if (failed_) ++g_failures;
    }

  private:
    using clock = std::chrono::steady_clock;
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }
    int id_;
    std::string what_;
    clock::time_point start_;
    bool failed_ = false;
    std::string details_, last_ok_;
};

void criterion1() {
    Criterion c(1, "pentagon-hexagon identity suite, 1e5 random triples");
    const IdentityStats st = identity_sweep(100000, 1001, 1e-6, 2.0, Exec::Parallel);
    c.expect_le(st.max_pentagon_residual, 1e-10, "max pentagon residual");
    c.expect_le(st.max_pq_residual, 1e-10, "max p+q residual");
    c.budget(10.0);
}

void criterion2() {
    Criterion c(2, "two-sided relative-length bounds, n=1..20, C2 in {0.5,1,2}");
    double min_margin = 1e300;
    for (int n = 1; n <= 20; ++n)
        for (double c2 : {0.5, 1.0, 2.0})
            min_margin = std::min(
                min_margin, relative_length_min_margin(n, c2, 10000, 2000 + n, Exec::Parallel));
    c.expect_le(-min_margin, 1e-12, "-(min margin)");
    c.budget(30.0);
}

void criterion3() {
    Criterion c(3, "small-length limit of the b1 bound");
    const double x = 1e-6;
    const double v =
        std::asinh(std::sinh(x) * std::cosh(std::asinh(1.0 / std::tanh(x))));
    c.expect_le(std::abs(v - 0.88137), 1e-4, "|value - 0.88137|");
}

void criterion4() {
    Criterion c(4, "analytic gradient vs central differences, 20 x 1000 points");
    const double worst = gradient_fd_max_relerr(20, 1000, 3001, 1e-6, Exec::Parallel);
    c.expect_le(worst, 1e-6, "max relative error");
}

void criterion5() {
    Criterion c(5, "energy oracle: 2-D agreement and frozen pants bound");
    SweepRng rng(4001, 0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const PantsTriple t(rng.log_uniform(1e-4, 1.0), rng.log_uniform(1e-4, 1.0),
                            rng.log_uniform(1e-4, 1.0));
        const FrontGeometry g = front_geometry(t);
        const QuadFoliation f{g.p, g.oP, 1.0};
        const double reduced = quad_dirichlet(f).numeric;
        const double full = oracle2d::energy(f);
        worst = std::max(worst, std::abs(reduced - full) / full);
    }
    c.expect_le(worst, 1e-6, "max 1-D vs 2-D relative gap");
    const EnergyStats st = pants_energy_sweep(2000, 4002, 1e-6, 0.5, Exec::Parallel);
    c.expect_le(st.max_ratio, kPantsEnergy, "max energy ratio vs frozen bound");
}

void criterion6() {
    Criterion c(6, "transverse-mass bounds, full trees to depth 14");
    const double lo_factor = std::exp(-kMassT);
    const double hi_factor = std::exp(kMassT);
    for (double c2 : {0.5, 1.0}) {
        const TreeSurface tree =
            build_tree(CuffProfile::power(1.5, 1.0, c2), 14);
        double worst = 0.0;
        for (int n = 0; n <= 14; ++n) {
            const std::uint64_t count = std::uint64_t(1) << (n + 1);
            const double lo = lo_factor * std::ldexp(1.0, -n);
            const double hi = hi_factor * std::ldexp(1.0, -n);
            for (std::uint64_t j = 1; j <= count; ++j) {
                const double m = transverse_mass(tree, CuffAddress(n, j)).value;
                worst = std::max(worst, std::max(lo - m, m - hi));
            }
        }
        c.expect_le(worst, 0.0, "worst bound violation (C2 = " +
                                    std::to_string(c2) + ")");
        // the tree's own certified bounds hold as well
        c.expect_le(-mass_bound_min_margin(tree, 14, Exec::Parallel), 0.0,
                    "-(certified margin)");
    }
}

void criterion7() {
    Criterion c(7, "dilatation: quoted formula vs cosh and finite differences");
    const DilatationStats st = dilatation_grid(32, 128, 1e-8, 10.0, Exec::Parallel);
    c.expect_le(st.max_formula_dev, 1e-12, "max |quoted - cosh|");
    c.expect_le(st.max_beltrami_dev, 1e-5, "max finite-difference deviation");
}

void criterion8() {
    Criterion c(8, "verdict suite over power, rate-1, constant, blooming");
    for (double r : {1.1, 1.5, 2.0, 3.0}) {
        const TreeSurface tree = build_tree(CuffProfile::power(r, 1.0, 1.0), 20);
        const DirichletReport rep = dirichlet_certificate(tree);
        c.expect(rep.verdict == Verdict::NotParabolicCertificate,
                 "no certificate for r = " + std::to_string(r));
        for (std::size_t i = 1; i < rep.partial_sums.size(); ++i)
            c.expect(rep.partial_sums[i] >= rep.partial_sums[i - 1],
                     "partial sums not monotone");
        double prev = 1e300;
        for (const LevelEnergy& le : rep.per_level) {
            if (le.n < 5) continue;
            c.expect(le.numeric <= prev * (1.0 + 1e-12),
                     "increments not decreasing at n = " + std::to_string(le.n));
            c.expect(le.numeric <=
                         rep.k_calibrated / std::pow(double(le.n), r) * (1 + 1e-12),
                     "increment above K n^-r at n = " + std::to_string(le.n));
            prev = le.numeric;
        }
    }
    c.expect(dirichlet_certificate(build_tree(CuffProfile::power(1.0, 1.0, 1.0), 20))
                     .verdict == Verdict::HypothesisNotSatisfied,
             "rate r = 1 must not certify");
    c.expect(dirichlet_certificate(build_tree(CuffProfile::constant(1.0), 20))
                     .verdict == Verdict::HypothesisNotSatisfied,
             "constant cuffs must not certify");
    for (int C : {1, 3}) {
        const TreeSurface tree = build_tree(CuffProfile::power(2.0, 1.0, 1.0), 20);
        const DirichletReport plain = dirichlet_certificate(tree, 0);
        const DirichletReport bloom = dirichlet_certificate(tree, C);
        c.expect(bloom.verdict == Verdict::NotParabolicCertificate,
                 "blooming C = " + std::to_string(C) + " must certify");
        const double factor = double(4 * C + 1);
        for (std::size_t i = 0; i < plain.per_level.size(); ++i)
            c.expect(bloom.per_level[i].numeric <=
                         factor * plain.per_level[i].numeric * (1 + 1e-12),
                     "blooming level bound exceeds (4C+1) x plain");
    }
    c.budget(60.0);
}

void criterion9() {
    Criterion c(9, "renderer determinism, half-plane containment, exact root axis");
    const TreeSurface tree = build_tree(CuffProfile::power(1.5, 1.0, 1.0), 8);
    const std::vector<HalfPlaneArc> arcs = lift_front(tree, 6);
    const Viewport vp = fit_viewport(arcs);
    const std::string doc1 = svg_document(arcs, vp);
    const std::string doc2 = svg_document(lift_front(tree, 6), vp);
    c.expect(doc1 == doc2, "SVG not byte-identical across runs");

    bool upper = true;
    for (const HalfPlaneArc& a : arcs)
        upper = upper && a.start().imag() > 0.0 && a.end().imag() > 0.0;
    c.expect(upper, "arc endpoint left the upper half-plane");

    const FrontGeometry g = front_geometry(tree.pants_below(CuffAddress(0, 1)));
    const HalfPlaneArc& axis = arcs.front();
    c.expect(axis.kind == HalfPlaneArc::Kind::Vertical && axis.x == 0.0 &&
                 axis.y_start == 1.0 && axis.y_end == std::exp(g.oP),
             "root axis endpoints not exactly i and e^(oP) i");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) {
        std::printf("all 9 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}

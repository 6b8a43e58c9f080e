#include <cmath>

#include <doctest.h>

#include "ctsurf/analysis.hpp"
#include "test_helpers.hpp"

using namespace ctsurf;

TEST_SUITE_BEGIN("analysis");

TEST_CASE("level energy homogeneous fast path") {
    const TreeSurface t = build_tree(CuffProfile::power(1.5, 1.0, 1.0), 8);
    const LevelEnergy le = level_energy(t, 5);
    // recompute the long way: 2^5 identical pants, mass = prod of l0 factors
    double mass = 1.0;
    for (int k = 1; k < 5; ++k)
        mass *= relative_lengths(t.pants_below(CuffAddress(k - 1, 1))).l0;
    const double expected =
        std::ldexp(1.0, 5) * mass * mass *
        pants_dirichlet(t.pants_below(CuffAddress(4, 1))).numeric;
    check_rel(le.numeric, expected, 1e-12);
    CHECK(le.numeric <= le.analytic_majorant);
}

TEST_CASE("level energy scales quadratically with mass") {
    // identical pants geometry, but masses halve at each level because the
    // children are equal; level energies of a homogeneous tree must scale by
    // (2 * 1/4) = 1/2 per level once the pants stop changing... instead test
    // the direct statement: doubling depth-n masses by hand is not possible
    // through the public surface, so compare two levels of a constant tree
    // where the pants energy is level-independent.
    const TreeSurface t = build_tree(CuffProfile::constant(0.5), 10);
    const LevelEnergy e5 = level_energy(t, 5);
    const LevelEnergy e6 = level_energy(t, 6);
    // same pants everywhere; count doubles, mass^2 quarters
    check_rel(e6.numeric, 0.5 * e5.numeric, 1e-10);
}

TEST_CASE("blooming factor scales level energies") {
    const TreeSurface t = build_tree(CuffProfile::power(2.0, 1.0, 1.0), 6);
    const LevelEnergy plain = level_energy(t, 4, 0);
    const LevelEnergy bloom = level_energy(t, 4, 2);
    check_rel(bloom.numeric, 9.0 * plain.numeric, 1e-13);
    check_rel(bloom.analytic_majorant, 9.0 * plain.analytic_majorant, 1e-13);
}

TEST_CASE("certificate verdicts") {
    SUBCASE("power r > 1 certifies") {
        const TreeSurface t = build_tree(CuffProfile::power(1.5, 1.0, 1.0), 12);
        const DirichletReport rep = dirichlet_certificate(t);
        CHECK(rep.verdict == Verdict::NotParabolicCertificate);
        CHECK(rep.tail_bound > 0.0);
        CHECK(std::isfinite(rep.total_with_tail));
        REQUIRE(rep.partial_sums.size() == 12);
        for (std::size_t i = 1; i < rep.partial_sums.size(); ++i)
            CHECK(rep.partial_sums[i] >= rep.partial_sums[i - 1]);
        // increments bounded by the calibrated majorant from level 5 on
        for (const LevelEnergy& le : rep.per_level)
            if (le.n >= 5)
                CHECK(le.numeric <=
                      rep.k_calibrated / std::pow(double(le.n), 1.5) * (1 + 1e-12));
    }
    SUBCASE("r = 1 rate fails the hypothesis") {
        const TreeSurface t = build_tree(CuffProfile::power(1.0, 1.0, 1.0), 10);
        CHECK(dirichlet_certificate(t).verdict == Verdict::HypothesisNotSatisfied);
    }
    SUBCASE("constant cuffs fail the hypothesis") {
        const TreeSurface t = build_tree(CuffProfile::constant(1.0), 8);
        CHECK(dirichlet_certificate(t).verdict == Verdict::HypothesisNotSatisfied);
    }
    SUBCASE("deepening never flips a certificate to hypothesis failure") {
        for (int depth : {6, 10, 14}) {
            const TreeSurface t = build_tree(CuffProfile::power(1.5, 1.0, 1.0), depth);
            CHECK(dirichlet_certificate(t).verdict ==
                  Verdict::NotParabolicCertificate);
        }
    }
}

TEST_CASE("tail bound dominates later levels") {
    const TreeSurface deep = build_tree(CuffProfile::power(1.5, 1.0, 1.0), 20);
    const DirichletReport rep20 = dirichlet_certificate(deep);
    const TreeSurface half = build_tree(CuffProfile::power(1.5, 1.0, 1.0), 10);
    const DirichletReport rep10 = dirichlet_certificate(half);
    // sum of computed levels 11..20 must not exceed tail_bound at N = 10
    double later = 0.0;
    for (const LevelEnergy& le : rep20.per_level)
        if (le.n > 10) later += le.numeric;
    CHECK(later <= rep10.tail_bound);
    // and so must the calibrated per-level majorants for levels N+1..2N
    double majorants = 0.0;
    for (int n = 11; n <= 20; ++n)
        majorants += rep10.k_calibrated / std::pow(double(n), 1.5);
    CHECK(majorants <= rep10.tail_bound);
}

TEST_CASE("blooming certificate reduces to plain at C = 0") {
    const TreeSurface t = build_tree(CuffProfile::power(2.0, 1.0, 1.0), 8);
    const DirichletReport a = dirichlet_certificate(t, 0);
    const DirichletReport b = dirichlet_certificate(t);
    REQUIRE(a.per_level.size() == b.per_level.size());
    for (std::size_t i = 0; i < a.per_level.size(); ++i)
        CHECK(a.per_level[i].numeric == b.per_level[i].numeric);
    CHECK(a.blooming_factor == 1.0);
}

TEST_CASE("leaf escape") {
    const TreeSurface t = build_tree(CuffProfile::power(1.5, 1.0, 1.0), 10);
    SUBCASE("interior cuffs continue") {
        CHECK(leaf_escape_check(t, CuffAddress(0, 1)) == LeafEscape::Escapes);
        CHECK(leaf_escape_check(t, CuffAddress(4, 9)) == LeafEscape::Escapes);
    }
    SUBCASE("truncation boundary is reported, not failed") {
        CHECK(leaf_escape_check(t, CuffAddress(10, 1)) == LeafEscape::Truncated);
    }
    SUBCASE("exhaustive traversal of a symmetric tree") {
        const TreeSurface s = build_tree(CuffProfile::power(2.0, 1.0, 1.0), 10);
        for (int n = 0; n < 10; ++n) {
            const std::uint64_t count = std::uint64_t(1) << (n + 1);
            const std::uint64_t step = std::max<std::uint64_t>(1, count / 64);
            for (std::uint64_t j = 1; j <= count; j += step)
                CHECK(leaf_escape_check(s, CuffAddress(n, j)) == LeafEscape::Escapes);
        }
    }
}

TEST_SUITE_END();

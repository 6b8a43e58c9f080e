#include <cmath>
#include <complex>

#include <doctest.h>

#include "ctsurf/qc.hpp"
#include "ctsurf/sweeps.hpp"
#include "reference_values.hpp"
#include "test_helpers.hpp"

using namespace ctsurf;

TEST_SUITE_BEGIN("qc");

TEST_CASE("inverse map g") {
    SUBCASE("origin goes to i") {
        const std::complex<double> w = inverse_map_g({0.0, 0.0});
        CHECK(w.real() == 0.0);
        CHECK(w.imag() == 1.0);
    }
    SUBCASE("axis lifts to the scaled imaginary axis") {
        for (double x : {-1.0, 0.0, 0.3, 2.0}) {
            const std::complex<double> w = inverse_map_g({x, 0.0});
            CHECK(w.real() == 0.0);
            check_rel(w.imag(), std::exp(x), 1e-15);
        }
    }
    SUBCASE("reference point") {
        const std::complex<double> w = inverse_map_g({0.5, -0.3});
        check_rel(w.real(), refvals::kGmap_re, 1e-14);
        check_rel(w.imag(), refvals::kGmap_im, 1e-14);
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(inverse_map_g({0.0, 0.1}), DomainError);
    }
}

TEST_CASE("forward flattening inverts g") {
    SweepRng rng(41, 0);
    for (int i = 0; i < 400; ++i) {
        const FlatPoint z{-2.0 + 4.0 * rng.u01(), -3.0 * rng.u01() - 1e-6};
        const std::complex<double> w = inverse_map_g(z);
        const FlatPoint back = forward_flatten(w);
        check_rel(back.x, z.x, 1e-10);
        check_rel(back.y, z.y, 1e-10);
    }
}

TEST_CASE("dilatation equals cosh") {
    check_rel(dilatation({0.2, -1.0}), refvals::kCosh1, 1e-13);
    CHECK(dilatation({5.0, 0.0}) == 1.0);
    SUBCASE("independent of x") {
        const double k = dilatation({0.0, -0.7});
        for (double x : {-3.0, 0.4, 11.0}) CHECK(dilatation({x, -0.7}) == k);
    }
    SUBCASE("grid deviation from cosh") {
        const DilatationStats st = dilatation_grid(16, 80, 1e-8, 10.0, Exec::Serial);
        CHECK(st.max_formula_dev < 1e-12);
    }
    SUBCASE("axis limit") {
        for (double t : {1e-8, 1e-10, 1e-12})
            CHECK(std::abs(dilatation({0.0, -t}) - 1.0) < 1e-12);
    }
}

TEST_CASE("k0 bound") {
    check_rel(k0_bound(0.88137), refvals::kCosh088137, 1e-13);
    check_rel(k0_bound(1.0), refvals::kCosh1, 1e-13);
    SUBCASE("monotone in D") {
        double prev = 1.0;
        for (double d : {0.1, 0.5, 0.88137, 1.5, 3.0}) {
            CHECK(k0_bound(d) > prev);
            prev = k0_bound(d);
        }
    }
    SUBCASE("dominates the pointwise dilatation") {
        const double D = 1.3;
        const double k0 = k0_bound(D);
        for (double t : {0.01, 0.4, 1.0, 1.2999})
            CHECK(dilatation({0.0, -t}) <= k0);
    }
    CHECK_THROWS_AS(k0_bound(0.0), DomainError);
}

TEST_CASE("beltrami estimate") {
    SUBCASE("matches cosh at a reference point") {
        const double K = implied_dilatation(beltrami_estimate({0.2, -0.5}, 1e-6));
        CHECK(std::abs(K - std::cosh(0.5)) < 1e-5);
    }
    SUBCASE("mu vanishes toward the axis") {
        double prev = 1.0;
        for (double t : {0.5, 0.1, 0.01, 0.001}) {
            const double mu = beltrami_estimate({0.0, -t}, 1e-7);
            CHECK(mu < prev);
            prev = mu;
        }
        CHECK(prev < 1e-3);
    }
    SUBCASE("grid sweep") {
        const DilatationStats st = dilatation_grid(16, 40, 1e-4, 5.0, Exec::Serial);
        CHECK(st.max_beltrami_dev < 1e-5);
    }
    SUBCASE("step guard") {
        CHECK_THROWS_AS(beltrami_estimate({0.0, -1e-7}, 1e-6), StepTooLarge);
        CHECK_THROWS_AS(beltrami_estimate({0.0, 0.0}, 1e-6), DomainError);
    }
}

TEST_SUITE_END();

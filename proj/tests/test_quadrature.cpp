#include <cmath>

#include <doctest.h>

#include "ctsurf/quadrature.hpp"
#include "test_helpers.hpp"

using namespace ctsurf;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("polynomial is exact") {
    const QuadResult r = integrate([](double x) { return x * x; }, 0.0, 1.0);
    check_rel(r.value, 1.0 / 3.0, 1e-15);
}

TEST_CASE("smooth transcendental") {
    const QuadResult r =
        integrate([](double x) { return std::sin(x); }, 0.0, std::acos(-1.0));
    check_rel(r.value, 2.0, 1e-12);
}

TEST_CASE("integrable spike near the endpoint") {
    // int_0^1 1/sqrt(x + a) dx = 2 (sqrt(1 + a) - sqrt(a))
    const double a = 1e-8;
    const QuadResult r =
        integrate([a](double x) { return 1.0 / std::sqrt(x + a); }, 0.0, 1.0, 1e-10);
    check_rel(r.value, 2.0 * (std::sqrt(1.0 + a) - std::sqrt(a)), 1e-9);
    CHECK(r.intervals > 1);
}

TEST_CASE("interval cap failure") {
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / (x + 1e-12)); },
                              0.0, 1.0, 1e-14, 8),
                    QuadratureFailure);
}

TEST_CASE("degenerate interval") {
    const QuadResult r = integrate([](double) { return 1.0; }, 2.0, 2.0);
    CHECK(r.value == 0.0);
}

TEST_SUITE_END();

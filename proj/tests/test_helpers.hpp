#pragma once

#include <cmath>

#include <doctest.h>

inline void check_rel(double got, double want, double tol) {
    CAPTURE(got);
    CAPTURE(want);
    CHECK(std::abs(got - want) <= tol * std::max(std::abs(want), 1e-300));
}

#pragma once

#include <functional>

#include "ctsurf/constants.hpp"
#include "ctsurf/errors.hpp"

namespace ctsurf {

struct QuadResult {
    double value;
    double error;      // accumulated error estimate
    int intervals;     // intervals at convergence
};

/// Adaptive quadrature of f over [a, b]: embedded Gauss-Legendre 7/15 pair
/// per interval, worst interval bisected until the summed error estimate is
/// below max(rel_tol * |integral|, abs_floor).  Throws QuadratureFailure
/// when max_intervals is exhausted first.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = kQuadRelTol, int max_intervals = 2000,
                     double abs_floor = kQuadAbsFloor);

}  // namespace ctsurf

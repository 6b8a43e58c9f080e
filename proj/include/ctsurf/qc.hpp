#pragma once

#include <complex>

#include "ctsurf/errors.hpp"

namespace ctsurf {

/// Point of the flattened quadrilateral chart: x along the axis (hyperbolic
/// length units), y <= 0 the signed Euclidean offset below the axis.
struct FlatPoint {
    double x;
    double y;
};

/// Inverse of the flattening: w with |w| = e^x and arg w = atan(csch(-y)).
/// The axis (y = 0) maps to i e^x; throws DomainError for y > 0.
std::complex<double> inverse_map_g(const FlatPoint& z);

/// Forward flattening of a point in the lifted chart (upper half-plane,
/// 0 < arg w <= pi/2): x = log|w|, y = log tan(arg w / 2) <= 0.
FlatPoint forward_flatten(const std::complex<double>& w);

/// Pointwise dilatation of the inverse map,
///   K(z) = (1 + csch^2(-y)) / (coth(-y) csch(-y)),
/// which equals cosh(-y); the two evaluations are checked against each other
/// to 1e-12 (ConsistencyError on disagreement).  K(x + 0i) = 1 (axis limit).
double dilatation(const FlatPoint& z);

/// The quoted quotient alone, evaluated in extended precision.
double dilatation_quoted(double minus_y);

/// Uniform dilatation bound over { -D <= y < 0 }:
///   k0 = (1 + csch^2 D) / (coth D csch D)  ( = cosh D ).
double k0_bound(double D);

/// |mu| of the inverse map at z, estimated by central finite differences
/// with step h; throws StepTooLarge if h reaches past the axis.
double beltrami_estimate(const FlatPoint& z, double h);

/// Dilatation implied by a Beltrami modulus: (1 + |mu|) / (1 - |mu|).
double implied_dilatation(double mu_abs);

}  // namespace ctsurf

#pragma once

#include "ctsurf/hyptrig.hpp"
#include "ctsurf/quadrature.hpp"

namespace ctsurf {

/// One foliated Lambert quadrilateral in flattened coordinates.  The region
/// is { (x, y) : 0 <= x <= o_len, 0 <= y <= d_h(x, p_len) } with
/// v(x, y) = y / d_h(x); the transverse measure on each vertical side is
/// `mass`.  (The region is the reflection of the below-axis picture; the
/// Dirichlet integral is reflection-invariant.)
struct QuadFoliation {
    double p_len;  // seed arc: d_h(0) = p_len
    double o_len;  // axis length along the orthogeodesic
    double mass;   // transverse-measure scaling in (0, 1]

    QuadFoliation(double p, double o, double m = 1.0);
};

struct EnergyEstimate {
    double numeric;         // quadrature value (scaled by mass^2)
    double analytic_bound;  // closed-form majorant (scaled by mass^2)
    double quad_error;      // quadrature error estimate
};

/// Foliation value in [0, 1]; 0 on the axis, 1 on the far boundary curve.
double v_value(double x, double y, const QuadFoliation& f);

/// Exact squared partials of v at an interior point:
///   gx2 = y^2 d^{-4} (1 - (tanh p cosh x)^2)^{-2} tanh^2(p) sinh^2(x)
///   gy2 = d^{-2}
struct GradientSq {
    double gx2, gy2;
};
GradientSq v_gradient(double x, double y, const QuadFoliation& f);

/// Dirichlet integral of mass * v over the quadrilateral.  The inner y
/// integral is closed-form; the x integral is adaptive:
///   integral_0^o [ A(x)^2/(3 d(x)) + 1/d(x) ] dx,
///   A(x) = tanh(p) sinh(x) / (1 - (tanh p cosh x)^2).
/// analytic_bound = mass^2 [ cosh^4(d(o)) tanh(p) sinh(o)/3 + (pi/2) coth(p) ].
EnergyEstimate quad_dirichlet(const QuadFoliation& f, double rel_tol = kQuadRelTol);

/// Energy of the four unscaled quadrilaterals P, R, Q, S of one pair of
/// pants; analytic_bound = kPantsEnergy * (1/l1 + 1/l2 + 1/l3).
EnergyEstimate pants_dirichlet(const PantsTriple& t, double rel_tol = kQuadRelTol);

/// Split of pants_dirichlet by channel (P+R faces cuff 2, Q+S faces cuff 3).
struct PantsEnergySplit {
    EnergyEstimate pr, qs;
};
PantsEnergySplit pants_dirichlet_split(const PantsTriple& t,
                                       double rel_tol = kQuadRelTol);

/// Transverse measure induced on a vertical side (either cuff arc or far
/// orthogeodesic side) by the scaled foliation.
double side_measure(const QuadFoliation& f);

/// Energy-transfer factor between the flattened chart and the hyperbolic
/// quadrilateral: (1 + csch^2 D) / (coth D csch D), which simplifies to
/// cosh D.  D bounds the chart's distance from the axis.
double qc_comparison_factor(double D);

}  // namespace ctsurf

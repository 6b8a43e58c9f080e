#pragma once

#include <cstddef>

#include "ctsurf/constants.hpp"
#include "ctsurf/errors.hpp"

namespace ctsurf {

/// Cuff lengths (l1, l2, l3) of one geodesic pair of pants.  l1 is the cuff
/// the derived front geometry is seated on.  Lengths must be finite and in
/// [kMinCuffLength, kMaxCuffLength].
struct PantsTriple {
    double l1, l2, l3;

    PantsTriple(double a, double b, double c);

    PantsTriple swapped23() const { return {l1, l3, l2}; }
};

/// Derived arc lengths of the front right-angled hexagon and its
/// quadrilateral decomposition.
///
/// The front hexagon has sides (l1/2, o12, l2/2, o23, l3/2, o13).  The
/// orthogeodesic a1 from cuff 1 to o23 splits it into two pentagons and the
/// cuff-1 half into p (facing cuff 2) and q (facing cuff 3).  The
/// orthogeodesics b1p, b1q from a1's foot on o23 to o12 resp. o13 cut the
/// pentagons into Lambert quadrilaterals P, R (cuff-2 pentagon) and Q, S:
///
///   P: sides (p, oP, b1p, part of a1)         axis oP  on o12, seed p
///   R: sides (l2/2, oR, b1p, s)               axis oR  on o12, seed l2/2
///   Q: sides (q, oQ, b1q, part of a1)         axis oQ  on o13, seed q
///   S: sides (l3/2, oS, b1q, o23 minus s)     axis oS  on o13, seed l3/2
///
/// arc2 and arc3 are those R/S cuff arcs (the front cuff halves l2/2, l3/2).
struct FrontGeometry {
    double p, q;
    double a1;
    double b1p, b1q;
    double oP, oR, oQ, oS;
    double s;
    double o12, o13;
    double log_cosh_o12, log_cosh_o13;
    double arc2, arc3;
};

/// cosh of the orthogeodesic length between cuffs 1 and 2:
///   cosh(l3/2) / (sinh(l1/2) sinh(l2/2)) + coth(l1/2) coth(l2/2)
double cosh_o12(const PantsTriple& t);

/// log(cosh o12); never overflows for valid triples.
double log_cosh_o12(const PantsTriple& t);

/// Length of the cuff-1 arc p:
///   atanh( sinh(l1/2) / (cosh(l3/2)/cosh(l2/2) + cosh(l1/2)) )
/// q is arc_p of the triple with cuffs 2 and 3 swapped.
double arc_p(const PantsTriple& t);

/// Full derived-arc chain.  The canonical b1p (sinh p * cosh a1) is
/// cross-checked against the second Lambert form (sinh(l2/2) * cosh s);
/// disagreement beyond kConsistencyTol relative throws ConsistencyError.
FrontGeometry front_geometry(const PantsTriple& t);

/// Leaf-depth function of the flattened quadrilateral,
///   d_h(x) = atanh(cosh(x) tanh(p)),
/// defined while cosh(x) tanh(p) < 1 (throws DomainError otherwise).
double d_h(double x, double p);

/// Relative lengths (l0, l1) = (p, q) / (l1/2); they sum to 1.
struct RelativeLengths {
    double l0, l1;
};
RelativeLengths relative_lengths(const PantsTriple& t);

/// Signed distance of the relative lengths to the two-sided bound
///   [ e^{-C2/(n+1)^2} / 2 , e^{+C2/(n+1)^2} / 2 ].
/// Requires max(l2, l3) <= C2/(n+1)^2 (PreconditionError otherwise).
/// Nonnegative iff both relative lengths lie inside the bound.
double relative_length_margin(const PantsTriple& t, double c2, int n);

/// Uniform-constant checks on one triple with max(l1, l2) <= B.
struct AuxInequalities {
    bool b1_bound_ok;      // b1p <= asinh(sinh A cosh(asinh(coth A))), A = max(l2/2, p)
    double denom_bound_c;  // max over sampled x in [0, oP] of 1/(1 - (tanh p cosh x)^2)
    double atanh_linear_c; // max over sampled x of atanh(tanh p cosh x)/(tanh p cosh x)
    double p_vs_l1_ratio;  // p / l1
    double b1;             // observed b1p (feeds the empirical D)
};
AuxInequalities aux_inequalities(const PantsTriple& t, double B,
                                 std::size_t samples = 64);

/// sinh(x)/(A + cosh(x)) - tanh(x/(2A)); has the sign of A-1 for small x>0.
double trig_gap(double x, double A);

/// atanh with its argument checked against [0, 1).
double checked_atanh(double u);

/// acosh via log1p; accurate near 1 and for large arguments.
double stable_acosh(double z);

/// acosh(1 + e) from the excess e itself (no precision lost adding 1).
double stable_acosh1p(double e);

/// cosh(o12) - 1 in a cancellation-free form.
double cosh_o12_excess(const PantsTriple& t);

}  // namespace ctsurf
